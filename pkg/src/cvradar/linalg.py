"""Small dense-matrix numerics for stationary covariances.

Stationary second moments of a linear Langevin system ``du = A u dt + dW``
with diffusion ``D`` solve the Lyapunov equation ``A V + V A^T + D = 0``.
Matrices here never exceed 6x6, so the equation is solved by Kronecker
vectorization and one dense linear solve.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NumericalError, StabilityError

# Canonical quadrature ordering of the six-dimensional fluctuation vector:
# microresonator position/momentum, optical cavity X/Y, microwave cavity X/Y.
QUADRATURE_ORDER = ("q_x", "p_x", "X_c", "Y_c", "X_w", "Y_w")

# Residual tolerance of solve_lyapunov, relative to max(1, ||D||_max).
LYAPUNOV_RTOL = 1e-10


def as_matrix(obj) -> np.ndarray:
    """Return the underlying float ndarray of a matrix-like object."""
    return np.asarray(getattr(obj, "entries", obj), dtype=float)


def _default_labels(dim: int) -> tuple[str, ...]:
    if dim == 6:
        return QUADRATURE_ORDER
    return tuple(f"{q}_{i}" for i in range(dim // 2) for q in ("X", "Y"))


@dataclass(frozen=True)
class CovarianceState:
    """Symmetrized covariance matrix with its quadrature ordering tag.

    The matrix is symmetrized and write-locked on construction.  Physicality
    (all symplectic eigenvalues at least the vacuum value 1/2) is checked by
    ``entanglement.is_physical``, not here.
    """

    entries: np.ndarray
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        m = np.array(as_matrix(self.entries))
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2 != 0:
            raise ValueError(f"covariance matrix must be square of even size, got {m.shape}")
        labels = tuple(self.labels) if self.labels else _default_labels(m.shape[0])
        if len(labels) != m.shape[0]:
            raise ValueError(
                f"{len(labels)} labels for a {m.shape[0]}x{m.shape[0]} matrix"
            )
        sym = 0.5 * (m + m.T)
        sym.setflags(write=False)
        object.__setattr__(self, "entries", sym)
        object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def spectral_abscissa(a) -> float:
    """Largest real part over the eigenvalues of a square real matrix (1/s)."""
    m = as_matrix(a)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    try:
        eigenvalues = np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigenvalue computation failed: {exc}") from exc
    return float(eigenvalues.real.max())


def is_hurwitz(a) -> bool:
    """True iff every eigenvalue of ``a`` has a negative real part."""
    return spectral_abscissa(a) < 0.0


def solve_lyapunov(a, d, labels: tuple[str, ...] = ()) -> CovarianceState:
    """Solve ``A V + V A^T + D = 0`` for the stationary covariance ``V``.

    ``A`` must be Hurwitz (checked) and ``D`` symmetric positive
    semidefinite.  The n^2 unknowns are solved densely through the Kronecker
    form ``(A (x) I + I (x) A) vec(V) = -vec(D)``; the result is symmetrized
    and its residual is verified against ``LYAPUNOV_RTOL * max(1, ||D||_max)``
    with one refinement pass before giving up.
    """
    am = as_matrix(a)
    dm = as_matrix(d)
    if am.shape != dm.shape or am.ndim != 2 or am.shape[0] != am.shape[1]:
        raise ValueError(f"shape mismatch: A {am.shape}, D {dm.shape}")
    abscissa = spectral_abscissa(am)
    if abscissa >= 0.0:
        raise StabilityError(
            f"drift matrix is not Hurwitz (spectral abscissa {abscissa:.6g} >= 0)",
            abscissa=abscissa,
        )
    n = am.shape[0]

    # Joint time rescaling A -> A/s, D -> D/s leaves V unchanged and keeps
    # the vectorized system well scaled for physical (rad/s) magnitudes.
    scale = max(np.abs(am).max(), 1.0)
    a_s = am / scale
    d_s = dm / scale
    eye = np.eye(n)
    system = np.kron(a_s, eye) + np.kron(eye, a_s)

    tol = LYAPUNOV_RTOL * max(1.0, np.abs(dm).max())

    def _residual(v: np.ndarray) -> np.ndarray:
        return am @ v + v @ am.T + dm

    try:
        v = np.linalg.solve(system, -d_s.ravel()).reshape(n, n)
        v = 0.5 * (v + v.T)
        res = _residual(v)
        if np.abs(res).max() >= tol:
            correction = np.linalg.solve(system, -(res / scale).ravel()).reshape(n, n)
            v = v + 0.5 * (correction + correction.T)
            res = _residual(v)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"vectorized Lyapunov system is singular: {exc}") from exc

    res_max = float(np.abs(res).max())
    if res_max >= tol:
        raise NumericalError(
            f"Lyapunov residual {res_max:.3e} exceeds tolerance {tol:.3e}"
        )
    return CovarianceState(v, labels)


def symplectic_form(n_modes: int) -> np.ndarray:
    """Block-diagonal symplectic form built from J = [[0, 1], [-1, 0]]."""
    j = np.array([[0.0, 1.0], [-1.0, 0.0]])
    out = np.zeros((2 * n_modes, 2 * n_modes))
    for k in range(n_modes):
        out[2 * k : 2 * k + 2, 2 * k : 2 * k + 2] = j
    return out


def symplectic_eigenvalues(v) -> np.ndarray:
    """Symplectic spectrum of a symmetric covariance matrix, sorted ascending.

    Returns the moduli of the eigenvalues of ``i Omega V``, one per mode
    (each appears twice in the raw spectrum).  Physical states satisfy
    ``nu >= 1/2`` in the vacuum-variance-1/2 convention.
    """
    m = as_matrix(v)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2 != 0:
        raise ValueError(f"expected a square even-sized matrix, got {m.shape}")
    n_modes = m.shape[0] // 2
    try:
        raw = np.linalg.eigvals(symplectic_form(n_modes) @ m)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigenvalue computation failed: {exc}") from exc
    return np.sort(np.abs(raw))[::2].copy()
