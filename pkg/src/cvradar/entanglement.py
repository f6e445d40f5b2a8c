"""Two-mode covariance blocks and the separability witness.

For a two-mode covariance matrix ``[[A, C], [C^T, B]]`` the witness

    lambda = det(A) det(B) + (1/4 - |det C|)^2
             - tr(A J C J B J C^T J) - (det(A) + det(B))/4

with ``J = [[0, 1], [-1, 0]]`` is non-negative exactly for separable
Gaussian states (vacuum variance 1/2); a negative value certifies
entanglement.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import CovarianceState, as_matrix, symplectic_eigenvalues

_J = np.array([[0.0, 1.0], [-1.0, 0.0]])

# Index ranges of each mode in the canonical 6x6 quadrature ordering.
_MODE_SLICES = {"MR": (0, 2), "OC": (2, 4), "MC": (4, 6)}

PAIRS = ("OC-MC", "OC-MR", "MR-MC")

PHYSICALITY_TOL = 1e-9


@dataclass(frozen=True)
class BlockDecomposition:
    """2x2 blocks of a two-mode covariance matrix."""

    block_a: np.ndarray  # first mode
    block_b: np.ndarray  # second mode
    block_c: np.ndarray  # cross correlations


def split_blocks(v4) -> BlockDecomposition:
    """Split a 4x4 covariance matrix into its A, B and C blocks."""
    m = as_matrix(v4)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got {m.shape}")
    return BlockDecomposition(
        block_a=m[:2, :2].copy(),
        block_b=m[2:, 2:].copy(),
        block_c=m[:2, 2:].copy(),
    )


def extract_pair_cm(v6: CovarianceState, pair: str) -> CovarianceState:
    """Select the two-mode covariance matrix of a named mode pair.

    ``v6`` must carry the canonical six-quadrature ordering; the first mode
    of the result is the first name in the pair label.
    """
    if pair not in PAIRS:
        raise ValueError(f"unknown pair {pair!r}; expected one of {PAIRS}")
    m = as_matrix(v6)
    if m.shape != (6, 6):
        raise ValueError(f"expected a 6x6 matrix, got {m.shape}")
    first, second = pair.split("-")
    idx = list(range(*_MODE_SLICES[first])) + list(range(*_MODE_SLICES[second]))
    sub = m[np.ix_(idx, idx)]
    labels = tuple(v6.labels[i] for i in idx) if isinstance(v6, CovarianceState) else ()
    return CovarianceState(sub, labels)


def sph_lambda(v4) -> float:
    """Separability witness of a two-mode covariance matrix.

    Negative return certifies entanglement; non-negative means separable.
    """
    blocks = split_blocks(v4)
    a, b, c = blocks.block_a, blocks.block_b, blocks.block_c
    det_a = float(np.linalg.det(a))
    det_b = float(np.linalg.det(b))
    det_c = float(np.linalg.det(c))
    cross = float(np.trace(a @ _J @ c @ _J @ b @ _J @ c.T @ _J))
    return det_a * det_b + (0.25 - abs(det_c)) ** 2 - cross - 0.25 * (det_a + det_b)


def is_physical(v4, tol: float = PHYSICALITY_TOL) -> bool:
    """True iff every symplectic eigenvalue reaches the vacuum floor 1/2."""
    return bool(symplectic_eigenvalues(v4).min() >= 0.5 - tol)
