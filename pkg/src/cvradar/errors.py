"""Exception types shared across the package."""


class CvRadarError(Exception):
    """Base class for all package-specific failures."""


class ConvergenceError(CvRadarError):
    """An iterative solve did not converge; carries the last residual seen."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class StabilityError(CvRadarError):
    """A drift matrix is not Hurwitz; carries the offending spectral abscissa."""

    def __init__(self, message: str, abscissa: float | None = None):
        super().__init__(message)
        self.abscissa = abscissa


class NumericalError(CvRadarError):
    """A dense linear-algebra routine failed (singular system, eigensolver breakdown)."""


class PhysicalityError(CvRadarError):
    """A covariance matrix violates the uncertainty bound where a physical state is required."""


class PipelineStageError(CvRadarError):
    """A radar-chain stage failed; carries the zero-based stage index."""

    def __init__(self, stage_index: int, label: str, original: Exception):
        super().__init__(f"stage {stage_index} ({label}): {original}")
        self.stage_index = stage_index
        self.label = label


class ScenarioError(CvRadarError):
    """A scenario file failed to parse or validate."""
