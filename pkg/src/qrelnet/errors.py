"""Exception types shared across the package.

Every error carries a stable machine-readable ``code`` so the command-line
front end can report failures without string matching.
"""


class QrelnetError(ValueError):
    """Base class for rejected inputs and violated preconditions."""

    code = "invalid_input"

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


class CapacityError(QrelnetError):
    """Input exceeds a hard size cap."""

    code = "capacity"


class WidthMismatchError(QrelnetError):
    """Object sizes disagree (edge counts, state widths, probability lists)."""

    code = "width_mismatch"


class OverlapError(QrelnetError):
    """Two graphs overlap on a different vertex set than the declared one."""

    code = "overlap_violation"


class SublayerError(QrelnetError):
    """Quantum subgraph is not vertex-contained in the classical one."""

    code = "sublayer_violation"


class NormalizationError(QrelnetError):
    """State vector norm is too far from one."""

    code = "not_normalized"
