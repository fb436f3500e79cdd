"""Exception hierarchy for the simulation kernel."""


class GadError(Exception):
    """Base class for every error raised by gad_negativity."""


class InvalidStateError(GadError, ValueError):
    """Malformed two-qubit state data."""


class UnphysicalParametersError(InvalidStateError):
    """Constructor parameters describe a matrix with a negative eigenvalue."""


class NonHermitianError(InvalidStateError):
    """Matrix hermiticity defect exceeds the tolerance."""


class NonPhysicalStateError(InvalidStateError):
    """Density matrix failed validation where physicality is required."""


class ChannelError(GadError):
    """Base class for channel construction and application errors."""


class ParameterRangeError(ChannelError, ValueError):
    """Channel parameter outside [0, 1] (or a negative rate/time)."""


class IncompleteKrausSetError(ChannelError):
    """Kraus set does not satisfy sum(U^dag U) = I within tolerance."""


class ChannelAnnihilationError(ChannelError):
    """Correlated map sent the state to (numerically) zero trace."""


class NumericalError(GadError):
    """Base class for numerical failures."""


class EigensolverError(NumericalError):
    """Jacobi iteration did not converge or failed its residual check."""


class NonPhysicalOutputError(NumericalError):
    """Channel output from a physical input failed density validation."""


class ConfigError(GadError):
    """Invalid run configuration."""
