"""Exception types shared across the package."""


class AqdsimError(Exception):
    """Base class for all errors raised by this package."""


class LayoutError(AqdsimError):
    """Operands live on different or invalid Hilbert-space layouts."""


class HermitianError(AqdsimError):
    """An operation required a Hermitian operator and did not get one."""


class StateError(AqdsimError):
    """A density matrix violated its construction contract."""


class ModelError(AqdsimError):
    """Invalid model specification (kind/lengths/frequencies)."""


class ResonanceError(ModelError):
    """A dispersive expansion was requested too close to resonance."""


class MappingError(AqdsimError):
    """Invalid condensate parameters."""


class IntegrationError(AqdsimError):
    """The open-system integrator detected a numerical failure."""


class ConfigError(AqdsimError):
    """A run-configuration document failed to parse or validate."""


class TruncationWarning(UserWarning):
    """Raised (as a warning) when a Fock-space truncation loses weight."""
