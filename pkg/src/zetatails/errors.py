"""Exception types shared by all modules."""


class ZetaTailsError(Exception):
    pass


class DomainError(ZetaTailsError, ValueError):
    """Argument outside the region where a formula or bound is valid."""


class CapacityError(ZetaTailsError):
    """A table or budget limit was exceeded."""


class PoleError(DomainError):
    """The argument box contains the pole of zeta at s = 1."""


class ParameterError(ZetaTailsError, ValueError):
    """Bad algorithmic parameters (truncation order too small, etc.)."""


class ContractError(ZetaTailsError, ValueError):
    """Caller did not supply a required certified quantity."""


class InadmissibleError(ZetaTailsError, ValueError):
    """Smoothing parameters outside the admissible region."""


class AssemblyError(ZetaTailsError):
    """Term bookkeeping hit a pattern it cannot absorb soundly."""


class DivergenceError(ZetaTailsError, ValueError):
    """The requested quantity is infinite."""


class ConfigError(ZetaTailsError, ValueError):
    """Malformed run configuration."""
