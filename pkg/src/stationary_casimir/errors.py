"""Exception types shared across the package."""


class CasimirError(Exception):
    """Base class for all errors raised by this package."""


class OutOfDomainError(CasimirError):
    """A coordinate lies outside a metric model's declared z-domain."""


class InvalidMetricError(CasimirError):
    """Metric components violate the required (+,-,-,-) signature structure."""


class AccuracyFloorError(CasimirError):
    """Requested evaluation lies below a documented accuracy floor."""


class InternalConsistencyError(CasimirError):
    """Two independent evaluation paths inside one operation disagree."""


class ConfigError(CasimirError):
    """A run-configuration file is malformed."""


class OracleConvergenceError(CasimirError):
    """A reference computation could not certify its tail or residual bound."""
