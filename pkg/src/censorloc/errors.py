"""Exception types raised across the package."""


class CensorLocError(Exception):
    """Base class for all package errors."""


class InvalidInput(CensorLocError, ValueError):
    """Arguments violate an operation's preconditions."""


class InvalidObservation(CensorLocError, ValueError):
    """The detecting-sensor set has an empty possible target region."""


class InvalidConfig(CensorLocError, ValueError):
    """A scenario configuration is inconsistent."""


class OracleResolutionError(CensorLocError, RuntimeError):
    """The raster oracle found no cells inside the region."""
