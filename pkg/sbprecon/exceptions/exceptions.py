class SBPreconException(Exception):
    """Split Bregman preconditioning exception"""


class ConfigError(SBPreconException):
    """The requested configuration is invalid"""


class NumericalError(SBPreconException):
    """The requested computation failed numerically"""


class IOFormatError(SBPreconException):
    """The requested file can not be read or written"""


class SettingDoesNotExist(ConfigError):
    """The requested setting does not exist"""


class InvalidParameter(ConfigError):
    """The requested parameter value is out of range"""


class Infeasible(ConfigError):
    """The requested sampling pattern can not be built"""


class KeepOutOfRange(ConfigError):
    """The requested number of virtual coils is out of range"""


class NonPowerOfTwo(ConfigError):
    """The requested problem size is not a power of two"""


class SizeCapExceeded(ConfigError):
    """The requested dense construction is too large"""


class DimensionMismatch(SBPreconException):
    """The requested arrays do not share dimensions"""


class DimensionNotDivisible(DimensionMismatch):
    """The image size is not divisible by the wavelet decimation"""


class CoilIndexOutOfRange(SBPreconException):
    """The requested coil does not exist"""


class NonFiniteValue(NumericalError):
    """The image holds NaN or Inf"""


class DegenerateSupport(NumericalError):
    """The sensitivity support is empty"""


class SingularPreconditioner(NumericalError):
    """The circulant diagonal has a zero entry"""


class SingularDiagonal(NumericalError):
    """The system diagonal has a zero entry"""


class NonFiniteBreakdown(NumericalError):
    """The conjugate gradient recurrence produced NaN or Inf"""


class IndefinitenessDetected(NumericalError):
    """The operator is not positive definite along a search direction"""


class NotPositiveDefinite(NumericalError):
    """The dense system matrix has no Cholesky factor"""


class BadMagic(IOFormatError):
    """The file is not a CIMG file"""


class VersionUnsupported(IOFormatError):
    """The CIMG version is not supported"""


class TruncatedPayload(IOFormatError):
    """The CIMG payload is shorter than its header declares"""


class EmptyHeader(IOFormatError):
    """The CIMG header declares an empty grid or no coils"""
