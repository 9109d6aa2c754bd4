from .exceptions import (  # noqa
    BadMagic,
    CoilIndexOutOfRange,
    ConfigError,
    DegenerateSupport,
    DimensionMismatch,
    DimensionNotDivisible,
    EmptyHeader,
    IndefinitenessDetected,
    Infeasible,
    InvalidParameter,
    IOFormatError,
    KeepOutOfRange,
    NonFiniteBreakdown,
    NonFiniteValue,
    NonPowerOfTwo,
    NotPositiveDefinite,
    NumericalError,
    SBPreconException,
    SettingDoesNotExist,
    SingularDiagonal,
    SingularPreconditioner,
    SizeCapExceeded,
    TruncatedPayload,
    VersionUnsupported,
)
