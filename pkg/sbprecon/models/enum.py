import enum


class TextChoices(str, enum.Enum):
    """String valued enum with a ``choices`` list for the command line."""

    def __str__(self):
        return self.value

    @classmethod
    def choices(cls):
        return [item.value for item in cls]


class PreconditionerType(TextChoices):
    NONE = "none"
    JACOBI = "jacobi"
    CIRCULANT = "circulant"


class MaskKind(TextChoices):
    CARTESIAN_LINES = "cartesian"
    RANDOM = "random"


class PhantomKind(TextChoices):
    SHEPP_LOGAN = "shepp-logan"
    BLOBS = "blobs"


class CoilLayout(TextChoices):
    RING = "ring"
    LINEAR_POSTERIOR = "linear-posterior"


class SupportRule(TextChoices):
    COILS = "coils"
    OBJECT = "object"
