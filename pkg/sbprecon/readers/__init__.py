from .bases import Reader  # noqa
from .defaults import DefaultReader  # noqa
from .configs import JsonReader  # noqa
