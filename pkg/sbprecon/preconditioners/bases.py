import abc
import logging
import time
import typing

import numpy as np
import six

from ..encoding import EncodingContext
from ..exceptions import DimensionMismatch, SettingDoesNotExist
from ..models import PreconditionerType
from ..types import ApplyOperator, ComplexImage


@six.add_metaclass(abc.ABCMeta)
class BasePreconditioner:
    """Base preconditioner M^{-1} for the Split Bregman system A x = b."""

    _setting_names: typing.Tuple[str, ...] = ()
    _ctx: EncodingContext = None
    _build_seconds: float = 0.0
    _is_built: bool = False

    def __init__(self, ctx: EncodingContext, **kwargs):
        self._ctx = ctx
        self.default_setting_kwargs = kwargs
        self.set_default_settings()

    def set_default_settings(self):
        """Copy the class settings, like the singularity tolerance, from the reader kwargs."""
        for item in self._setting_names:
            if item not in self.default_setting_kwargs:
                raise SettingDoesNotExist(f"{item} does not exist in default_setting_kwargs")
            setattr(self, f"_{item.lower()}", self.default_setting_kwargs[item])

    @abc.abstractmethod
    def get_preconditioner_type(self) -> PreconditionerType:
        pass

    @abc.abstractmethod
    def build(self):
        """Compute the stored diagonal; called once before the Bregman loop."""
        pass

    @abc.abstractmethod
    def apply(self, r: ComplexImage) -> ComplexImage:
        pass

    def ready(self) -> "BasePreconditioner":
        """Build and record the wall-clock build time."""
        logging.debug("Build preconditioner", extra={"kind": str(self.get_preconditioner_type())})
        started = time.perf_counter()
        self.build()
        self._build_seconds = time.perf_counter() - started
        self._is_built = True
        logging.debug(
            "Preconditioner ready",
            extra={"kind": str(self.get_preconditioner_type()), "build_seconds": self._build_seconds},
        )
        return self

    @property
    def build_seconds(self) -> float:
        return self._build_seconds

    @property
    def ctx(self) -> EncodingContext:
        return self._ctx

    def as_operator(self) -> typing.Optional[ApplyOperator]:
        """The operator handed to pcg; None means no preconditioning."""
        return self.apply

    def _check(self, r: np.ndarray):
        if np.shape(r) != self._ctx.shape:
            raise DimensionMismatch(f"residual shape {np.shape(r)} does not match {self._ctx.shape}")
