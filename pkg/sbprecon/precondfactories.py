import importlib
import logging

from . import default_settings as settings
from .encoding import EncodingContext
from .exceptions import SettingDoesNotExist
from .models import PreconditionerType
from .preconditioners import BasePreconditioner


class PreconditionerFactory:
    def __init__(self, reader=None):
        logging.debug("Create preconditioner factory")
        self._settings_reader = reader or self._import(settings.SETTING_VALUE_READER_CLASS)()

    @staticmethod
    def _import(path):
        package, attr = path.rsplit(".", 1)
        klass = getattr(importlib.import_module(package), attr)
        return klass

    def _import_preconditioner(self, kind: PreconditionerType):
        """
        helper to import preconditioner classes from string paths.

        raises SettingDoesNotExist if a preconditioner can't be found by its kind
        """
        try:
            precond_class = self._import(self._settings_reader.klass(kind))
        except (ImportError, AttributeError) as e:
            raise SettingDoesNotExist(f"can not import preconditioner class for {kind}: {e}")
        logging.debug("Import preconditioner class", extra={"kind": str(kind)})

        return precond_class, self._settings_reader.read(kind)

    def create(self, ctx: EncodingContext, kind: PreconditionerType = None) -> BasePreconditioner:
        """Build the preconditioner; the diagonal is computed here, once per reconstruction."""
        if not kind:
            kind = self._settings_reader.default()
        try:
            kind = PreconditionerType(str(kind))
        except ValueError:
            raise SettingDoesNotExist(
                f"unknown preconditioner {kind!r}, expected one of {PreconditionerType.choices()}"
            )
        logging.debug("Request create preconditioner", extra={"kind": str(kind)})

        precond_klass, precond_settings = self._import_preconditioner(kind)
        preconditioner = precond_klass(ctx, **precond_settings)

        return preconditioner.ready()
