import abc

import six

from sbprecon import default_settings as settings
from sbprecon.exceptions import SettingDoesNotExist


@six.add_metaclass(abc.ABCMeta)
class Reader:
    @abc.abstractmethod
    def read(self, kind: str) -> dict:
        """

        :param kind: preconditioner kind, one of none, jacobi, circulant
        :return:
        keyword settings of the preconditioner class, for example for circulant:
        {
            'SINGULAR_TOLERANCE': 1e-14,
        }
        """
        pass

    def klass(self, kind: str) -> str:
        try:
            return settings.PRECONDITIONER_CLASS[str(kind)]
        except KeyError:
            raise SettingDoesNotExist(f"no preconditioner class registered for {kind!r}")

    @abc.abstractmethod
    def default(self) -> str:
        pass

    @abc.abstractmethod
    def get(self, name: str):
        """Value of an upper-case setting name, e.g. ``SIZE`` or ``N_OUTER``."""
        pass
