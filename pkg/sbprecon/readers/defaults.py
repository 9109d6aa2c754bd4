from sbprecon import default_settings as settings
from sbprecon.exceptions import SettingDoesNotExist

from .bases import Reader


class DefaultReader(Reader):
    def read(self, kind: str) -> dict:
        """

        :param kind: preconditioner kind
        :return: settings.PRECONDITIONERS[kind]
        """
        try:
            return dict(settings.PRECONDITIONERS[str(kind)])
        except KeyError:
            raise SettingDoesNotExist(f"no settings for preconditioner {kind!r}")

    def default(self) -> str:
        return settings.PRECONDITIONER_DEFAULT

    def get(self, name: str):
        if not hasattr(settings, name):
            raise SettingDoesNotExist(f"{name} does not exist in settings")
        return getattr(settings, name)
