import json
import logging

from sbprecon.exceptions import ConfigError

from .defaults import DefaultReader


class JsonReader(DefaultReader):
    """Layers a JSON run configuration on top of the package settings.

    Keys mirror the command line flags in snake case (``size``, ``coils``, ``precond``, ``set``...)
    and are looked up by the upper-case setting name.
    """

    _aliases = {
        "PRECOND": "PRECONDITIONER_DEFAULT",
        "SET": "REGULARIZATION_SET",
        "OUTER": "N_OUTER",
        "INNER": "N_INNER",
        "EPS": "EPSILON",
        "OUT": "OUT_DIR",
        "DATA": "DATA_DIR",
        "NOISE": "NOISE_STD",
        "SIZES": "BENCH_SIZES",
        "SENS_SUPPORT": "SENSITIVITY_SUPPORT",
    }

    def __init__(self, path=None, values: dict = None):
        self._values = {}
        if path:
            try:
                with open(path) as handle:
                    loaded = json.load(handle)
            except (OSError, ValueError) as e:
                raise ConfigError(f"can not read config {path}: {e}")
            if not isinstance(loaded, dict):
                raise ConfigError(f"config {path} must hold a JSON object")
            self.update(loaded)
            logging.debug("Load run config", extra={"path": str(path), "keys": sorted(loaded)})
        if values:
            self.update(values)

    def update(self, values: dict):
        for key, value in values.items():
            if value is None:
                continue
            name = key.upper().replace("-", "_")
            self._values[self._aliases.get(name, name)] = value

    def default(self) -> str:
        return self._values.get("PRECONDITIONER_DEFAULT", super().default())

    def get(self, name: str):
        if name in self._values:
            return self._values[name]
        return super().get(name)
