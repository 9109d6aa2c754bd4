"""Default settings for reconstruction runs.

Overrides come from a JSON object stored in the file named by the ``SBPRECON_SETTINGS``
environment variable, for example ``{"PRECONDITIONER_DEFAULT": "jacobi", "SIZE": 128}``.
"""

import json
import logging
import math
import os

from .exceptions import SettingDoesNotExist


def _load_overrides() -> dict:
    path = os.environ.get("SBPRECON_SETTINGS")
    if not path:
        return {}
    try:
        with open(path) as handle:
            overrides = json.load(handle)
    except (OSError, ValueError) as e:
        raise SettingDoesNotExist(f"can not read settings file {path}: {e}")
    logging.debug("Load settings overrides", extra={"path": path, "keys": sorted(overrides)})
    return overrides


_SBPRECON = _load_overrides()

PRECONDITIONER_CLASS = _SBPRECON.get(
    "PRECONDITIONER_CLASS",
    {
        "none": "sbprecon.preconditioners.IdentityPreconditioner",
        "jacobi": "sbprecon.preconditioners.JacobiPreconditioner",
        "circulant": "sbprecon.preconditioners.CirculantPreconditioner",
    },
)
PRECONDITIONERS = _SBPRECON.get(
    "PRECONDITIONERS",
    {
        "none": {},
        "jacobi": {"SINGULAR_TOLERANCE": 1e-14},
        "circulant": {"SINGULAR_TOLERANCE": 1e-14},
    },
)
PRECONDITIONER_DEFAULT = _SBPRECON.get("PRECONDITIONER_DEFAULT", "circulant")
SETTING_VALUE_READER_CLASS = _SBPRECON.get("SETTING_VALUE_READER_CLASS", "sbprecon.readers.DefaultReader")

# Reconstruction
REGULARIZATION_SET = _SBPRECON.get("REGULARIZATION_SET", 1)
N_OUTER = _SBPRECON.get("N_OUTER", 20)
N_INNER = _SBPRECON.get("N_INNER", 1)
EPSILON = _SBPRECON.get("EPSILON", 1e-3)
MAX_PCG_ITERS = _SBPRECON.get("MAX_PCG_ITERS", 1000)
WAVELET = _SBPRECON.get("WAVELET", "db2")
WAVELET_LEVELS = _SBPRECON.get("WAVELET_LEVELS", 4)
KEEP_COILS = _SBPRECON.get("KEEP_COILS", None)

# Simulation
SIZE = _SBPRECON.get("SIZE", 256)
COILS = _SBPRECON.get("COILS", 12)
ACCEL = _SBPRECON.get("ACCEL", 4)
MASK = _SBPRECON.get("MASK", "cartesian")
CENTER_FRACTION = _SBPRECON.get("CENTER_FRACTION", 0.08)
DENSITY_POWER = _SBPRECON.get("DENSITY_POWER", 3)
PHANTOM = _SBPRECON.get("PHANTOM", "shepp-logan")
NOISE_STD = _SBPRECON.get("NOISE_STD", 0.0)
# Phantoms are generated in [0, 1]; k-space is simulated at this intensity so that the
# shrink thresholds 1/lambda and 1/gamma act on scanner-like magnitudes.
SIGNAL_SCALE = _SBPRECON.get("SIGNAL_SCALE", 1000.0)
COIL_LAYOUT = _SBPRECON.get("COIL_LAYOUT", "ring")
COIL_WIDTH = _SBPRECON.get("COIL_WIDTH", 0.5)
COIL_PHASE_GRADIENT = _SBPRECON.get("COIL_PHASE_GRADIENT", math.pi)
SUPPORT_THRESHOLD = _SBPRECON.get("SUPPORT_THRESHOLD", 0.05)
# "coils" thresholds the summed coil energy, which covers the whole FOV for the ring layout;
# "object" zeros the maps outside the phantom, leaving the exterior without data.
SENSITIVITY_SUPPORT = _SBPRECON.get("SENSITIVITY_SUPPORT", "coils")
SEED = _SBPRECON.get("SEED", 0)

# Commands
OUT_DIR = _SBPRECON.get("OUT_DIR", "out")
# recon reads its inputs from OUT_DIR unless DATA_DIR is set
DATA_DIR = _SBPRECON.get("DATA_DIR", None)
BENCH_SIZES = _SBPRECON.get("BENCH_SIZES", [128, 256])
FLOPS_LOG2_SIZES = _SBPRECON.get("FLOPS_LOG2_SIZES", list(range(10, 31, 2)))
