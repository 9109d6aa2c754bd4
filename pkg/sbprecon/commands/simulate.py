import dataclasses
import logging
import os
import typing

import numpy as np

from sbprecon.calib import (
    CoilSimSpec,
    PhantomSpec,
    make_phantom,
    normalize_sensitivities,
    simulate_coils,
    simulate_kspace,
    support_mask,
)
from sbprecon.exceptions import InvalidParameter
from sbprecon.models import SamplingMask, SupportRule, write_cimg
from sbprecon.readers import Reader
from sbprecon.sampling import make_mask
from sbprecon.types import CoilSet, ComplexImage
from sbprecon.utils import write_pgm


@dataclasses.dataclass(frozen=True)
class SimulatedCase:
    """Ground truth at signal scale, normalized sensitivities, mask and undersampled k-space."""

    phantom: ComplexImage
    sens: CoilSet
    mask: SamplingMask
    kspace: CoilSet


def sensitivity_support(
    rule: str, phantom: ComplexImage, threshold: float
) -> typing.Union[np.ndarray, float]:
    """
    The support handed to normalize_sensitivities.

    ``coils``: a threshold on the summed coil energy; ``object``: the phantom support with holes filled.
    """
    try:
        rule = SupportRule(str(rule))
    except ValueError:
        raise InvalidParameter(
            f"unknown sensitivity support {rule!r}, expected one of {SupportRule.choices()}"
        )
    if rule == SupportRule.OBJECT:
        return support_mask(phantom, threshold)
    return threshold


def simulate_case(reader: Reader, size: typing.Optional[int] = None) -> SimulatedCase:
    size = int(size or reader.get("SIZE"))
    seed = int(reader.get("SEED"))
    phantom = make_phantom(PhantomSpec(kind=reader.get("PHANTOM"), m=size, n=size, seed=seed))
    coil_spec = CoilSimSpec(
        ncoils=int(reader.get("COILS")),
        layout=reader.get("COIL_LAYOUT"),
        gaussian_width=float(reader.get("COIL_WIDTH")),
        phase_gradient=float(reader.get("COIL_PHASE_GRADIENT")),
        support_threshold=float(reader.get("SUPPORT_THRESHOLD")),
        seed=seed,
    )
    raw = simulate_coils(coil_spec, size, size)
    support = sensitivity_support(reader.get("SENSITIVITY_SUPPORT"), phantom, coil_spec.support_threshold)
    sens = normalize_sensitivities(raw, support)
    mask = make_mask(
        reader.get("MASK"),
        size,
        size,
        float(reader.get("ACCEL")),
        center_fraction=float(reader.get("CENTER_FRACTION")),
        seed=seed,
        power=float(reader.get("DENSITY_POWER")),
    )
    scale = float(reader.get("SIGNAL_SCALE"))
    truth = scale * phantom
    noise_std = float(reader.get("NOISE_STD")) * scale
    kspace = simulate_kspace(truth, sens, mask, noise_std=noise_std, seed=seed + 1)
    logging.info(
        "Simulated case",
        extra={"size": size, "coils": sens.shape[0], "achieved_r": mask.achieved_r, "mask": str(mask.kind)},
    )
    return SimulatedCase(phantom=truth, sens=sens, mask=mask, kspace=kspace)


def cmd_simulate(reader: Reader) -> typing.List[str]:
    out_dir = reader.get("OUT_DIR")
    os.makedirs(out_dir, exist_ok=True)
    case = simulate_case(reader)
    written = []

    def target(name):
        path = os.path.join(out_dir, name)
        written.append(path)
        return path

    write_cimg(case.phantom, target("phantom.cimg"))
    write_cimg(case.sens, target("sens.cimg"))
    write_cimg(case.kspace, target("kspace.cimg"))
    write_cimg(case.mask.cells.astype(np.complex128), target("mask.cimg"))
    write_pgm(np.fft.fftshift(case.mask.cells), target("mask.pgm"))
    write_pgm(case.phantom, target("phantom.pgm"))
    logging.info("Simulate done", extra={"out_dir": out_dir, "files": len(written)})
    return written
