import logging
import os
import typing

import numpy as np

from sbprecon import bregman
from sbprecon.calib import apply_compression, coil_images, compression_matrix, normalize_coil_images
from sbprecon.encoding import EncodingContext
from sbprecon.models import ConvergenceLog, ReconParams, SamplingMask, read_cimg, write_cimg, write_log_csv
from sbprecon.precondfactories import PreconditionerFactory
from sbprecon.readers import Reader
from sbprecon.transforms import WaveletSpec
from sbprecon.types import CoilSet, ComplexImage
from sbprecon.utils import relative_error, write_pgm


def recon_params(reader: Reader) -> ReconParams:
    return ReconParams.from_set(
        int(reader.get("REGULARIZATION_SET")),
        n_outer=int(reader.get("N_OUTER")),
        n_inner=int(reader.get("N_INNER")),
        epsilon=float(reader.get("EPSILON")),
        max_pcg_iters=int(reader.get("MAX_PCG_ITERS")),
        wavelet_levels=int(reader.get("WAVELET_LEVELS")),
    )


def compress(y: CoilSet, sens: CoilSet, keep: int) -> typing.Tuple[CoilSet, CoilSet]:
    """Virtual coils from the zero-filled coil images, applied alike to k-space and sensitivities."""
    images = normalize_coil_images(coil_images(y), sens)
    matrix = compression_matrix(images, keep)
    logging.info("Coil compression", extra={"coils": sens.shape[0], "keep": keep})
    return apply_compression(y, matrix), apply_compression(sens, matrix)


def reconstruct(
    y: CoilSet,
    sens: CoilSet,
    mask: SamplingMask,
    reader: Reader,
    precond_kind: typing.Optional[str] = None,
) -> typing.Tuple[ComplexImage, ConvergenceLog]:
    params = recon_params(reader)
    keep = reader.get("KEEP_COILS")
    if keep is not None:
        y, sens = compress(y, sens, int(keep))
    ctx = EncodingContext(
        sens=sens,
        mask=mask,
        params=params,
        wavelet=WaveletSpec(name=reader.get("WAVELET"), levels=params.wavelet_levels),
    )
    precond_kind = precond_kind or reader.default()

    def progress(outer, x):
        logging.debug("Progress", extra={"outer": outer, "of": params.n_outer, "precond": str(precond_kind)})

    factory = PreconditionerFactory(reader)
    return bregman.run(y, ctx, precond_kind=precond_kind, callback=progress, factory=factory)


def load_inputs(data_dir: str):
    y = read_cimg(os.path.join(data_dir, "kspace.cimg"), coilset=True)
    sens = read_cimg(os.path.join(data_dir, "sens.cimg"), coilset=True)
    mask = SamplingMask(np.asarray(read_cimg(os.path.join(data_dir, "mask.cimg"))))
    reference_path = os.path.join(data_dir, "phantom.cimg")
    reference = read_cimg(reference_path) if os.path.exists(reference_path) else None
    return y, sens, mask, reference


def cmd_recon(reader: Reader) -> typing.List[str]:
    out_dir = reader.get("OUT_DIR")
    data_dir = reader.get("DATA_DIR") or out_dir
    y, sens, mask, reference = load_inputs(data_dir)
    precond_kind = str(reader.default())
    x, log = reconstruct(y, sens, mask, reader, precond_kind)

    os.makedirs(out_dir, exist_ok=True)
    written = [
        os.path.join(out_dir, "recon.cimg"),
        os.path.join(out_dir, "recon.pgm"),
        os.path.join(out_dir, f"convergence_{log.precond_kind}.csv"),
    ]
    write_cimg(x, written[0])
    write_pgm(x, written[1])
    write_log_csv(log, written[2])
    extra = {
        "precond": log.precond_kind,
        "pcg_iters": log.total_pcg_iterations,
        "build_s": log.precond_build_s,
        "total_s": log.total_seconds,
    }
    if reference is not None:
        diff_path = os.path.join(out_dir, "diff.pgm")
        write_pgm(np.abs(x - reference), diff_path)
        written.append(diff_path)
        extra["relative_error"] = relative_error(x, reference)
    if not log.all_converged:
        logging.warning("Some PCG solves hit the iteration cap", extra={"precond": log.precond_kind})
    logging.info("Recon done", extra=extra)
    return written
