"""CIMG binary interchange and the convergence CSV log."""

import logging

import numpy as np

from ..exceptions import BadMagic, DimensionMismatch, EmptyHeader, TruncatedPayload, VersionUnsupported
from ..types import PathLike
from ..utils import write_csv
from .images import as_coilset, as_image
from .params import ConvergenceLog


MAGIC = b"CIMG"
VERSION = 1
# magic | version | m | n | ncoils
HEADER_DTYPE = np.dtype([("magic", "S4"), ("version", "<u4"), ("m", "<u4"), ("n", "<u4"), ("ncoils", "<u4")])
PAYLOAD_DTYPE = np.dtype("<c16")
LOG_COLUMNS = ["outer", "pcg_iters", "final_relres", "rhs_s", "pcg_s", "shrink_s", "feedback_s"]


def write_cimg(obj, path: PathLike):
    """
    :param obj: an (m, n) image or an (Nc, m, n) coil set.
    """
    array = np.asarray(obj)
    if array.ndim == 2:
        array = array[np.newaxis]
    if array.ndim != 3:
        raise DimensionMismatch(f"CIMG holds an image or a coil set, got shape {array.shape}")
    ncoils, m, n = array.shape
    header = np.array([(MAGIC, VERSION, m, n, ncoils)], dtype=HEADER_DTYPE)
    payload = np.ascontiguousarray(array, dtype=PAYLOAD_DTYPE)
    with open(path, "wb") as handle:
        handle.write(header.tobytes())
        handle.write(payload.tobytes())
    logging.debug("Write cimg", extra={"path": str(path), "shape": array.shape})


def read_cimg(path: PathLike, coilset: bool = False):
    """
    :return: an (m, n) image when the file holds one coil (unless ``coilset``), else an (Nc, m, n) coil set.
    """
    with open(path, "rb") as handle:
        raw = handle.read()
    if raw[: len(MAGIC)] != MAGIC:
        raise BadMagic(f"{path} has magic {raw[:len(MAGIC)]!r}, expected {MAGIC!r}")
    if len(raw) < HEADER_DTYPE.itemsize:
        raise TruncatedPayload(f"{path} is shorter than the CIMG header")
    header = np.frombuffer(raw[: HEADER_DTYPE.itemsize], dtype=HEADER_DTYPE)[0]
    if int(header["version"]) != VERSION:
        raise VersionUnsupported(f"{path} has CIMG version {int(header['version'])}, expected {VERSION}")
    m, n, ncoils = int(header["m"]), int(header["n"]), int(header["ncoils"])
    if min(m, n, ncoils) == 0:
        raise EmptyHeader(f"{path} declares {ncoils} coils of {m}x{n}")
    expected = ncoils * m * n * PAYLOAD_DTYPE.itemsize
    body = raw[HEADER_DTYPE.itemsize :]
    if len(body) < expected:
        raise TruncatedPayload(
            f"{path} declares {ncoils} coils of {m}x{n} but holds {len(body)} of {expected} bytes"
        )
    data = np.frombuffer(body[:expected], dtype=PAYLOAD_DTYPE).astype(np.complex128).reshape(ncoils, m, n)
    logging.debug("Read cimg", extra={"path": str(path), "shape": data.shape})
    if ncoils == 1 and not coilset:
        return as_image(data[0])
    return as_coilset(data)


def write_log_csv(log: ConvergenceLog, path: PathLike):
    rows = [
        [
            row.outer,
            row.pcg_iters,
            repr(row.final_relres),
            f"{row.rhs_s:.6f}",
            f"{row.pcg_s:.6f}",
            f"{row.shrink_s:.6f}",
            f"{row.feedback_s:.6f}",
        ]
        for row in log.outer_rows()
    ]
    write_csv(path, LOG_COLUMNS, rows)
