import csv
import logging
import typing

import numpy as np

from sbprecon.exceptions import DimensionMismatch
from sbprecon.types import PathLike


def window(image: np.ndarray) -> np.ndarray:
    """
    :param image: any real or complex 2-D array; the magnitude is used.

    :return: uint8 array, min-max windowed to 0..255 (a constant image maps to 0)
    """
    magnitude = np.abs(np.asarray(image))
    if magnitude.ndim != 2:
        raise DimensionMismatch(f"PGM holds a 2-D image, got shape {magnitude.shape}")
    low, high = float(magnitude.min()), float(magnitude.max())
    if high <= low:
        return np.zeros(magnitude.shape, dtype=np.uint8)
    return np.rint(255 * (magnitude - low) / (high - low)).astype(np.uint8)


def write_pgm(image: np.ndarray, path: PathLike):
    """Binary portable graymap (P5, maxval 255); masks come out as 0/255."""
    pixels = window(image)
    rows, cols = pixels.shape
    with open(path, "wb") as handle:
        handle.write(f"P5\n{cols} {rows}\n255\n".encode("ascii"))
        handle.write(pixels.tobytes())
    logging.debug("Write pgm", extra={"path": str(path), "shape": pixels.shape})


def write_csv(path: PathLike, columns: typing.Sequence[str], rows: typing.Iterable[typing.Sequence]):
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(columns)
        writer.writerows(rows)
    logging.debug("Write csv", extra={"path": str(path), "columns": list(columns)})


def relative_error(x: np.ndarray, reference: np.ndarray) -> float:
    """||x - reference|| / ||reference||"""
    x, reference = np.asarray(x), np.asarray(reference)
    if x.shape != reference.shape:
        raise DimensionMismatch(f"{x.shape} does not match reference {reference.shape}")
    norm = np.linalg.norm(reference)
    if norm == 0:
        return float(np.linalg.norm(x))
    return float(np.linalg.norm(x - reference) / norm)
