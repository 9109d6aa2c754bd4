import os
import typing

import numpy as np


# (m, n) complex128 grid: x, b, k-space planes, sensitivity maps, spectral diagonals.
ComplexImage = np.ndarray
# (Nc, m, n) complex128 stack of coil planes.
CoilSet = np.ndarray
ApplyOperator = typing.Callable[[np.ndarray], np.ndarray]
PathLike = typing.Union[str, os.PathLike]
