from .cimg import read_cimg, write_cimg, write_log_csv  # noqa
from .enum import CoilLayout, MaskKind, PhantomKind, PreconditionerType, SupportRule  # noqa
from .images import SamplingMask, as_coilset, as_image, validate  # noqa
from .params import REGULARIZATION_SETS, ConvergenceLog, OuterRow, ReconParams, SolveRecord  # noqa
