from .bench import cmd_bench  # noqa
from .flops import cmd_flops  # noqa
from .recon import cmd_recon, reconstruct  # noqa
from .simulate import SimulatedCase, cmd_simulate, sensitivity_support, simulate_case  # noqa
