"""Command line driver: ``sbprecon {simulate,recon,bench,flops} [flags]``.

Flags override the ``--config`` JSON file, which overrides the package settings.
"""

import argparse
import logging
import sys
import typing

from sbprecon import __version__
from sbprecon.exceptions import IOFormatError, NumericalError, SBPreconException
from sbprecon.models import MaskKind, PhantomKind, PreconditionerType, SupportRule


EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4

# Resolved inside main: importing the commands loads the settings overrides, which may fail.
COMMANDS = {
    "simulate": "cmd_simulate",
    "recon": "cmd_recon",
    "bench": "cmd_bench",
    "flops": "cmd_flops",
}


def _common_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--config", default=None, help="JSON file whose keys mirror the flags in snake case.")
    parent.add_argument("--size", type=int, default=None, help="Image size m = n.")
    parent.add_argument("--coils", type=int, default=None, help="Number of simulated coils.")
    parent.add_argument("--accel", type=float, default=None, help="Undersampling factor R.")
    parent.add_argument("--mask", choices=MaskKind.choices(), default=None)
    parent.add_argument("--center-fraction", type=float, default=None, help="Fully sampled centre fraction.")
    parent.add_argument("--phantom", choices=PhantomKind.choices(), default=None)
    parent.add_argument(
        "--sens-support", choices=SupportRule.choices(), default=None, help="Where the coil maps are nonzero."
    )
    parent.add_argument(
        "--noise", type=float, default=None, help="k-space noise std relative to the phantom peak."
    )
    parent.add_argument("--precond", choices=PreconditionerType.choices(), default=None)
    parent.add_argument("--set", type=int, choices=[1, 2, 3], default=None, help="Regularization set.")
    parent.add_argument("--outer", type=int, default=None, help="Outer Split Bregman iterations.")
    parent.add_argument("--inner", type=int, default=None, help="Inner iterations per outer iteration.")
    parent.add_argument("--eps", type=float, default=None, help="PCG relative residual tolerance.")
    parent.add_argument("--seed", type=int, default=None)
    parent.add_argument("--keep-coils", type=int, default=None, help="Compress to this many virtual coils.")
    parent.add_argument("--out", default=None, help="Output directory.")
    parent.add_argument("--data", default=None, help="Input directory of recon (defaults to --out).")
    parent.add_argument("--sizes", type=int, nargs="+", default=None, help="Bench image sizes.")
    parent.add_argument("--verbose", "-v", action="store_true", help="Debug logging.")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sbprecon", description="Circulant preconditioned Split Bregman reconstruction for PI + CS MRI."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    parent = _common_flags()
    sub.add_parser("simulate", parents=[parent], help="Write phantom, sensitivities, mask and k-space.")
    sub.add_parser("recon", parents=[parent], help="Reconstruct simulated or stored k-space.")
    sub.add_parser("bench", parents=[parent], help="Compare none, jacobi and circulant over --sizes.")
    sub.add_parser("flops", parents=[parent], help="Write the FLOP cost curve.")
    return parser


def build_reader(args: argparse.Namespace):
    from sbprecon.readers import JsonReader

    values = {key: value for key, value in vars(args).items() if key not in ("command", "config", "verbose")}
    return JsonReader(path=args.config, values=values)


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        from sbprecon import commands

        reader = build_reader(args)
        written = getattr(commands, COMMANDS[args.command])(reader)
    except NumericalError:
        logging.exception("Numerical failure")
        return EXIT_NUMERICAL
    except IOFormatError:
        logging.exception("Bad input file")
        return EXIT_IO
    except OSError:
        logging.exception("IO error")
        return EXIT_IO
    except SBPreconException:
        logging.critical("Invalid configuration", exc_info=True)
        return EXIT_CONFIG
    for path in written:
        print(path)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
