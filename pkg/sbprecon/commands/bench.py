import logging
import os
import typing

from sbprecon.models import ConvergenceLog, PreconditionerType
from sbprecon.readers import Reader
from sbprecon.utils import relative_error, write_csv

from .recon import reconstruct
from .simulate import simulate_case


ITERATION_COLUMNS = ("size", "precond", "outer", "pcg_iters", "final_relres")
TIMING_COLUMNS = (
    "size",
    "precond",
    "build_s",
    "rhs_s",
    "pcg_s",
    "shrink_s",
    "feedback_s",
    "total_s",
    "pcg_speedup",
    "total_speedup",
)
BUILD_COLUMNS = ("size", "build_s", "total_s", "build_share_pct")


def _ratio(numerator: float, denominator: float) -> float:
    return numerator / denominator if denominator > 0 else float("nan")


def bench_size(reader: Reader, size: int) -> typing.Dict[PreconditionerType, ConvergenceLog]:
    """Reconstruct one simulated case with every preconditioner."""
    case = simulate_case(reader, size=size)
    logs, images = {}, {}
    for kind in PreconditionerType:
        images[kind], logs[kind] = reconstruct(case.kspace, case.sens, case.mask, reader, kind)
        logging.info(
            "Bench run",
            extra={
                "size": size,
                "precond": str(kind),
                "pcg_iters": logs[kind].total_pcg_iterations,
                "relative_error": relative_error(images[kind], case.phantom),
            },
        )
    logging.info(
        "Preconditioner invariance",
        extra={
            "size": size,
            "circulant_vs_none": relative_error(
                images[PreconditionerType.CIRCULANT], images[PreconditionerType.NONE]
            ),
        },
    )
    return logs


def iteration_rows(size: int, logs: typing.Dict[PreconditionerType, ConvergenceLog]) -> typing.List[list]:
    return [
        [size, str(kind), row.outer, row.pcg_iters, repr(row.final_relres)]
        for kind, log in logs.items()
        for row in log.outer_rows()
    ]


def timing_rows(size: int, logs: typing.Dict[PreconditionerType, ConvergenceLog]) -> typing.List[list]:
    baseline = logs[PreconditionerType.NONE]
    rows = []
    for kind, log in logs.items():
        stages = log.stage_seconds()
        rows.append(
            [
                size,
                str(kind),
                f"{log.precond_build_s:.6f}",
                f"{stages['rhs_s']:.6f}",
                f"{stages['pcg_s']:.6f}",
                f"{stages['shrink_s']:.6f}",
                f"{stages['feedback_s']:.6f}",
                f"{log.total_seconds:.6f}",
                f"{_ratio(baseline.stage_seconds()['pcg_s'], stages['pcg_s']):.4f}",
                f"{_ratio(baseline.total_seconds, log.total_seconds):.4f}",
            ]
        )
    return rows


def build_row(size: int, logs: typing.Dict[PreconditionerType, ConvergenceLog]) -> list:
    log = logs[PreconditionerType.CIRCULANT]
    share = 100 * _ratio(log.precond_build_s, log.total_seconds)
    return [size, f"{log.precond_build_s:.6f}", f"{log.total_seconds:.6f}", f"{share:.4f}"]


def cmd_bench(reader: Reader) -> typing.List[str]:
    out_dir = reader.get("OUT_DIR")
    os.makedirs(out_dir, exist_ok=True)
    iterations, timings, builds = [], [], []
    for size in reader.get("BENCH_SIZES"):
        size = int(size)
        logs = bench_size(reader, size)
        iterations.extend(iteration_rows(size, logs))
        timings.extend(timing_rows(size, logs))
        builds.append(build_row(size, logs))

    names = ("bench_iterations.csv", "bench_timing.csv", "bench_build.csv")
    written = [os.path.join(out_dir, name) for name in names]
    write_csv(written[0], ITERATION_COLUMNS, iterations)
    write_csv(written[1], TIMING_COLUMNS, timings)
    write_csv(written[2], BUILD_COLUMNS, builds)
    logging.info("Bench done", extra={"out_dir": out_dir, "sizes": list(reader.get("BENCH_SIZES"))})
    return written
