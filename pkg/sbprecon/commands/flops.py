import logging
import os
import typing

from sbprecon.complexity import cost_ratio_curve, overhead_limit, write_cost_csv
from sbprecon.readers import Reader


def cmd_flops(reader: Reader) -> typing.List[str]:
    out_dir = reader.get("OUT_DIR")
    os.makedirs(out_dir, exist_ok=True)
    ncoils = int(reader.get("COILS"))
    points = cost_ratio_curve(ncoils, [2**k for k in reader.get("FLOPS_LOG2_SIZES")])
    path = os.path.join(out_dir, "flops.csv")
    write_cost_csv(points, path)
    logging.info(
        "Flops done",
        extra={
            "coils": ncoils,
            "rows": len(points),
            "last_ratio": points[-1].ratio if points else None,
            "limit": overhead_limit(ncoils),
        },
    )
    return [path]
