"""
Counting Commands

`count` emits the closed-form count table; `enumerate` streams the canonical
bipartite pairs for one n.
"""

import json

import pandas as pd

from api.middleware import log_command_entry
from api.schemas import (
    CountRecordSchema,
    RCountRecordSchema,
    VectorGameSchema,
    count_table,
    dump_json,
    r_count_table,
)
from core.dependencies import get_settings
from games.enumeration import closed_formulas, counts_by_r, enumerate_bipartite_canonical
from games.models import GameValidationError


def _write_table(df: pd.DataFrame, fmt: str, out) -> None:
    if fmt == "csv":
        df.to_csv(out, index=False, lineterminator="\n")
    else:
        out.write(df.to_string(index=False) + "\n")


@log_command_entry
def count(config, stdin, out) -> int:
    """Closed-form counts for every n in the requested range."""
    low, high = config.n_range or (config.n, config.n)
    if low < 2:
        raise GameValidationError(f"counts start at n=2, got {low}")

    if config.by_r:
        records = [record for n in range(low, high + 1) for record in counts_by_r(n)]
        if config.format == "json":
            for record in records:
                out.write(dump_json(RCountRecordSchema.model_validate(record)) + "\n")
        else:
            _write_table(r_count_table(records), config.format, out)
        return 0

    records = [closed_formulas(n) for n in range(low, high + 1)]
    if config.format == "json":
        for record in records:
            out.write(dump_json(CountRecordSchema.from_domain(record)) + "\n")
    else:
        _write_table(count_table(records), config.format, out)
    return 0


@log_command_entry
def enumerate_canonical(config, stdin, out) -> int:
    """One JSON line per isomorphism class of bipartite games on n players."""
    limit = get_settings().ENUMERATION_MAX_N
    if config.n > limit:
        raise GameValidationError(f"enumeration is capped at n={limit}, got {config.n}")

    pairs = enumerate_bipartite_canonical(config.n)
    if config.format == "json":
        for vg in pairs:
            out.write(dump_json(VectorGameSchema.from_domain(vg)) + "\n")
    elif config.format == "text":
        for vg in pairs:
            out.write(f"{list(vg.n_bar)} {[list(row) for row in vg.matrix]}\n")
    else:
        df = pd.DataFrame(
            [
                {
                    "n_bar": json.dumps(list(vg.n_bar), separators=(",", ":")),
                    "r": vg.r,
                    "matrix": json.dumps([list(row) for row in vg.matrix], separators=(",", ":")),
                }
                for vg in pairs
            ],
            columns=["n_bar", "r", "matrix"],
        )
        _write_table(df, "csv", out)
    return 0
