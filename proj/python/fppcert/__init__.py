"""Python access to the fppcert certification checks."""
import json

from ._core import (
    ConfigError,
    FppError,
    __version__,
    check_ids,
    checks_for_subcommand,
    dataset_sha256,
    equations_text,
    find_sqrt_minus7,
    gram_matrix,
    integer_rank,
    lattice_csv,
    sample_points,
    seventh_root_exponent,
)
from ._core import run_checks_json as _run_checks_json


def run_checks(ids, **config):
    """Run the given check ids and return the report as a dict."""
    if isinstance(ids, str):
        ids = checks_for_subcommand(ids)
    return json.loads(_run_checks_json(list(ids), **config))


__all__ = [
    "ConfigError",
    "FppError",
    "__version__",
    "check_ids",
    "checks_for_subcommand",
    "dataset_sha256",
    "equations_text",
    "find_sqrt_minus7",
    "gram_matrix",
    "integer_rank",
    "lattice_csv",
    "run_checks",
    "sample_points",
    "seventh_root_exponent",
]
