"""Finite Boolean algebras, profinite towers, dyadic intervals and integral Cech cohomology."""

import json

from ._core import (
    CapExceeded,
    ParseError,
    StoneworkError,
    check_duality,
    circle_cohomology,
    decidable_image,
    interval_cohomology,
    llpo_split,
    near,
    near_companion,
    normalize_term,
    run,
    snf,
    spectrum,
    wlpo_counterexample,
)


def run_json(*args):
    """Run a command with --json and return (exit code, parsed report or None)."""
    code, out, _ = run(["--json", *args])
    return code, (json.loads(out) if out.strip() else None)


__all__ = [
    "CapExceeded",
    "ParseError",
    "StoneworkError",
    "check_duality",
    "circle_cohomology",
    "decidable_image",
    "interval_cohomology",
    "llpo_split",
    "near",
    "near_companion",
    "normalize_term",
    "run",
    "run_json",
    "snf",
    "spectrum",
    "wlpo_counterexample",
]
