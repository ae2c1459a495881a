"""Moyal star products, symmetric ordering and noncommutative gauge dynamics on periodic lattices."""

import json as _json

from ._core import (
    CaseMismatch,
    ConfigError,
    Error,
    Field,
    GaugeField,
    Grid,
    Metric,
    Theta,
    action,
    anticommutator,
    build_metric,
    commutator,
    delta_shift,
    derivative,
    eom_residual,
    fd_action_gradient,
    field_strength,
    integrate,
    multiply,
    pair_with_probe,
    star,
    star_chain,
    star_poly_commutator,
    star_truncated,
    stress_tensor,
    suite_names,
    symmetric_star,
    translate,
)
from ._core import run_scenario_json as _run_scenario_json


def run_scenario(path, suites=None):
    """Runs a scenario file and returns the parsed report."""
    return _json.loads(_run_scenario_json(str(path), list(suites or [])))


__all__ = [name for name in dir() if not name.startswith("_")]
