"""Python interface to the honeymirror verifier."""

import json

from ._core import (
    Brane,
    ConfigError,
    EquivariantMF,
    Inconclusive,
    MarginError,
    MethodNotApplicable,
    aside_hom,
    brane,
    brane_mirror,
    census,
    check_acyclicity,
    check_generators,
    hom_cohomology,
    koszul_mf,
    lattice_ball,
    monomial_hom,
    run_report_json,
    skyscraper_at,
    stalk,
    structure_mf,
    window_obj,
)


def run_report(command, n=2, radius=2, twist_radius=1, degree_cap=64):
    """Runs a CLI command in-process and returns (parsed report, verdict)."""
    text, verdict = run_report_json(command, n, radius, twist_radius, degree_cap)
    return json.loads(text), verdict


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
