"""Exact Newton-polytope invariants, lattice counts and width estimates for polynomial symbols."""

import json

from ._newton_widths import (
    REPORT_SCHEMA,
    NewtonWidthsError,
    Symbol,
    card_k,
    count_omega,
    degeneracy_verdict,
    eps_bracket,
    fit_growth,
    mu,
    newton_diagram,
    nu,
    rho,
    vertex_set,
    width_table,
)
from ._newton_widths import analyze_json as _analyze_json

__all__ = [
    "REPORT_SCHEMA",
    "NewtonWidthsError",
    "Symbol",
    "analyze",
    "card_k",
    "count_omega",
    "degeneracy_verdict",
    "eps_bracket",
    "fit_growth",
    "mu",
    "newton_diagram",
    "nu",
    "rho",
    "vertex_set",
    "width_table",
]


def analyze(symbol, *, fit=False, t_max=1_000_000, force=False, widths_n=()):
    """Full pipeline report as a dict (same schema as the CLI's JSON)."""
    if isinstance(symbol, str):
        symbol = Symbol(symbol)
    return json.loads(_analyze_json(symbol, fit, t_max, force, list(widths_n)))
