"""Regularity of powers and symbolic powers of monomial ideals."""

import json

from ._regpow import (
    CrossCheckMismatch,
    DimensionError,
    DomainError,
    Graph,
    Ideal,
    ParseError,
    betti_numbers,
    complement,
    complete_graph,
    cycle_graph,
    edge_ideal,
    gnp_graph,
    graph_from_text,
    graph_to_text,
    has_linear_resolution,
    is_chordal,
    is_gap_free,
    path_graph,
    power,
    regularity,
    suite_names,
    symbolic_power,
)
from ._regpow import extremal_certificates as _extremal_certificates
from ._regpow import run_suite as _run_suite


def extremal_certificates(ideal, field="gf2"):
    """Maximizing (a, i, F) certificates of the degree-complex formula, as dicts."""
    return [json.loads(c) for c in _extremal_certificates(ideal, field)]


def run_suite(name, nmax=None, samples=None, seed=1, field="gf2", jobs=1):
    """Run a verification suite; returns (per-item records, summary)."""
    lines, summary = _run_suite(name, nmax, samples, seed, field, jobs)
    return [json.loads(line) for line in lines], json.loads(summary)


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
