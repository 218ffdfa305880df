"""Effective resistance and node resistance curvature on weighted graphs.

Exact results come back as ``fractions.Fraction``; ``backend="float"``
returns plain floats. Resistances may be given as int, Fraction, str
("3/2") or float (converted exactly).
"""

from fractions import Fraction

from . import _rescurv
from ._rescurv import (
    Graph as _Graph,
    RescurvError,
    cartesian_product,
    complete,
    cycle,
    from_shorthand,
    grid,
    hypercube,
    laplacian_eigenvalues,
    path,
    star,
)

__all__ = [
    "Graph",
    "RescurvError",
    "cartesian_product",
    "complete",
    "cycle",
    "effective_resistance",
    "from_shorthand",
    "graph",
    "grid",
    "hypercube",
    "ladder_alpha",
    "ladder_curvatures",
    "laplacian_eigenvalues",
    "mc_effective_resistance",
    "node_curvatures",
    "path",
    "product_curvatures",
    "rail_resistance",
    "resistance_matrix",
    "rung_resistance",
    "series_parallel_resistance",
    "star",
    "tree_bound",
    "upper_bound_ub",
    "validate_bounds",
    "verify_grid_theorem",
]

Graph = _Graph


def _text(r):
    if isinstance(r, float):
        r = Fraction(r)
    return str(r)


def _value(x):
    return Fraction(x) if isinstance(x, str) else x


def _edges(edges):
    out = []
    for e in edges:
        u, v = e[0], e[1]
        r = e[2] if len(e) > 2 and e[2] is not None else 1
        out.append((u, v, _text(r)))
    return out


def graph(n, edges):
    """Build a graph from (u, v) or (u, v, r) tuples."""
    return _Graph(n, _edges(edges))


def node_curvatures(g, backend="exact"):
    return [_value(x) for x in _rescurv.node_curvatures(g, backend)]


def resistance_matrix(g, backend="exact"):
    return [[_value(x) for x in row] for row in _rescurv.resistance_matrix(g, backend)]


def effective_resistance(g, u, v, backend="exact"):
    return _value(_rescurv.effective_resistance(g, u, v, backend))


def product_curvatures(shorthand, backend="exact"):
    """Curvature of a product such as "P3^3"; also the boundary/interior
    positions when every factor is a path."""
    report = _rescurv.product_report(shorthand, backend)
    report["curvatures"] = [_value(x) for x in report["curvatures"]]
    return report


def verify_grid_theorem(m, n, max_side=12):
    report = _rescurv.verify_grid_theorem(m, n, max_side)
    report["boundary_min"] = _value(report["boundary_min"])
    report["interior_max"] = _value(report["interior_max"])
    return report


def ladder_alpha(n):
    return [_value(x) for x in _rescurv.ladder_alpha(n)]


def rung_resistance(n, k):
    return _value(_rescurv.rung_resistance(n, k))


def rail_resistance(n, k):
    return _value(_rescurv.rail_resistance(n, k))


def ladder_curvatures(n):
    return [_value(x) for x in _rescurv.ladder_curvatures(n)]


def series_parallel_resistance(n, edges, s, t):
    """Terminal resistance by series/parallel reduction, or None when the
    network does not reduce."""
    r = _rescurv.series_parallel_resistance(n, _edges(edges), s, t)
    return None if r is None else _value(r)


def mc_effective_resistance(g, u, v, walks, seed, threads=1):
    """(estimate, standard error) from commute times of unit-resistance walks."""
    return _rescurv.mc_effective_resistance(g, u, v, walks, seed, threads)


def upper_bound_ub(omega, d):
    return _value(_rescurv.upper_bound_ub(_text(omega), d))


def tree_bound(omega, d, r, literal=False):
    return _value(_rescurv.tree_bound(_text(omega), d, r, literal))


def validate_bounds(g1, g2):
    rows = _rescurv.validate_bounds(g1, g2)
    for row in rows:
        row["actual"] = _value(row["actual"])
        row["ub"] = _value(row["ub"])
    return rows
