"""Essential disconnection on a cell complex, reduced to graph connectivity.

A facet portion set ``K`` maps facet ids to closed parameter intervals in
[0, 1].  Cells are convex, hence cannot be split by anything living on
facets, so a partition of a union of cells whose interface lies in ``K`` up
to a null set can always be taken cell-aligned.  Deciding disconnection then
amounts to deleting the facets that ``K`` covers up to measure zero and
checking whether the remaining adjacency graph is connected.
"""

from __future__ import annotations

from typing import Iterable, Mapping

import networkx as nx

from .complex import EXTERIOR, BaseCellComplex
from .field import PwAffineField, classify_facets, facet_traces, positive_support, validate_slice_length
from .geometry import covered_length, cross, merge_intervals, superlevel_intervals


class ConnectivityError(ValueError):
    pass


def uncovered_measure(cx: BaseCellComplex, facet: int, portions) -> object:
    f = cx.facets[facet]
    if not portions:
        return f.measure
    if cx.dim == 1:
        return 0 * f.measure
    return f.measure * (1 - covered_length(portions))


def is_covered(cx: BaseCellComplex, facet: int, portions) -> bool:
    rest = uncovered_measure(cx, facet, portions)
    if cx.arith.exact:
        return rest <= 0
    return rest <= 1e-12 * cx.facets[facet].measure


def adjacency_graph(cx: BaseCellComplex, cells: Iterable[int]) -> nx.Graph:
    """Cells as nodes (with their measure), shared facets as edges."""
    cells = set(cells)
    g = nx.Graph()
    for c in sorted(cells):
        g.add_node(c, measure=cx.cells[c].measure)
    for f in cx.interior_facets():
        a, b = f.cells
        if a in cells and b in cells and f.measure > 0:
            if g.has_edge(a, b):
                g[a][b]["facets"].append(f.index)
            else:
                g.add_edge(a, b, facets=[f.index])
    return g


def _components(g: nx.Graph) -> list:
    return sorted((tuple(sorted(c)) for c in nx.connected_components(g)))


def essentially_disconnects(cx: BaseCellComplex, K: Mapping, G: Iterable[int]) -> tuple:
    """Does ``K`` essentially disconnect the union of the cells ``G``?

    Returns ``(True, (G_plus, G_minus))`` with a witness partition, or
    ``(False, None)``.
    """
    G = frozenset(cx.cell_index(c) for c in G)
    if not G:
        raise ConnectivityError("G is empty")
    g = adjacency_graph(cx, G)
    for a, b, data in list(g.edges(data=True)):
        if all(is_covered(cx, fid, K.get(fid, ())) for fid in data["facets"]):
            g.remove_edge(a, b)
    comps = _components(g)
    if len(comps) == 1:
        return False, None
    plus = frozenset(comps[0])
    return True, (plus, G - plus)


def union_portions(*Ks: Mapping) -> dict:
    out: dict = {}
    for K in Ks:
        for fid, ivs in K.items():
            out.setdefault(fid, []).extend(ivs)
    return {fid: merge_intervals(ivs) for fid, ivs in out.items() if ivs}


def zero_set_portions(v: PwAffineField) -> dict:
    """Facet portions where the lower limit of ``v`` vanishes."""
    return {fid: list(fc.zero_portion) for fid, fc in classify_facets(v).items() if fc.zero_portion}


def jump_set_portions(v: PwAffineField, eps=0) -> dict:
    """Facet portions where the jump of ``v`` exceeds ``eps``."""
    out = {}
    for f in v.complex.facets:
        d = facet_traces(v, f).difference
        ivs = merge_intervals(superlevel_intervals(d, eps) + superlevel_intervals(tuple(-x for x in d), eps))
        if ivs:
            out[f.index] = ivs
    return out


def is_indecomposable_F(v: PwAffineField) -> bool:
    """Whether the symmetral of ``v`` is indecomposable: the zero set of the
    lower limit must not essentially disconnect the support."""
    validate_slice_length(v)
    supp = positive_support(v)
    if not supp:
        raise ConnectivityError("empty support")
    return not essentially_disconnects(v.complex, zero_set_portions(v), supp)[0]


def portions_from_segments(cx: BaseCellComplex, segments) -> dict:
    """Facet portions covered by geometric pieces.

    On the line ``segments`` is a collection of points; in the plane it is a
    collection of closed segments ``((x0, y0), (x1, y1))`` (a degenerate one
    is a point).
    """
    out: dict = {}
    if cx.dim == 1:
        pts = {cx.arith.num(p[0] if isinstance(p, (tuple, list)) else p) for p in segments}
        for f in cx.facets:
            if f.endpoints[0][0] in pts:
                out[f.index] = [(0, 1)]
        return out
    for f in cx.facets:
        p, q = f.endpoints
        d = (q[0] - p[0], q[1] - p[1])
        dd = d[0] * d[0] + d[1] * d[1]
        ivs = []
        for a, b in segments:
            if cross(p, q, a) != 0 or cross(p, q, b) != 0:
                continue
            sa = ((a[0] - p[0]) * d[0] + (a[1] - p[1]) * d[1]) / dd
            sb = ((b[0] - p[0]) * d[0] + (b[1] - p[1]) * d[1]) / dd
            lo, hi = max(0, min(sa, sb)), min(1, max(sa, sb))
            if hi >= lo:
                ivs.append((lo, hi))
        if ivs:
            out[f.index] = merge_intervals(ivs)
    return out
