"""Degree graphs of a signed permutation and the rectangle geometry.

Plot pi as the 2n points (i, pi(i)). Two values are adjacent in the Hasse
diagram exactly when the axis-aligned rectangle spanned by their points is
empty and the underlying reflection is defined; orienting by descent
splits adjacency into down and up edges.

Graphs are stored on the window values pi[n] = {pi(1), ..., pi(n)} with
multiplicity weights: the weight of {a, b} counts the reflections {a, b}
and {a, -b} that are edges (0, 1 or 2), and the loop at a records the
long reflection {a, -a}. Summing all weights of the ``alpha`` (down) graph
gives the down degree; for the ``beta`` (total) graph, the total degree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .order import _window_degrees
from .signed import SignedPermutation, inverse_position


def _value_at(window: tuple[int, ...], pos: int) -> int:
    return window[pos - 1] if pos > 0 else -window[-pos - 1]


def rectangle_interior_values(p: SignedPermutation, i: int, j: int) -> list[int]:
    """Values of the points strictly inside the rectangle spanned by
    (i, pi(i)) and (j, pi(j)): both coordinates strictly between the
    corners. Corners are never inside."""
    w = p.window
    a, b = _value_at(w, i), _value_at(w, j)
    lo_v, hi_v = (a, b) if a < b else (b, a)
    lo_p, hi_p = (i, j) if i < j else (j, i)
    out = []
    for k in range(lo_p + 1, hi_p):
        if k == 0:
            continue
        v = _value_at(w, k)
        if lo_v < v < hi_v:
            out.append(v)
    return out


def rectangle_is_empty(p: SignedPermutation, i: int, j: int) -> bool:
    """No point strictly inside the rectangle spanned by positions i, j."""
    return not rectangle_interior_values(p, i, j)


def origin_in_rectangle(p: SignedPermutation, i: int, j: int) -> bool:
    """Whether (0, 0) lies in the closed rectangle: the positions have
    opposite signs and so do the corner values."""
    a, b = _value_at(p.window, i), _value_at(p.window, j)
    return i * j < 0 and a * b < 0


def _canonical_position_pairs(n: int) -> Iterator[tuple[int, int]]:
    """Each reflection's rectangle once: i in [1, n], |j| >= i, j != i.

    The mirror rectangle over (-i, -j) describes the same reflection and
    is not generated. Yields n^2 pairs.
    """
    for i in range(1, n + 1):
        for j in range(-n, -i + 1):
            yield (i, j)
        for j in range(i + 1, n + 1):
            yield (i, j)


def edge_total(p: SignedPermutation, a: int, b: int) -> int:
    """1 when values a, b are adjacent in the Hasse diagram.

    Geometric form: the rectangle between their points is empty, and
    either the positions are i, -i or the origin is outside the
    rectangle (equivalently, the reflection {a, b} is defined). Diagonal
    pairs are never adjacent: ``edge_total(p, a, a) == 0``.
    """
    if a == b:
        return 0
    i, j = inverse_position(p, a), inverse_position(p, b)
    if not rectangle_is_empty(p, i, j):
        return 0
    if j == -i or not origin_in_rectangle(p, i, j):
        return 1
    return 0


def edge_down(p: SignedPermutation, a: int, b: int) -> int:
    """1 when a, b are adjacent and the pair descends: the earlier
    position carries the larger value."""
    if edge_total(p, a, b) == 0:
        return 0
    i, j = inverse_position(p, a), inverse_position(p, b)
    if i > j:
        i, j, a, b = j, i, b, a
    return 1 if a > b else 0


def alpha(p: SignedPermutation, a: int, b: int) -> int:
    """Down-edge weight between window values: edge(a, b) + edge(a, -b);
    on the diagonal, the long down edge ``edge(a, -a)``."""
    if a == b:
        return edge_down(p, a, -a)
    return edge_down(p, a, b) + edge_down(p, a, -b)


def beta(p: SignedPermutation, a: int, b: int) -> int:
    """Total-edge weight between window values, as :func:`alpha` but
    counting both orientations."""
    if a == b:
        return edge_total(p, a, -a)
    return edge_total(p, a, b) + edge_total(p, a, -b)


@dataclass(frozen=True, eq=True)
class WeightedDegreeGraph:
    """Weighted graph on the window values of one permutation.

    ``weights`` maps sorted vertex pairs to weight 1 or 2, ``loops`` maps
    a vertex to 1; zero weights are not stored. ``kind`` is ``alpha``
    (down edges) or ``beta`` (all edges).
    """

    kind: str
    n: int
    vertices: tuple[int, ...]
    weights: dict[tuple[int, int], int]
    loops: dict[int, int]


def build_graph(p: SignedPermutation, kind: str) -> WeightedDegreeGraph:
    """Alpha or beta graph of p. The total weight of the alpha graph is
    the down degree; of the beta graph, the total degree."""
    if kind == "alpha":
        fn = alpha
    elif kind == "beta":
        fn = beta
    else:
        raise ValueError(f"unknown graph kind {kind!r}")
    vs = tuple(sorted(p.window))
    weights: dict[tuple[int, int], int] = {}
    loops: dict[int, int] = {}
    for idx, a in enumerate(vs):
        w = fn(p, a, a)
        if w:
            loops[a] = w
        for b in vs[idx + 1 :]:
            w = fn(p, a, b)
            if w:
                weights[(a, b)] = w
    return WeightedDegreeGraph(kind=kind, n=p.n, vertices=vs, weights=weights, loops=loops)


def total_weight(g: WeightedDegreeGraph) -> int:
    """Sum of all edge weights and loops: the degree the graph records."""
    return sum(g.weights.values()) + sum(g.loops.values())


def vertex_degree(g: WeightedDegreeGraph, a: int) -> int:
    """Weighted degree of vertex a, its loop counted once."""
    if a not in g.vertices:
        raise ValueError(f"vertex {a} not in graph")
    d = g.loops.get(a, 0)
    for (x, y), w in g.weights.items():
        if a == x or a == y:
            d += w
    return d


def union_degree(g: WeightedDegreeGraph, a: int, b: int) -> int:
    """Weight incident to a or b: d(a) + d(b) - weight(a, b)."""
    if a == b:
        return vertex_degree(g, a)
    if b not in g.vertices:
        raise ValueError(f"vertex {b} not in graph")
    key = (a, b) if a < b else (b, a)
    return vertex_degree(g, a) + vertex_degree(g, b) - g.weights.get(key, 0)


def remove(g: WeightedDegreeGraph, s: Iterable[int]) -> WeightedDegreeGraph:
    """Subgraph on the vertices outside s, keeping all weights among the
    survivors. Satisfies ``total_weight(g) == union_degree(g, a, b) +
    total_weight(remove(g, {a, b}))``."""
    ss = set(s)
    extra = ss - set(g.vertices)
    if extra:
        raise ValueError(f"not vertices of the graph: {sorted(extra)}")
    vs = tuple(v for v in g.vertices if v not in ss)
    weights = {k: w for k, w in g.weights.items() if k[0] not in ss and k[1] not in ss}
    loops = {v: w for v, w in g.loops.items() if v not in ss}
    return WeightedDegreeGraph(kind=g.kind, n=g.n, vertices=vs, weights=weights, loops=loops)


def flatten(p: SignedPermutation, s: Iterable[int]) -> SignedPermutation:
    """Delete the values of s and their negatives from p and relabel the
    remaining magnitudes order-isomorphically, signs preserved.

    >>> flatten(SignedPermutation([3, -1, -2]), {-1})
    SignedPermutation([2, -1])
    """
    ss = set(s)
    extra = ss - set(p.window)
    if extra:
        raise ValueError(f"not window values of {p}: {sorted(extra)}")
    survivors = [v for v in p.window if v not in ss and -v not in ss]
    rank = {m: r for r, m in enumerate(sorted(abs(v) for v in survivors), 1)}
    return SignedPermutation._unchecked(
        tuple(rank[abs(v)] if v > 0 else -rank[abs(v)] for v in survivors)
    )


def r_statistic(p: SignedPermutation, s: Iterable[int]) -> int:
    """Deficiency of s: the total degree of the flattened permutation
    minus the surviving weight of the beta graph. Always >= 0, since
    deleting points can only empty rectangles between surviving points.
    """
    ss = set(s)
    fl = flatten(p, ss)
    down, up = _window_degrees(fl.window)
    return down + up - total_weight(remove(build_graph(p, "beta"), ss))


def _r_rectangles(window: tuple[int, ...], s: frozenset[int]) -> int:
    n = len(window)
    s_all = s | {-v for v in s}
    count = 0
    for i in range(1, n + 1):
        a = window[i - 1]
        if a in s_all:
            continue
        for j in list(range(-n, -i + 1)) + list(range(i + 1, n + 1)):
            b = _value_at(window, j)
            if b in s_all:
                continue
            if not (j == -i or a * b > 0 or i * j > 0):
                continue
            lo_v, hi_v = (a, b) if a < b else (b, a)
            lo_p, hi_p = (i, j) if i < j else (j, i)
            seen_inside = False
            witnessed = True
            for k in range(lo_p + 1, hi_p):
                if k == 0:
                    continue
                v = _value_at(window, k)
                if lo_v < v < hi_v:
                    seen_inside = True
                    if v not in s_all:
                        witnessed = False
                        break
            if seen_inside and witnessed:
                count += 1
    return count


def r_statistic_by_rectangles(p: SignedPermutation, s: Iterable[int]) -> int:
    """Deficiency of s counted geometrically: nonempty rectangles whose
    corner values survive s, whose positions are i, -i or avoid the
    origin, and whose interior points all carry values of s or -s. Each
    rectangle counted once via the canonical orientation. Agrees with
    :func:`r_statistic` (checked exhaustively in the tests)."""
    ss = set(s)
    extra = ss - set(p.window)
    if extra:
        raise ValueError(f"not window values of {p}: {sorted(extra)}")
    return _r_rectangles(p.window, frozenset(ss))


def export_graph(g: WeightedDegreeGraph, format: str) -> str:
    """Serialize the graph deterministically.

    ``json``: object with keys n, kind, vertices (sorted), edges as
    [a, b, w] triples, loops as [a, 1] pairs. ``dot``: undirected DOT
    with a weight attribute per edge and self-loops for loops.
    """
    edges = sorted((a, b, w) for (a, b), w in g.weights.items())
    loops = sorted((a, w) for a, w in g.loops.items())
    if format == "json":
        payload = {
            "n": g.n,
            "kind": g.kind,
            "vertices": list(g.vertices),
            "edges": [list(e) for e in edges],
            "loops": [list(l) for l in loops],
        }
        return json.dumps(payload)
    if format == "dot":
        lines = [f"graph {g.kind} {{"]
        for v in g.vertices:
            lines.append(f'  "{v}";')
        for a, b, w in edges:
            lines.append(f'  "{a}" -- "{b}" [weight={w}];')
        for a, w in loops:
            lines.append(f'  "{a}" -- "{a}" [weight={w}];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {format!r}")
