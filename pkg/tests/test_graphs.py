import itertools
import json

import pytest
from hypothesis import given, settings

from bnbruhat import (
    SignedPermutation,
    alpha,
    apply_u,
    beta,
    build_graph,
    coxeter_length,
    down_degree,
    edge_down,
    edge_total,
    export_graph,
    flatten,
    origin_in_rectangle,
    r_statistic,
    r_statistic_by_rectangles,
    rectangle_interior_values,
    rectangle_is_empty,
    remove,
    total_degree,
    total_weight,
    u_defined,
    union_degree,
    vertex_degree,
)
from conftest import windows


class TestRectangles:
    def test_interior_values(self):
        p = SignedPermutation((3, -1, -2))
        # corners (1, 3) and (3, -2); position 2 holds -1, strictly inside
        assert rectangle_interior_values(p, 1, 3) == [-1]
        assert not rectangle_is_empty(p, 1, 3)
        assert rectangle_is_empty(p, 1, 2)

    def test_origin(self):
        p = SignedPermutation((3, -1, -2))
        assert origin_in_rectangle(p, -3, 2)  # corners (-3, 2), (2, -1)
        assert not origin_in_rectangle(p, 1, 3)


class TestEdgeFunctions:
    def test_long_edge_examples(self):
        assert edge_total(SignedPermutation((2, -1)), 2, -2) == 1
        assert edge_total(SignedPermutation.identity(2), 1, -1) == 1
        assert edge_total(SignedPermutation.identity(2), 2, -2) == 0

    def test_diagonal_is_zero(self, b3):
        for p in b3:
            for a in p.window:
                assert edge_total(p, a, a) == 0

    def test_matches_length_oracle(self, b3):
        # adjacency in the Hasse diagram is exactly a defined reflection
        # changing the length by one
        for p in b3:
            lp = coxeter_length(p)
            values = [v for v in range(-3, 4) if v != 0]
            for a, b in itertools.combinations(values, 2):
                if abs(a) == abs(b) and a != -b:
                    continue
                from bnbruhat import ReflectionLabel

                lab = ReflectionLabel(a, b)
                if u_defined(a, b, p):
                    delta = coxeter_length(apply_u(lab, p)) - lp
                    assert edge_total(p, a, b) == (1 if abs(delta) == 1 else 0)
                    assert edge_down(p, a, b) == (1 if delta == -1 else 0)
                else:
                    assert edge_total(p, a, b) == 0


class TestAlphaBeta:
    def test_alpha_cross_weight_two(self):
        assert alpha(SignedPermutation((1, 2, -4, -3)), 1, -3) == 2

    def test_alpha_loop_zero_for_positive(self, b3):
        for p in b3:
            for a in p.window:
                if a > 0:
                    assert alpha(p, a, a) == 0

    def test_alpha_sum_is_down_degree(self):
        p = SignedPermutation((-2, 4, -3, 1))
        values = sorted(p.window)
        s = sum(
            alpha(p, a, b)
            for i, a in enumerate(values)
            for b in values[i:]
        )
        assert s == 5

    def test_alpha_at_most_beta(self, b3):
        for p in b3:
            values = sorted(p.window)
            for i, a in enumerate(values):
                for b in values[i:]:
                    assert 0 <= alpha(p, a, b) <= beta(p, a, b) <= 2


class TestBuildGraph:
    def test_identity_alpha_empty(self):
        g = build_graph(SignedPermutation.identity(3), "alpha")
        assert g.weights == {} and g.loops == {}
        assert total_weight(g) == 0

    def test_extremal_alpha_total(self):
        g = build_graph(SignedPermutation((1, 2, -4, -3)), "alpha")
        assert total_weight(g) == 8

    def test_beta_total(self):
        g = build_graph(SignedPermutation((2, -1)), "beta")
        assert total_weight(g) == 4

    def test_totals_match_degrees(self, b4):
        for p in b4:
            assert total_weight(build_graph(p, "alpha")) == down_degree(p)
            assert total_weight(build_graph(p, "beta")) == total_degree(p)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            build_graph(SignedPermutation.identity(2), "gamma")


class TestVertexDegrees:
    def test_identity_zero(self):
        g = build_graph(SignedPermutation.identity(3), "alpha")
        for a in g.vertices:
            assert vertex_degree(g, a) == 0

    def test_subgraph_weight_of_worked_example(self):
        # beta graph of (3,-1,-2): total 6; the four reflections touching
        # magnitude 1 leave weight 2 after removing vertex -1
        g = build_graph(SignedPermutation((3, -1, -2)), "beta")
        assert total_weight(g) == 6
        assert vertex_degree(g, -1) == 4
        assert total_weight(remove(g, {-1})) == 2

    def test_union_degree_formula(self, b3):
        for p in b3:
            g = build_graph(p, "beta")
            for a, b in itertools.combinations(g.vertices, 2):
                expect = vertex_degree(g, a) + vertex_degree(g, b) - g.weights.get(
                    (min(a, b), max(a, b)), 0
                )
                assert union_degree(g, a, b) == expect
            for a in g.vertices:
                assert union_degree(g, a, a) == vertex_degree(g, a)

    def test_unknown_vertex(self):
        g = build_graph(SignedPermutation.identity(2), "alpha")
        with pytest.raises(ValueError):
            vertex_degree(g, 5)


class TestRemove:
    def test_empty_set_is_identity(self):
        g = build_graph(SignedPermutation((3, -1, -2)), "beta")
        assert remove(g, set()) == g

    def test_full_removal(self):
        g = build_graph(SignedPermutation((3, -1, -2)), "beta")
        assert total_weight(remove(g, set(g.vertices))) == 0

    def test_rejects_non_vertices(self):
        g = build_graph(SignedPermutation((3, -1, -2)), "beta")
        with pytest.raises(ValueError):
            remove(g, {1})

    @pytest.mark.parametrize("kind", ["alpha", "beta"])
    def test_degree_decompositions(self, b3, kind):
        for p in b3:
            g = build_graph(p, kind)
            t = total_weight(g)
            for a in g.vertices:
                assert t == vertex_degree(g, a) + total_weight(remove(g, {a}))
            for a, b in itertools.combinations(g.vertices, 2):
                assert t == union_degree(g, a, b) + total_weight(remove(g, {a, b}))


class TestFlatten:
    def test_relabels_magnitudes(self):
        assert flatten(SignedPermutation((3, -1, -2)), {-1}) == SignedPermutation((2, -1))

    def test_empty_set(self):
        p = SignedPermutation((3, -1, -2))
        assert flatten(p, set()) == p

    def test_no_relabel_needed(self):
        got = flatten(SignedPermutation((1, 2, -4, -3)), {-4})
        assert got == SignedPermutation((1, 2, -3))

    def test_rejects_non_window_values(self):
        with pytest.raises(ValueError):
            flatten(SignedPermutation((3, -1, -2)), {1})

    @given(windows(min_n=2, max_n=6))
    def test_flatten_singleton_is_valid(self, p):
        for a in p.window:
            q = flatten(p, {a})
            assert q.n == p.n - 1
            SignedPermutation(q.window)  # revalidate


class TestRStatistic:
    def test_worked_example(self):
        # d(flatten) = 4, surviving beta weight = 2, so both routes give 2
        p = SignedPermutation((3, -1, -2))
        assert r_statistic(p, {-1}) == 2
        assert r_statistic_by_rectangles(p, {-1}) == 2

    def test_empty_set_is_zero(self, b3):
        for p in b3:
            assert r_statistic(p, set()) == 0
            assert r_statistic_by_rectangles(p, set()) == 0

    def test_routes_agree_exhaustively(self, b3):
        for p in b3:
            values = list(p.window)
            subsets = (
                [()]
                + [(a,) for a in values]
                + list(itertools.combinations(values, 2))
            )
            for s in subsets:
                assert r_statistic(p, s) == r_statistic_by_rectangles(p, s) >= 0

    def test_degree_deficiency_identity(self, b3):
        # d(p) = d(p \ a) + d(a) - r(a)
        for p in b3:
            gb = build_graph(p, "beta")
            for a in p.window:
                assert total_degree(p) == (
                    total_degree(flatten(p, {a}))
                    + vertex_degree(gb, a)
                    - r_statistic(p, {a})
                )


class TestExport:
    def test_json_schema(self):
        g = build_graph(SignedPermutation((3, -1, -2)), "beta")
        payload = json.loads(export_graph(g, "json"))
        assert list(payload) == ["n", "kind", "vertices", "edges", "loops"]
        assert payload["n"] == 3
        assert payload["kind"] == "beta"
        assert payload["vertices"] == [-2, -1, 3]
        assert sum(w for _, _, w in payload["edges"]) + sum(
            w for _, w in payload["loops"]
        ) == 6

    def test_json_empty_graph(self):
        g = build_graph(SignedPermutation.identity(2), "alpha")
        payload = json.loads(export_graph(g, "json"))
        assert payload["edges"] == [] and payload["loops"] == []

    def test_alpha_export_total_five(self):
        g = build_graph(SignedPermutation((-2, 4, -3, 1)), "alpha")
        payload = json.loads(export_graph(g, "json"))
        total = sum(w for *_, w in payload["edges"]) + sum(w for _, w in payload["loops"])
        assert total == 5

    def test_dot_well_formed(self):
        g = build_graph(SignedPermutation((3, -1, -2)), "beta")
        dot = export_graph(g, "dot")
        try:
            import pydot
        except ImportError:
            pydot = None
        if pydot is not None:
            parsed = pydot.graph_from_dot_data(dot)
            assert parsed and len(parsed) == 1
        else:
            assert dot.startswith("graph beta {")
            assert dot.rstrip().endswith("}")
            body = dot.splitlines()[1:-1]
            assert all(line.strip().endswith(";") for line in body)
            assert sum("--" in line for line in body) == len(g.weights) + len(g.loops)

    def test_dot_deterministic(self):
        g = build_graph(SignedPermutation((-2, 4, -3, 1)), "beta")
        assert export_graph(g, "dot") == export_graph(g, "dot")

    def test_unknown_format(self):
        g = build_graph(SignedPermutation.identity(2), "alpha")
        with pytest.raises(ValueError):
            export_graph(g, "xml")


class TestStructuralBounds:
    @settings(max_examples=40)
    @given(windows(min_n=3, max_n=6))
    def test_triangle_bounds_random(self, p):
        values = sorted(p.window)
        for a, b, c in itertools.combinations(values, 3):
            assert edge_down(p, a, b) + edge_down(p, a, c) + edge_down(p, b, c) <= 2
            assert edge_down(p, a, -b) + edge_down(p, a, -c) + edge_down(p, b, -c) <= 2
            x, y, z = alpha(p, a, b), alpha(p, a, c), alpha(p, b, c)
            if x > 0 and y > 0 and z > 0:
                assert x + y + z <= 3
            if (a > 0) == (b > 0) == (c > 0):
                assert x + y + z <= 2
            assert x + y + z + alpha(p, a, a) + alpha(p, b, b) + alpha(p, c, c) <= 4
        for a, b in itertools.combinations(values, 2):
            assert alpha(p, a, a) + alpha(p, a, b) + alpha(p, b, b) <= 2
            if a * b > 0:
                assert edge_down(p, a, -b) == 0
                assert edge_total(p, a, -b) == 0
