"""Factor oracles: criterion route, definitional route, flow certificates, integer factors."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from fracdel import (
    Graph,
    SizeGuardError,
    complete,
    deficiency_witness,
    delete_edge,
    disjoint_union,
    epsilon,
    extremal,
    factor_deficiency_witness,
    find_fractional_factor,
    has_fractional_gf_factor,
    has_gf_factor_lovasz,
    is_fractional_ab_deleted,
    is_fractional_ab_deleted_by_edges,
    theta,
)
from helpers import cycle_graph, gnp, has_perfect_matching, path_graph, star_graph


# --- theta / epsilon ---------------------------------------------------------


def test_theta_worked_example():
    assert theta(complete(5), [0], [1], 3, 3) == 3


def test_theta_validation():
    g = complete(4)
    with pytest.raises(ValueError):
        theta(g, [0], [1], 3, 2)  # a > b
    with pytest.raises(ValueError):
        theta(g, [0], [1], 0, 2)
    with pytest.raises(ValueError):
        theta(g, [0], [0], 1, 2)  # overlap


def test_epsilon_cases():
    g = path_graph(4)
    assert epsilon(g, [], [1, 2]) == 2  # edge inside T
    assert epsilon(g, [], [0]) == 1  # neighbor outside S and T
    assert epsilon(g, [1], [0]) == 0  # isolated after removing S
    assert epsilon(g, [], []) == 0
    assert epsilon(extremal(7, 1), [], [6]) == 1
    with pytest.raises(ValueError):
        epsilon(g, [1], [1, 2])


def test_epsilon_at_most_two_and_t_size():
    rng = random.Random(71)
    for _ in range(60):
        g = gnp(rng.randint(1, 9), rng.random(), rng)
        verts = list(range(g.n))
        rng.shuffle(verts)
        k = rng.randint(0, g.n)
        m = rng.randint(0, g.n - k)
        s, t = verts[:k], verts[k : k + m]
        assert epsilon(g, s, t) <= min(2, len(t))


# --- derived witnesses -------------------------------------------------------


def test_deficiency_witness_extremal():
    w = deficiency_witness(extremal(7, 1), [], 1, 3)
    assert w.s == () and w.t == (6,)
    assert w.theta == 0 and w.epsilon == 1
    assert w.rule == "deleted" and not w.satisfied
    assert w.to_json() == {"S": [], "T": [6], "theta": 0, "epsilon": 1, "rule": "deleted"}


def test_deficiency_witness_satisfied_case():
    w = deficiency_witness(complete(7), [], 1, 3)
    assert w.t == () and w.theta == 0 and w.epsilon == 0 and w.satisfied


def test_witnesses_recompute_from_scratch():
    rng = random.Random(73)
    for _ in range(40):
        g = gnp(rng.randint(1, 9), rng.choice([0.2, 0.5, 0.8]), rng)
        s = [v for v in range(g.n) if rng.random() < 0.3]
        a = rng.randint(1, 3)
        b = a + rng.randint(0, 2)
        w = deficiency_witness(g, s, a, b)
        # T is exactly the derived low-degree set
        smask = sum(1 << v for v in w.s)
        expected_t = tuple(
            v for v in range(g.n)
            if not smask >> v & 1 and (g.adjacency_mask(v) & ~smask).bit_count() <= a
        )
        assert w.t == expected_t
        assert w.theta == theta(g, w.s, w.t, a, b)
        assert w.epsilon == epsilon(g, w.s, w.t)
        assert w.satisfied == (w.theta >= w.epsilon)


# --- fractional (g, f)-factor test --------------------------------------------


def test_fractional_factor_small_cases():
    assert has_fractional_gf_factor(cycle_graph(5), 1, 1)[0]
    ok, w = has_fractional_gf_factor(star_graph(3), 1, 1)
    assert not ok
    assert w.rule == "factor" and w.epsilon == 0
    assert w.s == (0,) and w.t == (1, 2, 3) and w.theta == -2
    ok, _ = has_fractional_gf_factor(complete(4), 2, 3)
    assert ok


def test_fractional_factor_per_vertex_bounds():
    g = cycle_graph(6)
    assert has_fractional_gf_factor(g, g.degrees(), g.degrees())[0]
    assert has_fractional_gf_factor(g, 0, 0)[0]
    assert has_fractional_gf_factor(g, [0, 1, 0, 2, 0, 1], 2)[0]
    ok, w = has_fractional_gf_factor(Graph(2), 1, 1)
    assert not ok and w.s == ()


def test_bounds_validation():
    g = complete(3)
    with pytest.raises(ValueError):
        has_fractional_gf_factor(g, 2, 1)
    with pytest.raises(ValueError):
        has_fractional_gf_factor(g, -1, 1)
    with pytest.raises(ValueError):
        has_fractional_gf_factor(g, [1, 1], 1)
    with pytest.raises(ValueError):
        has_fractional_gf_factor(Graph(0), 1, 1)


# --- deleted criterion ---------------------------------------------------------


def test_deleted_pinned_examples():
    assert is_fractional_ab_deleted(cycle_graph(4), 1, 1) == (True, None)
    assert is_fractional_ab_deleted(complete(5), 3, 3) == (True, None)
    ok, w = is_fractional_ab_deleted(extremal(7, 1), 1, 3)
    assert not ok
    assert (w.s, w.t, w.theta, w.epsilon) == ((), (6,), 0, 1)


def test_deleted_edgeless_is_vacuously_true():
    assert is_fractional_ab_deleted(Graph(4), 1, 3) == (True, None)
    assert is_fractional_ab_deleted(Graph(1), 2, 3) == (True, None)
    assert is_fractional_ab_deleted_by_edges(Graph(4), 1, 3)


def test_deleted_routes_agree_randomized():
    rng = random.Random(79)
    for _ in range(150):
        g = gnp(rng.randint(1, 8), rng.choice([0.25, 0.5, 0.85]), rng)
        a = rng.randint(1, 3)
        b = a + rng.randint(0, 2)
        v1, _ = is_fractional_ab_deleted(g, a, b)
        v2 = is_fractional_ab_deleted_by_edges(g, a, b)
        assert v1 == v2, (g, a, b)


def test_deleted_monotone_in_b():
    rng = random.Random(83)
    for _ in range(60):
        g = gnp(rng.randint(2, 8), 0.5, rng)
        a = rng.randint(1, 3)
        b = a + rng.randint(0, 1)
        if is_fractional_ab_deleted(g, a, b)[0]:
            assert is_fractional_ab_deleted(g, a, b + 1)[0]


def test_deleted_extension_property():
    # a deleted graph with at least one edge has a full fractional factor
    rng = random.Random(89)
    for _ in range(60):
        g = gnp(rng.randint(2, 8), 0.6, rng)
        a = rng.randint(1, 3)
        b = max(a, rng.randint(1, 4))
        if g.edge_count >= 1 and is_fractional_ab_deleted(g, a, b)[0]:
            assert has_fractional_gf_factor(g, a, b)[0]


def test_reported_witness_is_first_in_size_lex_order():
    rng = random.Random(97)
    checked = 0
    for _ in range(120):
        g = gnp(rng.randint(1, 7), rng.choice([0.2, 0.4]), rng)
        if g.edge_count == 0:
            continue
        a = rng.randint(1, 3)
        b = a + rng.randint(0, 1)
        ok, w = is_fractional_ab_deleted(g, a, b)
        if ok:
            continue
        checked += 1
        expected = None
        for k in range(g.n + 1):
            for s in combinations(range(g.n), k):
                cand = deficiency_witness(g, s, a, b)
                if not cand.satisfied:
                    expected = cand
                    break
            if expected is not None:
                break
        assert w == expected
    assert checked > 10


# --- flow certificates ---------------------------------------------------------


def test_flow_certificate_matches_subset_test():
    rng = random.Random(101)
    for _ in range(120):
        g = gnp(rng.randint(1, 8), rng.choice([0.3, 0.6, 0.9]), rng)
        if rng.random() < 0.5:
            gl = rng.randint(0, 2)
            fu = gl + rng.randint(0, 2)
        else:
            gl = [rng.randint(0, 2) for _ in range(g.n)]
            fu = [x + rng.randint(0, 2) for x in gl]
        expected = has_fractional_gf_factor(g, gl, fu)[0]
        assignment = find_fractional_factor(g, gl, fu)
        assert (assignment is not None) == expected
        if assignment is not None:
            assert assignment.satisfies(g, gl, fu)
            assert all(h in (0, 1, 2) for h in assignment.halves.values())


def test_assignment_accessors():
    g = cycle_graph(4)
    fa = find_fractional_factor(g, 1, 1)
    assert fa is not None
    assert set(fa.halves) == set(g.edges())
    for v in range(4):
        assert fa.vertex_numerator(v) == 2
    u, w = next(iter(g.edges()))
    assert fa.weight(u, w) == fa.weight(w, u) == Fraction(fa.halves[(u, w)], 2)
    data = fa.to_json()
    assert data["denominator"] == 2
    assert sorted(tuple(e[:2]) for e in data["weights"]) == sorted(g.edges())
    assert not fa.satisfies(g, 2, 2)
    assert not fa.satisfies(delete_edge(g, u, w), 1, 1)


def test_flow_certificate_infeasible():
    assert find_fractional_factor(star_graph(3), 1, 1) is None
    assert find_fractional_factor(Graph(3), 1, 1) is None
    fa = find_fractional_factor(Graph(3), 0, 0)
    assert fa is not None and fa.halves == {}


# --- integer factors ------------------------------------------------------------


def test_lovasz_small_cases():
    assert has_gf_factor_lovasz(complete(2), 1, 1)
    assert not has_gf_factor_lovasz(cycle_graph(5), 1, 1)
    assert has_gf_factor_lovasz(cycle_graph(5), 1, 2)
    assert has_gf_factor_lovasz(cycle_graph(6), 1, 1)
    assert not has_gf_factor_lovasz(star_graph(3), 1, 1)
    assert has_gf_factor_lovasz(Graph(3), 0, 0)


def test_lovasz_matches_brute_force_matching():
    rng = random.Random(103)
    for _ in range(150):
        g = gnp(rng.randint(2, 7), rng.choice([0.3, 0.6]), rng)
        assert has_gf_factor_lovasz(g, 1, 1) == has_perfect_matching(g)


def test_lovasz_implies_fractional():
    rng = random.Random(107)
    for _ in range(80):
        g = gnp(rng.randint(2, 8), 0.5, rng)
        gl = rng.randint(0, 2)
        fu = gl + rng.randint(0, 1)
        if has_gf_factor_lovasz(g, gl, fu):
            assert has_fractional_gf_factor(g, gl, fu)[0]


def test_lovasz_disconnected():
    two_triangles = disjoint_union(complete(3), complete(3))
    assert has_gf_factor_lovasz(two_triangles, 2, 2)
    # the odd component cannot be perfectly matched even though the even one can
    assert not has_gf_factor_lovasz(disjoint_union(complete(3), complete(2)), 1, 1)


# --- size guards ------------------------------------------------------------------


def test_subset_guard():
    g = path_graph(25)
    with pytest.raises(SizeGuardError):
        is_fractional_ab_deleted(g, 1, 3)
    with pytest.raises(SizeGuardError):
        has_fractional_gf_factor(g, 1, 3)
    with pytest.raises(SizeGuardError):
        is_fractional_ab_deleted_by_edges(g, 1, 3)
    # tighter override refuses smaller graphs; looser one admits them
    with pytest.raises(SizeGuardError):
        is_fractional_ab_deleted(path_graph(10), 1, 3, max_n=9)
    assert is_fractional_ab_deleted(path_graph(10), 1, 3, max_n=10)[0] is False


def test_pair_guard():
    g = path_graph(13)
    with pytest.raises(SizeGuardError):
        has_gf_factor_lovasz(g, 1, 1)
    with pytest.raises(SizeGuardError):
        has_gf_factor_lovasz(path_graph(8), 1, 1, max_n=7)
    # flow route has no guard
    assert find_fractional_factor(path_graph(30), 0, 1) is not None
