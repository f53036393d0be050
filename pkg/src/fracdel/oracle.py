"""Exact deciders for fractional degree-constrained factors and their edge-deleted variants.

A fractional (g, f)-factor of G assigns each edge a weight in [0, 1] so that
every vertex v sees a weighted degree between g(v) and f(v). G is fractional
[a, b]-deleted when G - e has a fractional [a, b]-factor (constant g = a,
f = b) for every single edge e.

Three independent routes are provided and kept deliberately separate:

* ``is_fractional_ab_deleted``: a deficiency criterion over vertex subsets S
  with a derived low-degree set T, refuted by an explicit (S, T) witness;
* ``is_fractional_ab_deleted_by_edges``: the definition itself, running the
  subset-based fractional (g, f)-factor test on G - e for every edge;
* ``find_fractional_factor``: a constructive max-flow certificate producing
  half-integral edge weights that can be rechecked in exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, islice
from typing import Iterable, Iterator, Sequence

import numpy as np

from .graph import Graph, _bits, degree_sum_minus, delete_edge
from .maxflow import feasible_flow

__all__ = [
    "SUBSET_GUARD",
    "PAIR_GUARD",
    "SizeGuardError",
    "DeficiencyWitness",
    "FractionalAssignment",
    "epsilon",
    "theta",
    "deficiency_witness",
    "factor_deficiency_witness",
    "has_fractional_gf_factor",
    "is_fractional_ab_deleted",
    "is_fractional_ab_deleted_by_edges",
    "find_fractional_factor",
    "has_gf_factor_lovasz",
]

SUBSET_GUARD = 24  # 2^n subset enumerations refused above this without an override
PAIR_GUARD = 12  # 3^n (S, T) pair enumeration refused above this without an override

_TABLE_LIMIT = 16  # subset tables up to this n are built once and cached
_BLOCK_ROWS = 1 << 14


class SizeGuardError(RuntimeError):
    """Input too large for an exponential enumeration; pass max_n to override."""


@dataclass(frozen=True)
class DeficiencyWitness:
    """A subset pair (S, T) certifying failure, or recording the checked values.

    T is always derived from S by the rule named in ``rule``: for "deleted",
    T = {v not in S : d_{G-S}(v) <= a} and theta = b|S| + d_{G-S}(T) - a|T|
    must reach epsilon(S, T); for "factor", T = {v not in S : d_{G-S}(v) < g(v)}
    and theta = f(S) + d_{G-S}(T) - g(T) must reach epsilon = 0.
    """

    s: tuple[int, ...]
    t: tuple[int, ...]
    theta: int
    epsilon: int
    rule: str
    satisfied: bool

    def to_json(self) -> dict:
        return {
            "S": list(self.s),
            "T": list(self.t),
            "theta": self.theta,
            "epsilon": self.epsilon,
            "rule": self.rule,
        }


@dataclass(frozen=True)
class FractionalAssignment:
    """Half-integral edge weights, stored as numerators over denominator 2.

    ``halves`` maps every edge (u, v) with u < v to a numerator in {0, 1, 2},
    so all arithmetic on weights stays exact.
    """

    halves: dict[tuple[int, int], int]

    def weight(self, u: int, v: int) -> Fraction:
        key = (u, v) if u < v else (v, u)
        return Fraction(self.halves[key], 2)

    def vertex_numerator(self, v: int) -> int:
        """Twice the weighted degree of v."""
        return sum(h for (x, y), h in self.halves.items() if v == x or v == y)

    def satisfies(self, graph: Graph, g, f) -> bool:
        """Exact check: support is E(G) and every weighted degree lies in [g, f]."""
        gv, fv = _bounds_vectors(graph, g, f)
        if set(self.halves) != set(graph.edges()):
            return False
        if any(h not in (0, 1, 2) for h in self.halves.values()):
            return False
        num = [0] * graph.n
        for (x, y), h in self.halves.items():
            num[x] += h
            num[y] += h
        return all(2 * gv[v] <= num[v] <= 2 * fv[v] for v in range(graph.n))

    def to_json(self) -> dict:
        return {
            "denominator": 2,
            "weights": [[u, v, h] for (u, v), h in sorted(self.halves.items())],
        }


def _validate_ab(a: int, b: int) -> None:
    if not (isinstance(a, int) and isinstance(b, int)):
        raise ValueError(f"a and b must be integers, got {a!r}, {b!r}")
    if not (1 <= a <= b):
        raise ValueError(f"need 1 <= a <= b, got a={a}, b={b}")


def _require_vertices(graph: Graph) -> None:
    if graph.n < 1:
        raise ValueError("graph must have at least one vertex")


def _vertex_tuple(graph: Graph, vs: Iterable[int], name: str) -> tuple[int, ...]:
    out = sorted({int(v) for v in vs})
    for v in out:
        if not (0 <= v < graph.n):
            raise ValueError(f"vertex {v} in {name} out of range for n={graph.n}")
    return tuple(out)


def _bounds_vectors(graph: Graph, g, f) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Normalize g and f (int constants or per-vertex sequences) to tuples."""

    def vec(x, name: str) -> tuple[int, ...]:
        if isinstance(x, (int, np.integer)):
            return (int(x),) * graph.n
        xs = tuple(int(v) for v in x)
        if len(xs) != graph.n:
            raise ValueError(f"{name} has length {len(xs)}, expected {graph.n}")
        return xs

    gv, fv = vec(g, "g"), vec(f, "f")
    for v in range(graph.n):
        if not 0 <= gv[v] <= fv[v]:
            raise ValueError(f"need 0 <= g(v) <= f(v) at vertex {v}, got {gv[v]}, {fv[v]}")
    return gv, fv


def _check_subset_guard(n: int, max_n: int | None) -> None:
    limit = SUBSET_GUARD if max_n is None else max_n
    if n > limit:
        raise SizeGuardError(f"n={n} exceeds the subset-enumeration limit {limit}; pass max_n to override")


# --- subset enumeration ----------------------------------------------------
#
# All 2^n subsets are scanned in (size, lexicographic) order, the order that
# fixes which violating S is reported. Work is done on 0/1 membership
# matrices in int64, so every theta/epsilon below is exact integer
# arithmetic; numpy is only a fast substrate.


def _subsets_in_order(n: int) -> Iterator[tuple[int, ...]]:
    for k in range(n + 1):
        yield from combinations(range(n), k)


def _membership(combos: Sequence[tuple[int, ...]], n: int) -> np.ndarray:
    m = np.zeros((len(combos), n), dtype=np.int64)
    lens = [len(c) for c in combos]
    if sum(lens):
        rows = np.repeat(np.arange(len(combos)), lens)
        cols = np.fromiter((v for c in combos for v in c), dtype=np.int64, count=sum(lens))
        m[rows, cols] = 1
    return m


@lru_cache(maxsize=8)
def _full_table(n: int):
    combos = list(_subsets_in_order(n))
    m = _membership(combos, n)
    return combos, m, m.sum(axis=1)


def _subset_blocks(n: int):
    if n <= _TABLE_LIMIT:
        yield _full_table(n)
        return
    gen = _subsets_in_order(n)
    while batch := list(islice(gen, _BLOCK_ROWS)):
        m = _membership(batch, n)
        yield batch, m, m.sum(axis=1)


def _int_adjacency(graph: Graph) -> np.ndarray:
    a = np.zeros((graph.n, graph.n), dtype=np.int64)
    for u, v in graph.edges():
        a[u, v] = a[v, u] = 1
    return a


# --- criterion pieces -------------------------------------------------------


def epsilon(graph: Graph, s: Iterable[int], t: Iterable[int]) -> int:
    """2 if T is not independent; else 1 if some T-vertex has a neighbor
    outside S u T; else 0. S and T must be disjoint."""
    st = _vertex_tuple(graph, s, "S")
    tt = _vertex_tuple(graph, t, "T")
    smask = sum(1 << v for v in st)
    tmask = sum(1 << v for v in tt)
    if smask & tmask:
        raise ValueError("S and T must be disjoint")
    if any(graph.adjacency_mask(v) & tmask for v in tt):
        return 2
    rest = graph.full_mask() & ~(smask | tmask)
    if any(graph.adjacency_mask(v) & rest for v in tt):
        return 1
    return 0


def theta(graph: Graph, s: Iterable[int], t: Iterable[int], a: int, b: int) -> int:
    """b|S| + d_{G-S}(T) - a|T| for explicit disjoint S, T."""
    _validate_ab(a, b)
    st = _vertex_tuple(graph, s, "S")
    tt = _vertex_tuple(graph, t, "T")
    return b * len(st) + degree_sum_minus(graph, st, tt) - a * len(tt)


def _derived_t_deleted(graph: Graph, smask: int, a: int) -> tuple[int, ...]:
    return tuple(
        v for v in range(graph.n)
        if not smask >> v & 1 and (graph.adjacency_mask(v) & ~smask).bit_count() <= a
    )


def deficiency_witness(graph: Graph, s: Iterable[int], a: int, b: int) -> DeficiencyWitness:
    """Evaluate the deleted-criterion inequality at S with its derived T."""
    _validate_ab(a, b)
    _require_vertices(graph)
    st = _vertex_tuple(graph, s, "S")
    smask = sum(1 << v for v in st)
    tt = _derived_t_deleted(graph, smask, a)
    th = theta(graph, st, tt, a, b)
    ep = epsilon(graph, st, tt)
    return DeficiencyWitness(st, tt, th, ep, rule="deleted", satisfied=th >= ep)


def factor_deficiency_witness(graph: Graph, s: Iterable[int], g, f) -> DeficiencyWitness:
    """Evaluate the fractional (g, f)-factor inequality at S with its derived T."""
    _require_vertices(graph)
    gv, fv = _bounds_vectors(graph, g, f)
    st = _vertex_tuple(graph, s, "S")
    smask = sum(1 << v for v in st)
    tt = tuple(
        v for v in range(graph.n)
        if not smask >> v & 1 and (graph.adjacency_mask(v) & ~smask).bit_count() < gv[v]
    )
    value = sum(fv[v] for v in st) + degree_sum_minus(graph, st, tt) - sum(gv[v] for v in tt)
    return DeficiencyWitness(st, tt, value, 0, rule="factor", satisfied=value >= 0)


# --- deciders ----------------------------------------------------------------


def has_fractional_gf_factor(graph: Graph, g, f, max_n: int | None = None):
    """Exact test for a fractional (g, f)-factor.

    Scans every S (T derived as the strict low-degree set) and checks
    f(S) + d_{G-S}(T) - g(T) >= 0. Returns (True, None) or (False, witness)
    where the witness carries the first violating S in (size, lex) order.
    """
    _require_vertices(graph)
    gv, fv = _bounds_vectors(graph, g, f)
    _check_subset_guard(graph.n, max_n)
    adj = _int_adjacency(graph)
    deg = adj.sum(axis=1)
    gvec = np.array(gv, dtype=np.int64)
    fvec = np.array(fv, dtype=np.int64)
    for combos, m, _sizes in _subset_blocks(graph.n):
        rem_deg = deg[None, :] - m @ adj
        out = 1 - m
        t = ((rem_deg < gvec[None, :]) & (out == 1)).astype(np.int64)
        value = m @ fvec + (rem_deg * t).sum(axis=1) - t @ gvec
        bad = value < 0
        if bad.any():
            first = int(np.argmax(bad))
            return False, factor_deficiency_witness(graph, combos[first], gv, fv)
    return True, None


def is_fractional_ab_deleted(graph: Graph, a: int, b: int, max_n: int | None = None):
    """Exact test that G - e has a fractional [a, b]-factor for every edge e.

    Decided by the subset criterion: for every S, with the derived
    T = {v not in S : d_{G-S}(v) <= a}, theta(S, T) must reach epsilon(S, T).
    An edgeless graph is vacuously deleted (there is no edge to remove), so
    it returns (True, None) without scanning. Returns (False, witness) with
    the first violating S in (size, lex) order otherwise.
    """
    _validate_ab(a, b)
    _require_vertices(graph)
    _check_subset_guard(graph.n, max_n)
    if graph.edge_count == 0:
        return True, None
    adj = _int_adjacency(graph)
    deg = adj.sum(axis=1)
    for combos, m, sizes in _subset_blocks(graph.n):
        rem_deg = deg[None, :] - m @ adj
        out = 1 - m
        t = ((rem_deg <= a) & (out == 1)).astype(np.int64)
        th = b * sizes + (rem_deg * t).sum(axis=1) - a * t.sum(axis=1)
        t_adj = t @ adj
        not_independent = (t_adj * t).sum(axis=1) > 0
        has_outside_edge = (t_adj * (out - t)).sum(axis=1) > 0
        eps = np.where(not_independent, 2, np.where(has_outside_edge, 1, 0))
        bad = th < eps
        if bad.any():
            first = int(np.argmax(bad))
            return False, deficiency_witness(graph, combos[first], a, b)
    return True, None


def is_fractional_ab_deleted_by_edges(graph: Graph, a: int, b: int, max_n: int | None = None) -> bool:
    """The definition, verbatim: test G - e for every edge e. Vacuously true when edgeless."""
    _validate_ab(a, b)
    _require_vertices(graph)
    _check_subset_guard(graph.n, max_n)
    for u, v in graph.edges():
        ok, _ = has_fractional_gf_factor(delete_edge(graph, u, v), a, b, max_n=max_n)
        if not ok:
            return False
    return True


def find_fractional_factor(graph: Graph, g, f) -> FractionalAssignment | None:
    """Constructive route: a half-integral fractional (g, f)-factor, or None.

    Models the relaxation as a flow with lower bounds on the bipartite
    double cover: each edge uv becomes two unit arcs u->v' and v->u', each
    vertex must pull between g(v) and f(v) on both sides. Integer flows
    there are exactly twice a half-integral factor, and feasibility of the
    flow is equivalent to existence of a fractional factor, so this agrees
    with ``has_fractional_gf_factor`` on every input.
    """
    _require_vertices(graph)
    gv, fv = _bounds_vectors(graph, g, f)
    n = graph.n
    edges = list(graph.edges())
    source, sink = 0, 1
    left = lambda v: 2 + v
    right = lambda v: 2 + n + v
    arcs = []
    for v in range(n):
        arcs.append((source, left(v), gv[v], fv[v]))
        arcs.append((right(v), sink, gv[v], fv[v]))
    edge_base = len(arcs)
    for u, v in edges:
        arcs.append((left(u), right(v), 0, 1))
        arcs.append((left(v), right(u), 0, 1))
    flows = feasible_flow(2 + 2 * n, arcs, source, sink)
    if flows is None:
        return None
    halves = {
        (u, v): flows[edge_base + 2 * k] + flows[edge_base + 2 * k + 1]
        for k, (u, v) in enumerate(edges)
    }
    return FractionalAssignment(halves)


# --- integer (g, f)-factors --------------------------------------------------


def _mask_sums(vals: Sequence[int]) -> list[int]:
    out = [0] * (1 << len(vals))
    for mask in range(1, 1 << len(vals)):
        low = mask & -mask
        out[mask] = out[mask ^ low] + vals[low.bit_length() - 1]
    return out


def has_gf_factor_lovasz(graph: Graph, g, f, max_n: int | None = None) -> bool:
    """Exact test for an integer (g, f)-factor via the full deficiency form.

    For every disjoint pair (S, T) checks
    f(S) + d_{G-S}(T) - g(T) - q(S, T) >= 0, where q counts components C of
    G - (S u T) with g = f on all of C and f(V(C)) + e(C, T) odd. That is a
    3^n pair scan, so the guard is tighter than for the fractional tests.
    """
    _require_vertices(graph)
    gv, fv = _bounds_vectors(graph, g, f)
    limit = PAIR_GUARD if max_n is None else max_n
    if graph.n > limit:
        raise SizeGuardError(f"n={graph.n} exceeds the pair-enumeration limit {limit}; pass max_n to override")
    n = graph.n
    rows = [graph.adjacency_mask(v) for v in range(n)]
    full = graph.full_mask()
    gsum = _mask_sums(gv)
    fsum = _mask_sums(fv)
    tight = [gv[v] == fv[v] for v in range(n)]

    comp_cache: dict[int, list[tuple[int, int, bool]]] = {}

    def comp_info(avail: int) -> list[tuple[int, int, bool]]:
        cached = comp_cache.get(avail)
        if cached is not None:
            return cached
        info = []
        rem = avail
        while rem:
            comp = rem & -rem
            frontier = comp
            while frontier:
                grow = 0
                for w in _bits(frontier):
                    grow |= rows[w]
                frontier = grow & avail & ~comp
                comp |= frontier
            rem &= ~comp
            info.append((comp, fsum[comp], all(tight[w] for w in _bits(comp))))
        comp_cache[avail] = info
        return info

    for smask in range(1 << n):
        f_s = fsum[smask]
        rem_deg = [(rows[v] & ~smask).bit_count() for v in range(n)]
        compl = full & ~smask
        tmask = compl
        while True:
            d_t = sum(rem_deg[v] for v in _bits(tmask))
            g_t = gsum[tmask]
            q = 0
            for comp, f_c, uniform in comp_info(compl & ~tmask):
                if uniform and (f_c + sum((rows[w] & tmask).bit_count() for w in _bits(comp))) & 1:
                    q += 1
            if f_s + d_t - g_t - q < 0:
                return False
            if tmask == 0:
                break
            tmask = (tmask - 1) & compl
    return True
