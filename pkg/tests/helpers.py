"""Shared test helpers: seeded random graphs and brute-force oracles."""

from __future__ import annotations

import random
from itertools import combinations

from fracdel import Graph, is_connected


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_connected(n: int, p: float, rng: random.Random) -> Graph:
    while True:
        g = gnp(n, p, rng)
        if is_connected(g) and g.n > 0:
            return g


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def has_perfect_matching(g: Graph) -> bool:
    """Brute-force matcher over vertex bitmasks, memoized."""
    if g.n % 2:
        return False
    memo: dict[int, bool] = {}

    def solve(mask: int) -> bool:
        if mask == 0:
            return True
        if mask in memo:
            return memo[mask]
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        ok = False
        nbrs = g.adjacency_mask(v) & rest
        while nbrs:
            u = (nbrs & -nbrs).bit_length() - 1
            nbrs &= nbrs - 1
            if solve(rest ^ (1 << u)):
                ok = True
                break
        memo[mask] = ok
        return ok

    return solve(g.full_mask())
