"""Shared fixtures and independent brute-force oracles.

The oracles deliberately avoid the package's solver machinery: they work on
explicit vertex/edge sets with exhaustive iteration, so agreement with the
fast solvers is meaningful evidence. Keep them dumb.
"""

from __future__ import annotations

import itertools

import pytest

from rainbowdom import Graph, enumerate_connected_graphs, from_edge_list


# ---------------------------------------------------------------------------
# oracle helpers (independent implementations)


def nbrs(g: Graph) -> list[set[int]]:
    out = [set() for _ in range(g.n)]
    for u, v in g.edges():
        out[u].add(v)
        out[v].add(u)
    return out


def brute_is_dominating(g: Graph, s) -> bool:
    nb = nbrs(g)
    s = set(s)
    return all(v in s or nb[v] & s for v in range(g.n))


def brute_is_total_dominating(g: Graph, s) -> bool:
    nb = nbrs(g)
    s = set(s)
    return all(nb[v] & s for v in range(g.n))


def brute_min_dominating(g: Graph) -> int:
    for size in range(g.n + 1):
        for s in itertools.combinations(range(g.n), size):
            if brute_is_dominating(g, s):
                return size
    raise AssertionError("unreachable")


def brute_min_total_dominating(g: Graph) -> int | None:
    """None when no total dominating set exists (isolated vertex)."""
    for size in range(g.n + 1):
        for s in itertools.combinations(range(g.n), size):
            if brute_is_total_dominating(g, s):
                return size
    return None


def brute_valid_rdf(g: Graph, k: int, labels: tuple[frozenset[int], ...]) -> bool:
    nb = nbrs(g)
    full = set(range(1, k + 1))
    for v in range(g.n):
        if labels[v]:
            continue
        seen = set()
        for w in nb[v]:
            seen |= labels[w]
        if seen != full:
            return False
    return True


def _all_labelings(n: int, k: int):
    colorsets = [frozenset(c) for size in range(k + 1)
                 for c in itertools.combinations(range(1, k + 1), size)]
    return itertools.product(colorsets, repeat=n)


def brute_min_rainbow(g: Graph, k: int) -> int:
    best = None
    for labels in _all_labelings(g.n, k):
        if best is not None and sum(len(c) for c in labels) >= best:
            continue
        if brute_valid_rdf(g, k, labels):
            w = sum(len(c) for c in labels)
            best = w if best is None else min(best, w)
    assert best is not None
    return best


def brute_min_2rdfs(g: Graph) -> list[tuple[int, ...]]:
    """All minimum 2-rainbow labelings as mask tuples, sorted."""
    best = brute_min_rainbow(g, 2)
    out = []
    for labels in _all_labelings(g.n, 2):
        if sum(len(c) for c in labels) != best:
            continue
        if brute_valid_rdf(g, 2, labels):
            out.append(tuple(sum(1 << (c - 1) for c in lab) for lab in labels))
    return sorted(out)


def brute_is_couple(g: Graph, a, b) -> bool:
    nb = nbrs(g)
    a, b = set(a), set(b)
    if a & b:
        return False
    return all(nb[x] & (a | b) for x in range(g.n) if x not in b)


def brute_min_couple_cost(g: Graph, ca: int, cb: int) -> int:
    best = None
    for assign in itertools.product((0, 1, 2), repeat=g.n):
        a = {v for v, t in enumerate(assign) if t == 1}
        b = {v for v, t in enumerate(assign) if t == 2}
        if brute_is_couple(g, a, b):
            cost = ca * len(a) + cb * len(b)
            best = cost if best is None else min(best, cost)
    assert best is not None, "every graph has the couple (emptyset, V)"
    return best


def perm_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    ea = {frozenset(e) for e in a.edges()}
    for perm in itertools.permutations(range(b.n)):
        if {frozenset((perm[u], perm[v])) for u, v in b.edges()} == ea:
            return True
    return False


def count_connected_by_edge_subsets(n: int) -> int:
    """Isomorphism classes of connected graphs, by raw edge-subset scan."""
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1]
        nb = [set() for _ in range(n)]
        for u, v in edges:
            nb[u].add(v)
            nb[v].add(u)
        stack, reach = [0], {0}
        while stack:
            for w in nb[stack.pop()]:
                if w not in reach:
                    reach.add(w)
                    stack.append(w)
        if len(reach) != n:
            continue
        canon = min(
            tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges))
            for p in itertools.permutations(range(n))
        )
        seen.add(canon)
    return len(seen)


# ---------------------------------------------------------------------------
# fixtures


@pytest.fixture(scope="session")
def corpus6() -> list[Graph]:
    out = []
    for n in range(1, 7):
        out.extend(enumerate_connected_graphs(n))
    return out


@pytest.fixture(scope="session")
def corpus5() -> list[Graph]:
    out = []
    for n in range(1, 6):
        out.extend(enumerate_connected_graphs(n))
    return out


@pytest.fixture(scope="session")
def spider() -> Graph:
    """A pair-witness second factor whose witness vertices are non-adjacent:
    2-rainbow number 3 with {1,2} at the center and {1} at the far leaf."""
    return from_edge_list(5, [(0, 1), (0, 2), (0, 3), (1, 4)])
