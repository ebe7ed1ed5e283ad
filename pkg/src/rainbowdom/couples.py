"""Dominating couples.

An ordered pair (A, B) of disjoint vertex sets of G is a dominating couple
when every vertex outside B has a neighbor in A or in B. B-vertices are exempt
because in the product construction their whole layer carries a self-contained
rainbow labeling, while every other layer relies on an adjacent layer for its
colors. The two degenerate cases recover classical notions: (A, empty) works
iff A is a total dominating set, (empty, B) works iff B is a dominating set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    CapacityError,
    HTooSmallError,
    NotDisjointError,
    NotDominatingCoupleError,
    PreconditionError,
    RainbowDomError,
)
from .graphs import Graph, to_mask
from .labelings import RainbowLabeling
from .products import ProductIndex
from .solvers import (
    DEFAULT_NODE_BUDGET,
    SOLVER_VERTEX_CAP,
    _min_cover,
    _rainbow_fixed,
    min_dominating_set,
    min_rainbow,
    min_total_dominating_set,
)


@dataclass(frozen=True)
class DominatingCouple:
    a: frozenset[int]
    b: frozenset[int]

    def __post_init__(self):
        if self.a & self.b:
            raise NotDisjointError(f"sets share vertices {sorted(self.a & self.b)}")

    def cost(self, cost_a: int, cost_b: int) -> int:
        return cost_a * len(self.a) + cost_b * len(self.b)


def is_dominating_couple(g: Graph, a: frozenset[int], b: frozenset[int]) -> bool:
    """Check the couple condition: each x outside b has a neighbor in a | b."""
    for v in a | b:
        if not (0 <= v < g.n):
            raise PreconditionError(f"vertex {v} out of range")
    if a & b:
        raise NotDisjointError(f"sets share vertices {sorted(a & b)}")
    maskb = to_mask(b)
    inside = to_mask(a) | maskb
    return all(g.adj[x] & inside for x in range(g.n) if not (maskb >> x) & 1)


def min_couple_cost(
    g: Graph, cost_a: int, cost_b: int, *, node_budget: int = DEFAULT_NODE_BUDGET
) -> tuple[int, DominatingCouple]:
    """Minimum of cost_a*|A| + cost_b*|B| over all dominating couples of g.

    B is enumerated by increasing size (its unit cost is the larger one in
    every use here), and the cheapest completion A is an exact set cover of
    the vertices left without a neighbor in B. Two closed-form seeds, a
    minimum dominating set as B and a minimum total dominating set as A,
    give the initial bound.
    """
    if cost_a < 1 or cost_b < 1:
        raise PreconditionError("costs must be at least 1")
    if g.n > SOLVER_VERTEX_CAP:
        raise CapacityError(
            f"couple search handles at most {SOLVER_VERTEX_CAP} vertices, got {g.n}"
        )
    ds = min_dominating_set(g, node_budget=node_budget)
    best = cost_b * ds.value
    best_couple = DominatingCouple(frozenset(), ds.witness)
    if all(g.adj[v] for v in range(g.n)):
        tds = min_total_dominating_set(g, node_budget=node_budget)
        if cost_a * tds.value < best:
            best = cost_a * tds.value
            best_couple = DominatingCouple(tds.witness, frozenset())

    stats = [0]
    verts = range(g.n)
    for size_b in range(g.n + 1):
        base = cost_b * size_b
        if base >= best:
            break
        for bset in combinations(verts, size_b):
            maskb = to_mask(bset)
            nb = 0
            for v in bset:
                nb |= g.adj[v]
            rem = g.full_mask & ~maskb & ~nb  # needs a neighbor in A
            if rem == 0:
                if base < best:
                    best = base
                    best_couple = DominatingCouple(frozenset(), frozenset(bset))
                continue
            allowed = g.full_mask & ~maskb
            cover = list(g.adj)
            maxcov = max(
                ((cover[u] & rem).bit_count() for u in verts if (allowed >> u) & 1),
                default=0,
            )
            if maxcov == 0:
                continue
            if base + cost_a * -(-rem.bit_count() // maxcov) >= best:
                continue
            chosen = _min_cover(rem, cover, allowed, stats, node_budget)
            if chosen is None:
                # some remaining vertex has no potential A-neighbor
                continue
            total = base + cost_a * len(chosen)
            if total < best:
                best = total
                best_couple = DominatingCouple(frozenset(chosen), frozenset(bset))
    return best, best_couple


def couple_labeling(
    g: Graph,
    h: Graph,
    k: int,
    couple: DominatingCouple,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> RainbowLabeling:
    """Materialize the couple-based k-rainbow labeling of the lexicographic
    product of g and h, of weight k*|A| + (k-rainbow number of h)*|B|.

    A-layers put the full color set on layer vertex 0; B-layers copy one
    minimum k-rainbow labeling of h that uses all k colors.
    """
    if h.n < k:
        raise HTooSmallError(f"second factor needs at least {k} vertices, has {h.n}")
    if not is_dominating_couple(g, couple.a, couple.b):
        raise NotDominatingCoupleError("(A, B) is not a dominating couple of g")
    fullc = (1 << k) - 1
    base = min_rainbow(h, k, node_budget=node_budget)
    h_masks = base.witness.masks
    used = 0
    for m in h_masks:
        used |= m
    if used != fullc:
        stats = [0]
        r = _rainbow_fixed(
            h,
            k,
            base.value,
            require_all_colors=True,
            stats=stats,
            node_budget=node_budget,
        )
        if r is None:
            raise RainbowDomError(
                "no minimum k-rainbow labeling of h uses all colors; "
                "the couple construction does not apply"
            )
        h_masks = r
    idx = ProductIndex(g.n, h.n)
    masks = [0] * idx.size
    for v in couple.a:
        masks[idx.encode(v, 0)] = fullc
    for v in couple.b:
        for x in range(h.n):
            masks[idx.encode(v, x)] = h_masks[x]
    return RainbowLabeling(k, tuple(masks))
