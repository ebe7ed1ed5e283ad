"""Explicit product labelings with provable weights.

Four constructions for labelings of the lexicographic product of g and h:

* total_dom_labeling: full color set over a minimum total dominating set,
  weight k * (total domination number of g), valid for every h.
* universal_vertex_labeling: full color set on a universal vertex of h over a
  minimum dominating set of g, weight k * (domination number of g).
* path_pattern_labeling: when g is a path and h has a pair witness, tile the
  path with the fixed digit patterns below; weight path_upper_bound(n).
* glued_family_labeling: the star-of-paths family, weight 4m + 2.

The digit patterns encode labels per path column on two rows of the product,
the u-row and the v-row, where (u, v) is a pair witness of h: digit 0 is the
empty label, 1 is {1}, 2 is {2}, 3 is {1,2}. Correctness needs only that u is
adjacent in h to every vertex except possibly v, which is forced whenever the
weight-3 labeling {1,2}@u, {1}@v is valid: all other vertices are empty and
must see color 2, available only at u.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DisconnectedError,
    IsolatedVertexError,
    NoPairWitnessError,
    NoUniversalVertexError,
    PreconditionError,
)
from .graphs import Graph, gen_glued_paths, is_connected
from .labelings import RainbowLabeling, is_k_rainbow_dominating
from .products import ProductIndex
from .solvers import (
    DEFAULT_NODE_BUDGET,
    min_dominating_set,
    min_rainbow,
    min_total_dominating_set,
)


@dataclass(frozen=True)
class PatternTile:
    """A fixed-width column pattern for tiling a path product."""

    length: int
    u_row: str
    v_row: str

    def __post_init__(self):
        if not (2 <= self.length <= 8):
            raise PreconditionError("tile length must be between 2 and 8")
        for row in (self.u_row, self.v_row):
            if len(row) != self.length or any(c not in "0123" for c in row):
                raise PreconditionError("tile rows must be length-matched digits 0..3")

    @property
    def weight(self) -> int:
        return sum(int(c).bit_count() for c in self.u_row + self.v_row)


_TILES = {
    2: PatternTile(2, "30", "10"),
    3: PatternTile(3, "030", "010"),
    4: PatternTile(4, "0330", "0000"),
    5: PatternTile(5, "02120", "01010"),
    6: PatternTile(6, "030030", "010010"),
    7: PatternTile(7, "0210210", "0100020"),
    8: PatternTile(8, "02102130", "01000200"),
}

# star-of-paths pattern: center column plus one five-column arm, repeated
_GLUED_CENTER = ("1", "2")
_GLUED_ARM = ("20120", "00010")


def tiles() -> dict[int, PatternTile]:
    """The seven path tiles, keyed by length."""
    return dict(_TILES)


def path_upper_bound(n: int) -> int:
    """Weight of the tiled 2-rainbow labeling of the product of P_n with any
    pair-witness graph: 6*(n // 7) + r, plus 1 when r = n % 7 is 1 or 2."""
    if n < 2:
        raise PreconditionError("path bound needs n >= 2")
    t, r = divmod(n, 7)
    return 6 * t + r + (1 if r in (1, 2) else 0)


def _tiling(n: int) -> list[int]:
    if n <= 8:
        return [n]
    t, r = divmod(n, 7)
    if r == 0:
        return [7] * t
    if r == 1:
        return [7] * (t - 1) + [8]
    return [7] * t + [r]


def _require_pair_witness(h: Graph, u: int, v: int, node_budget: int):
    if not (0 <= u < h.n and 0 <= v < h.n) or u == v:
        raise NoPairWitnessError("u, v must be distinct vertices of h")
    masks = [0] * h.n
    masks[u] = 3
    masks[v] = 1
    if not is_k_rainbow_dominating(h, RainbowLabeling(2, tuple(masks))):
        raise NoPairWitnessError(
            "the labeling {1,2} at u, {1} at v does not rainbow-dominate h"
        )
    if min_rainbow(h, 2, node_budget=node_budget).value != 3:
        raise NoPairWitnessError("h must have 2-rainbow domination number 3")


def path_pattern_labeling(
    n: int, h: Graph, u: int, v: int, *, node_budget: int = DEFAULT_NODE_BUDGET
) -> RainbowLabeling:
    """Tiled 2-rainbow labeling of the product of the standard path P_n
    (vertices 0..n-1 in path order) with h, of weight path_upper_bound(n)."""
    if n < 2:
        raise PreconditionError("tiling needs n >= 2")
    if not is_connected(h):
        raise DisconnectedError("h must be connected")
    _require_pair_witness(h, u, v, node_budget)
    idx = ProductIndex(n, h.n)
    masks = [0] * idx.size
    col = 0
    for length in _tiling(n):
        tile = _TILES[length]
        for j in range(length):
            masks[idx.encode(col + j, u)] = int(tile.u_row[j])
            masks[idx.encode(col + j, v)] = int(tile.v_row[j])
        col += length
    return RainbowLabeling(2, tuple(masks))


def total_dom_labeling(
    g: Graph, h: Graph, k: int, *, node_budget: int = DEFAULT_NODE_BUDGET
) -> RainbowLabeling:
    """Full color set at layer vertex 0 of each minimum-total-dominating-set
    layer; weight k * gamma_t(g), valid for every h."""
    if not (1 <= k <= 8):
        raise PreconditionError("k must be between 1 and 8")
    if h.n < 1:
        raise PreconditionError("h must be nonempty")
    if any(g.adj[x] == 0 for x in range(g.n)):
        raise IsolatedVertexError("g has an isolated vertex, gamma_t undefined")
    tds = min_total_dominating_set(g, node_budget=node_budget)
    idx = ProductIndex(g.n, h.n)
    masks = [0] * idx.size
    for d in tds.witness:
        masks[idx.encode(d, 0)] = (1 << k) - 1
    return RainbowLabeling(k, tuple(masks))


def universal_vertex_labeling(
    g: Graph, h: Graph, k: int, *, node_budget: int = DEFAULT_NODE_BUDGET
) -> RainbowLabeling:
    """Full color set at a universal vertex of h over each minimum-dominating-
    set layer; weight k * gamma(g). Requires gamma(h) = 1."""
    if not (1 <= k <= 8):
        raise PreconditionError("k must be between 1 and 8")
    hstar = next(
        (x for x in range(h.n) if h.adj[x] == h.full_mask & ~(1 << x)), None
    )
    if hstar is None:
        raise NoUniversalVertexError("h has no vertex adjacent to all others")
    ds = min_dominating_set(g, node_budget=node_budget)
    idx = ProductIndex(g.n, h.n)
    masks = [0] * idx.size
    for d in ds.witness:
        masks[idx.encode(d, hstar)] = (1 << k) - 1
    return RainbowLabeling(k, tuple(masks))


def glued_family_labeling(
    m: int, p2: int, h: Graph, u: int, v: int, *, node_budget: int = DEFAULT_NODE_BUDGET
) -> RainbowLabeling:
    """2-rainbow labeling of the product of gen_glued_paths(m, p2) with h,
    of weight 4m + 2, nonempty only on the u-row and v-row.

    Fixed pattern, derived once and frozen: the center column carries {1} on
    the u-row and {2} on the v-row; each arm carries u-row digits 20120 and
    v-row digits 00010 outward from the center; pendant columns are empty.
    """
    g = gen_glued_paths(m, p2)  # validates m, p2
    _require_pair_witness(h, u, v, node_budget)
    idx = ProductIndex(g.n, h.n)
    masks = [0] * idx.size
    masks[idx.encode(0, u)] = int(_GLUED_CENTER[0])
    masks[idx.encode(0, v)] = int(_GLUED_CENTER[1])
    for i in range(m):
        base = 1 + 5 * i
        for j in range(5):
            masks[idx.encode(base + j, u)] = int(_GLUED_ARM[0][j])
            masks[idx.encode(base + j, v)] = int(_GLUED_ARM[1][j])
    return RainbowLabeling(2, tuple(masks))
