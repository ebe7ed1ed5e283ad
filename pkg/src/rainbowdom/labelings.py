"""k-rainbow labelings: weights, validity, partitions, and conversions.

A labeling assigns each vertex a subset of the colors 1..k, stored internally
as a bitmask (color i is bit i-1). A labeling is k-rainbow dominating when
every vertex labeled with the empty set sees all k colors across its open
neighborhood.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError, PreconditionError
from .graphs import Graph, iter_bits
from .products import ProductIndex


def _mask_to_colors(mask: int) -> frozenset[int]:
    return frozenset(b + 1 for b in iter_bits(mask))


def _colors_to_mask(colors, k: int) -> int:
    m = 0
    for c in colors:
        if not (1 <= c <= k):
            raise PreconditionError(f"color {c} outside 1..{k}")
        m |= 1 << (c - 1)
    return m


@dataclass(frozen=True)
class RainbowLabeling:
    """Per-vertex color subsets for a fixed k, as a tuple of bitmasks."""

    k: int
    masks: tuple[int, ...]

    def __post_init__(self):
        if not (1 <= self.k <= 8):
            raise PreconditionError("k must be between 1 and 8")
        top = (1 << self.k) - 1
        for v, m in enumerate(self.masks):
            if m & ~top:
                raise PreconditionError(f"label at vertex {v} uses colors beyond k")

    @classmethod
    def from_sets(cls, k: int, labels) -> "RainbowLabeling":
        return cls(k, tuple(_colors_to_mask(s, k) for s in labels))

    @property
    def n(self) -> int:
        return len(self.masks)

    def label(self, v: int) -> frozenset[int]:
        return _mask_to_colors(self.masks[v])

    @property
    def weight(self) -> int:
        return sum(m.bit_count() for m in self.masks)


def weight(f: RainbowLabeling) -> int:
    return f.weight


@dataclass(frozen=True)
class RainbowCheck:
    """Validity verdict; carries the first violating vertex on failure."""

    ok: bool
    violator: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_k_rainbow_dominating(g: Graph, f: RainbowLabeling) -> RainbowCheck:
    """Check the rainbow condition; vertices are scanned in index order."""
    if f.n != g.n:
        raise PreconditionError("labeling size does not match graph")
    full = (1 << f.k) - 1
    masks = f.masks
    for v in range(g.n):
        if masks[v]:
            continue
        seen = 0
        for u in iter_bits(g.adj[v]):
            seen |= masks[u]
            if seen == full:
                break
        if seen != full:
            return RainbowCheck(False, v)
    return RainbowCheck(True, None)


def induced_partition(f: RainbowLabeling) -> dict[frozenset[int], frozenset[int]]:
    """Vertex classes keyed by label value; only labels that occur appear."""
    buckets: dict[int, list[int]] = {}
    for v, m in enumerate(f.masks):
        buckets.setdefault(m, []).append(v)
    return {_mask_to_colors(m): frozenset(vs) for m, vs in buckets.items()}


def rdf_to_dominating_set(g: Graph, f: RainbowLabeling) -> frozenset[int]:
    """Map a valid k-RDF of G to a dominating set of the Cartesian product
    G x K_k under the row-major index (v, color i) -> v*k + i - 1."""
    check = is_k_rainbow_dominating(g, f)
    if not check:
        raise PreconditionError(
            f"labeling is not a valid {f.k}-rainbow dominating function"
            f" (vertex {check.violator})"
        )
    k = f.k
    out = []
    for v, m in enumerate(f.masks):
        for b in iter_bits(m):
            out.append(v * k + b)
    return frozenset(out)


def dominating_set_to_rdf(g: Graph, k: int, dom: frozenset[int] | set[int]) -> RainbowLabeling:
    """Inverse direction: a dominating set of G x K_k yields a k-RDF of the
    same weight. Raises when the set does not dominate the product."""
    from .products import cartesian  # local import avoids a cycle at module load
    from .graphs import gen_complete, is_dominating_set

    prod, _ = cartesian(g, gen_complete(k))
    if not is_dominating_set(prod, dom):
        raise PreconditionError("set does not dominate the Cartesian product")
    masks = [0] * g.n
    for x in dom:
        v, b = divmod(x, k)
        masks[v] |= 1 << b
    return RainbowLabeling(k, tuple(masks))


def layer_contribution(idx: ProductIndex, f: RainbowLabeling, g: int) -> int:
    """Total label weight inside the H-layer above G-vertex g."""
    if f.n != idx.size:
        raise PreconditionError("labeling size does not match product index")
    base = g * idx.nh if 0 <= g < idx.ng else None
    if base is None:
        raise PreconditionError(f"G-vertex {g} out of range")
    return sum(f.masks[base + x].bit_count() for x in range(idx.nh))


# ---------------------------------------------------------------------------
# text format: one line per vertex, "v: {1,2}" or "v: -" for the empty label


def format_labeling(f: RainbowLabeling) -> str:
    lines = []
    for v, m in enumerate(f.masks):
        if m:
            inside = ",".join(str(b + 1) for b in iter_bits(m))
            lines.append(f"{v}: {{{inside}}}")
        else:
            lines.append(f"{v}: -")
    return "\n".join(lines) + "\n"


def parse_labeling(text: str, k: int) -> RainbowLabeling:
    entries: dict[int, int] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise ParseError(f"bad labeling line: {line!r}")
        try:
            v = int(head.strip())
        except ValueError as exc:
            raise ParseError(f"bad vertex index in line: {line!r}") from exc
        if v in entries:
            raise ParseError(f"duplicate vertex {v} in labeling")
        tail = tail.strip()
        if tail == "-":
            entries[v] = 0
            continue
        if not (tail.startswith("{") and tail.endswith("}")):
            raise ParseError(f"bad label in line: {line!r}")
        body = tail[1:-1].strip()
        mask = 0
        if body:
            for part in body.split(","):
                try:
                    c = int(part.strip())
                except ValueError as exc:
                    raise ParseError(f"bad color in line: {line!r}") from exc
                if not (1 <= c <= k):
                    raise ParseError(f"color {c} outside 1..{k} in line: {line!r}")
                mask |= 1 << (c - 1)
        entries[v] = mask
    if not entries:
        raise ParseError("empty labeling text")
    n = len(entries)
    if sorted(entries) != list(range(n)):
        raise ParseError("labeling must cover vertices 0..n-1 exactly once")
    return RainbowLabeling(k, tuple(entries[v] for v in range(n)))
