"""Exact solvers for domination, total domination, and k-rainbow domination.

Both engines follow the same scheme: a cheap greedy pass gives an upper bound,
then iterative deepening on the objective runs a depth-first search whose
branching targets the lowest-index vertex that is not yet satisfied. Pruning
combines an infeasibility test (a vertex that can no longer be fixed by any
future decision) with an admissible remaining-cost bound. Searches count branch
nodes against an explicit budget and raise instead of approximating.

Disconnected inputs are decomposed into components and the per-component
results are merged, so every invariant is the sum over components.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BudgetError,
    CapExceededError,
    CapacityError,
    IsolatedVertexError,
    PreconditionError,
)
from .graphs import Graph, components, induced_subgraph, iter_bits, max_degree
from .labelings import RainbowLabeling

DEFAULT_NODE_BUDGET = 10**8
SOLVER_VERTEX_CAP = 64


@dataclass(frozen=True)
class SolveResult:
    """An exact optimum with a validating witness and search statistics."""

    value: int
    witness: object  # frozenset[int] for set problems, RainbowLabeling otherwise
    nodes_explored: int


@dataclass(frozen=True)
class PairWitness:
    """A minimum 2-RDF that uses the label {1,2} somewhere.

    u carries {1,2}. When the minimum weight is 3 the single remaining
    nonempty vertex v is reported too, color-swapped so its label is {1}.
    """

    u: int
    v: int | None
    labeling: RainbowLabeling


def _check_cap(g: Graph):
    if g.n > SOLVER_VERTEX_CAP:
        raise CapacityError(
            f"exact solvers handle at most {SOLVER_VERTEX_CAP} vertices, got {g.n}"
        )


# ---------------------------------------------------------------------------
# set-cover style engine (domination, total domination, couple completion)


def _greedy_cover(full: int, cover: list[int], allowed: int):
    covered = 0
    chosen = []
    while covered & full != full:
        best_u, best_c = -1, 0
        for u in iter_bits(allowed):
            c = (cover[u] & full & ~covered).bit_count()
            if c > best_c:
                best_u, best_c = u, c
        if best_u < 0:
            return None
        chosen.append(best_u)
        covered |= cover[best_u]
    return chosen


def _min_cover(full: int, cover: list[int], allowed: int, stats: list[int], budget: int):
    """Smallest S within `allowed` with union of cover[u] over S covering `full`.

    Returns a list of chosen vertices, or None when infeasible.
    """
    if full == 0:
        return []
    greedy = _greedy_cover(full, cover, allowed)
    if greedy is None:
        return None
    cover_by = [0] * len(cover)
    for u in iter_bits(allowed):
        for v in iter_bits(cover[u] & full):
            cover_by[v] |= 1 << u

    maxcov_all = max((cover[u] & full).bit_count() for u in iter_bits(allowed))
    lb = -(-full.bit_count() // maxcov_all)

    def dfs(covered: int, banned: int, chosen: list[int], cap: int):
        stats[0] += 1
        if stats[0] > budget:
            raise BudgetError(f"node budget {budget} exhausted")
        if covered & full == full:
            return list(chosen)
        if len(chosen) == cap:
            return None
        rem = full & ~covered
        avail = allowed & ~banned
        maxcov = 0
        for u in iter_bits(avail):
            c = (cover[u] & rem).bit_count()
            if c > maxcov:
                maxcov = c
        if maxcov == 0:
            return None
        if len(chosen) + -(-rem.bit_count() // maxcov) > cap:
            return None
        v = (rem & -rem).bit_length() - 1
        opts = cover_by[v] & ~banned
        local_ban = banned
        for u in iter_bits(opts):
            chosen.append(u)
            r = dfs(covered | cover[u], local_ban, chosen, cap)
            chosen.pop()
            if r is not None:
                return r
            # sets containing u were fully explored in this branch
            local_ban |= 1 << u
        return None

    for cap in range(lb, len(greedy)):
        r = dfs(0, 0, [], cap)
        if r is not None:
            return r
    return greedy


def min_dominating_set(g: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET) -> SolveResult:
    """Exact minimum dominating set."""
    _check_cap(g)
    stats = [0]
    witness: set[int] = set()
    for comp in components(g):
        sub, back = induced_subgraph(g, comp)
        cover = [sub.closed(v) for v in range(sub.n)]
        chosen = _min_cover(sub.full_mask, cover, sub.full_mask, stats, node_budget)
        witness.update(back[u] for u in chosen)
    return SolveResult(len(witness), frozenset(witness), stats[0])


def min_total_dominating_set(g: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET) -> SolveResult:
    """Exact minimum total dominating set; requires no isolated vertices."""
    _check_cap(g)
    for v in range(g.n):
        if g.adj[v] == 0:
            raise IsolatedVertexError(f"isolated vertex {v} admits no total domination")
    stats = [0]
    witness: set[int] = set()
    for comp in components(g):
        sub, back = induced_subgraph(g, comp)
        cover = list(sub.adj)
        chosen = _min_cover(sub.full_mask, cover, sub.full_mask, stats, node_budget)
        witness.update(back[u] for u in chosen)
    return SolveResult(len(witness), frozenset(witness), stats[0])


# ---------------------------------------------------------------------------
# rainbow labeling engine


class _EnumStop(Exception):
    pass


def _rainbow_fixed(
    g: Graph,
    k: int,
    w_cap: int,
    *,
    forced: dict[int, int] | None = None,
    require_full: bool = False,
    require_all_colors: bool = False,
    symmetry: bool = True,
    stats: list[int],
    node_budget: int,
    collector: list | None = None,
    collect_limit: int = 0,
):
    """Depth-limited search for a valid k-rainbow labeling of weight <= w_cap.

    Vertices are assigned in index order and label values are tried in
    ascending mask order, so the first solution is the lexicographically
    smallest one within the weight cap. With a collector, every solution is
    recorded (up to collect_limit) instead of stopping at the first.
    """
    n = g.n
    fullc = (1 << k) - 1
    nbr = list(g.adj)
    supplied = [0] * (n + 1)  # supplied[i] = vertices with a neighbor of index >= i
    for i in range(n - 1, -1, -1):
        supplied[i] = supplied[i + 1] | nbr[i]
    if forced:
        symmetry = False
        for v, m in forced.items():
            if not (0 <= v < n) or m & ~fullc:
                raise PreconditionError("bad forced assignment")
    prefix_masks = {0} | {(1 << t) - 1 for t in range(1, k + 1)}

    masks = [0] * n
    seen = [0] * k  # seen[c] = vertices adjacent to an assigned vertex carrying c

    def dfs(i: int, wt: int, usedc: int, has_full: bool, any_nonempty: bool, zero: int):
        stats[0] += 1
        if stats[0] > node_budget:
            raise BudgetError(f"node budget {node_budget} exhausted")
        if i == n:
            if require_full and not has_full:
                return None
            if require_all_colors and usedc != fullc:
                return None
            if collector is not None:
                collector.append(tuple(masks))
                if len(collector) >= collect_limit:
                    raise _EnumStop
                return None
            return tuple(masks)
        if forced is not None and i in forced:
            options = (forced[i],)
        else:
            options = range(fullc + 1)
        future = supplied[i + 1]
        for m in options:
            mw = m.bit_count()
            if wt + mw > w_cap:
                continue
            if symmetry and not any_nonempty and m and m not in prefix_masks:
                continue
            masks[i] = m
            snapshot = None
            zero2 = zero
            if m == 0:
                zero2 |= 1 << i
            else:
                snapshot = seen.copy()
                for c in iter_bits(m):
                    seen[c] |= nbr[i]
            used2 = usedc | m
            full2 = has_full or m == fullc
            ok = True
            bound = 0
            for c in range(k):
                need = zero2 & ~seen[c]
                if need:
                    if need & ~future:
                        ok = False
                        break
                    maxcov = 0
                    for u in range(i + 1, n):
                        cc = (nbr[u] & need).bit_count()
                        if cc > maxcov:
                            maxcov = cc
                    bound += -(-need.bit_count() // maxcov)
                elif require_all_colors and not (used2 >> c) & 1:
                    bound += 1
            if ok:
                extra = k if (require_full and not full2) else 0
                if wt + mw + max(bound, extra) <= w_cap:
                    r = dfs(i + 1, wt + mw, used2, full2, any_nonempty or m != 0, zero2)
                    if r is not None:
                        if snapshot is not None:
                            seen[:] = snapshot
                        return r
            if snapshot is not None:
                seen[:] = snapshot
        return None

    try:
        return dfs(0, 0, 0, False, False, 0)
    except _EnumStop:
        return None


def _rainbow_greedy(g: Graph, k: int) -> tuple[int, ...]:
    # full label on a greedy dominating set is always valid
    cover = [g.closed(v) for v in range(g.n)]
    chosen = _greedy_cover(g.full_mask, cover, g.full_mask) or []
    masks = [0] * g.n
    for v in chosen:
        masks[v] = (1 << k) - 1
    return tuple(masks)


def _rainbow_min_component(
    g: Graph, k: int, stats: list[int], node_budget: int
) -> tuple[int, ...]:
    if g.n == 0:
        return ()
    greedy = _rainbow_greedy(g, k)
    ub = sum(m.bit_count() for m in greedy)
    lb = max(1, -(-g.n // (max_degree(g) + 1)))
    for cap in range(lb, ub):
        r = _rainbow_fixed(g, k, cap, stats=stats, node_budget=node_budget)
        if r is not None:
            return r
    return greedy


def _merge_component_masks(g: Graph, per_comp: list[tuple[list[int], tuple[int, ...]]]) -> tuple[int, ...]:
    merged = [0] * g.n
    for back, masks in per_comp:
        for i, m in enumerate(masks):
            merged[back[i]] = m
    return tuple(merged)


def _validate_k(k: int):
    if not (1 <= k <= 8):
        raise PreconditionError("k must be between 1 and 8")


def min_rainbow(g: Graph, k: int, *, node_budget: int = DEFAULT_NODE_BUDGET) -> SolveResult:
    """Exact minimum k-rainbow domination number with a witness labeling.

    This is the direct label-space search; see min_rainbow_via_cartesian for
    the independent route through the Cartesian product.
    """
    _validate_k(k)
    _check_cap(g)
    stats = [0]
    parts = []
    for comp in components(g):
        sub, back = induced_subgraph(g, comp)
        parts.append((back, _rainbow_min_component(sub, k, stats, node_budget)))
    masks = _merge_component_masks(g, parts)
    labeling = RainbowLabeling(k, masks)
    return SolveResult(labeling.weight, labeling, stats[0])


def min_rainbow_via_cartesian(
    g: Graph, k: int, *, node_budget: int = DEFAULT_NODE_BUDGET
) -> SolveResult:
    """Minimum k-rainbow domination computed as a minimum dominating set of
    the Cartesian product with K_k, then mapped back to a labeling."""
    from .graphs import gen_complete
    from .labelings import dominating_set_to_rdf
    from .products import cartesian

    _validate_k(k)
    if g.n * k > SOLVER_VERTEX_CAP:
        raise CapacityError(
            f"product with K_{k} exceeds the {SOLVER_VERTEX_CAP}-vertex solver cap"
        )
    prod, _ = cartesian(g, gen_complete(k))
    res = min_dominating_set(prod, node_budget=node_budget)
    labeling = dominating_set_to_rdf(g, k, res.witness)
    return SolveResult(res.value, labeling, res.nodes_explored)


def enumerate_min_2rdfs(
    g: Graph, cap: int, *, node_budget: int = DEFAULT_NODE_BUDGET
):
    """Yield every minimum 2-rainbow dominating labeling of g, without
    duplicates, in lexicographic label order. Raises CapExceededError after
    yielding `cap` labelings if more exist; treat the results as partial."""
    if cap <= 0:
        raise PreconditionError("cap must be positive")
    base = min_rainbow(g, 2, node_budget=node_budget)
    stats = [0]
    found: list[tuple[int, ...]] = []
    _rainbow_fixed(
        g,
        2,
        base.value,
        symmetry=False,
        stats=stats,
        node_budget=node_budget,
        collector=found,
        collect_limit=cap + 1,
    )
    for masks in found[:cap]:
        yield RainbowLabeling(2, masks)
    if len(found) > cap:
        raise CapExceededError(f"more than {cap} minimum labelings exist")


def _swap12(mask: int) -> int:
    return ((mask & 1) << 1) | ((mask >> 1) & 1)


def pair_witness(h: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET) -> PairWitness | None:
    """Search for a minimum 2-RDF of h that assigns {1,2} somewhere.

    Runs one search constrained to contain a full label and compares its
    weight against the unconstrained optimum. Returns None iff no minimum
    2-RDF uses the label {1,2}.
    """
    base = min_rainbow(h, 2, node_budget=node_budget)
    stats = [0]
    r = _rainbow_fixed(
        h, 2, base.value, require_full=True, stats=stats, node_budget=node_budget
    )
    if r is None:
        return None
    masks = list(r)
    u = next(i for i, m in enumerate(masks) if m == 3)
    v = None
    if base.value == 3:
        v = next(i for i, m in enumerate(masks) if m and i != u)
        if masks[v] == 2:
            masks = [_swap12(m) for m in masks]
    return PairWitness(u, v, RainbowLabeling(2, tuple(masks)))
