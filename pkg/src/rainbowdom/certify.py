"""Certification of the 2-rainbow domination number of lexicographic products.

certify_rd_lex assembles exact values or intervals from case analysis on the
second factor h (always by its 2-rainbow number and pair-witness structure),
together with machine-checkable witnesses: a validating labeling for every
upper bound and the defining parameter (domination number, total domination
number, or optimal dominating couple) for every lower bound. Every certificate
is self-checked before it is returned: the upper labeling is re-validated on
the actual product graph and must match the claimed weight.

The case tags:

* TrivialH / TrivialG: one factor is a single vertex; the product collapses.
* RdH2: second factor has 2-rainbow number 2; exact value 2 * gamma(g).
* RdH4Plus: second factor has 2-rainbow number >= 4; exact 2 * gamma_t(g).
* RdH3NoPair: 2-rainbow number 3 and no minimum labeling uses {1,2}; exact
  couple optimum min(2|A| + 3|B|).
* RdH3Pair: 2-rainbow number 3 with a {1,2} minimum labeling; interval
  [2 * gamma(g), best known construction], except that gamma(g) = gamma_t(g)
  forces the exact value 2 * gamma(g) (tag GammaEqGammaT).
* ComponentSum: first factor disconnected; per-component sum.
* ComponentSum-NA: second factor disconnected; no closed-form case applies,
  the value is an exact solve (refused when strict=True).

verify_corpus replays every claim above against brute-force-scale exact
solves over a corpus of small first factors.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .couples import (
    DominatingCouple,
    couple_labeling,
    min_couple_cost,
)
from .constructions import (
    path_pattern_labeling,
    path_upper_bound,
    total_dom_labeling,
    universal_vertex_labeling,
)
from .errors import (
    BudgetError,
    CapExceededError,
    CapacityError,
    DisconnectedError,
    PreconditionError,
    RainbowDomError,
)
from .graphs import (
    Graph,
    components,
    enumerate_connected_graphs,
    induced_subgraph,
    is_connected,
    is_dominating_set,
    iter_bits,
    parse_graph6,
    to_graph6,
)
from .labelings import RainbowLabeling, is_k_rainbow_dominating
from .products import ProductIndex, lexicographic, project_g
from .solvers import (
    DEFAULT_NODE_BUDGET,
    SOLVER_VERTEX_CAP,
    PairWitness,
    enumerate_min_2rdfs,
    min_dominating_set,
    min_rainbow,
    min_rainbow_via_cartesian,
    min_total_dominating_set,
    pair_witness,
)


@dataclass(frozen=True)
class LowerWitness:
    """The parameter certifying a lower bound (or an exact solve)."""

    kind: str  # gamma | gamma_t | couple | exact_solve
    value: int
    vertices: frozenset[int] | None = None
    couple: DominatingCouple | None = None


@dataclass(frozen=True)
class Certificate:
    lo: int
    hi: int
    case: str
    citations: tuple[str, ...]
    upper_labeling: RainbowLabeling | None
    lower: LowerWitness | None
    refined_exact: int | None = None
    refined_labeling: RainbowLabeling | None = None
    parts: tuple[tuple[tuple[int, ...], "Certificate"], ...] | None = None

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> int | None:
        if self.refined_exact is not None:
            return self.refined_exact
        return self.lo if self.exact else None

    def describe(self) -> str:
        if self.exact:
            head = f"exact {self.lo}, case {self.case}"
        else:
            head = f"interval [{self.lo},{self.hi}], case {self.case}"
            if self.refined_exact is not None:
                head += f"; refined exact {self.refined_exact}"
        return head


@dataclass(frozen=True)
class HClassification:
    tag: str  # TrivialH | RdH2 | RdH3Pair | RdH3NoPair | RdH4Plus
    rd2: int
    gamma: int
    pair: PairWitness | None
    labeling: RainbowLabeling  # one minimum 2-rainbow labeling of h


def general_bounds(g: Graph, k: int, *, node_budget: int = DEFAULT_NODE_BUDGET) -> tuple[int, int]:
    """[min(n, gamma + k - 2), k * gamma]: the universal k-rainbow bracket."""
    if k < 2:
        raise PreconditionError("the general bounds need k >= 2")
    gamma = min_dominating_set(g, node_budget=node_budget).value
    return min(g.n, gamma + k - 2), k * gamma


def classify_h(h: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET) -> HClassification:
    """Compute the case-analysis data for the second factor."""
    if h.n == 0:
        raise PreconditionError("h must be nonempty")
    if not is_connected(h):
        raise DisconnectedError("classification assumes a connected second factor")
    rd = min_rainbow(h, 2, node_budget=node_budget)
    gamma = min_dominating_set(h, node_budget=node_budget).value
    if h.n == 1:
        return HClassification("TrivialH", rd.value, gamma, None, rd.witness)
    pw = pair_witness(h, node_budget=node_budget)
    if rd.value == 2:
        tag = "RdH2"
    elif rd.value >= 4:
        tag = "RdH4Plus"
    elif pw is None:
        tag = "RdH3NoPair"
    else:
        tag = "RdH3Pair"
    return HClassification(tag, rd.value, gamma, pw, rd.witness)


def _path_order(g: Graph) -> list[int] | None:
    """Vertex order realizing g as a path, or None. g must be connected."""
    if g.n == 1:
        return [0]
    degs = [g.degree(v) for v in range(g.n)]
    ends = sorted(v for v, d in enumerate(degs) if d == 1)
    if len(ends) != 2 or any(d > 2 for d in degs):
        return None
    order = [ends[0]]
    prev = -1
    while len(order) < g.n:
        cur = order[-1]
        nxt = next(w for w in iter_bits(g.adj[cur]) if w != prev)
        prev = cur
        order.append(nxt)
    return order


def _self_check(g: Graph, h: Graph, cert: Certificate) -> Certificate:
    prod, _ = lexicographic(g, h)
    for labeling, weight in (
        (cert.upper_labeling, cert.hi),
        (cert.refined_labeling, cert.refined_exact),
    ):
        if labeling is None:
            continue
        if labeling.weight != weight or not is_k_rainbow_dominating(prod, labeling):
            raise RainbowDomError(
                "internal check failed: certificate witness does not validate"
            )
    if cert.lo > cert.hi:
        raise RainbowDomError("internal check failed: crossed bounds")
    return cert


def _certify_connected(
    g: Graph,
    h: Graph,
    hcls: HClassification,
    *,
    refine: bool,
    node_budget: int,
) -> Certificate:
    idx = ProductIndex(g.n, h.n)
    if h.n == 1:
        res = min_rainbow(g, 2, node_budget=node_budget)
        return _self_check(g, h, Certificate(
            lo=res.value,
            hi=res.value,
            case="TrivialH",
            citations=(
                "second factor is a single vertex, so the product is a copy "
                "of the first factor; value by exact solve",
            ),
            upper_labeling=res.witness,
            lower=LowerWitness("exact_solve", res.value),
        ))
    if g.n == 1:
        return _self_check(g, h, Certificate(
            lo=hcls.rd2,
            hi=hcls.rd2,
            case="TrivialG",
            citations=(
                "first factor is a single vertex, so the product is a copy "
                "of the second factor; value by exact solve",
            ),
            upper_labeling=hcls.labeling,
            lower=LowerWitness("exact_solve", hcls.rd2),
        ))

    if hcls.rd2 == 2:
        ds = min_dominating_set(g, node_budget=node_budget)
        upper = couple_labeling(
            g, h, 2, DominatingCouple(frozenset(), ds.witness), node_budget=node_budget
        )
        return _self_check(g, h, Certificate(
            lo=2 * ds.value,
            hi=2 * ds.value,
            case="RdH2",
            citations=(
                "a second factor with 2-rainbow number 2 forces the product "
                "value 2 * gamma(first factor)",
                "upper witness: minimum dominating layers carry an "
                "all-colors weight-2 labeling of the second factor",
            ),
            upper_labeling=upper,
            lower=LowerWitness("gamma", ds.value, vertices=ds.witness),
        ))

    if hcls.rd2 >= 4:
        tds = min_total_dominating_set(g, node_budget=node_budget)
        upper = total_dom_labeling(g, h, 2, node_budget=node_budget)
        return _self_check(g, h, Certificate(
            lo=2 * tds.value,
            hi=2 * tds.value,
            case="RdH4Plus",
            citations=(
                "a second factor with 2-rainbow number at least 4 forces the "
                "product value 2 * gamma_t(first factor)",
                "upper witness: full labels over a minimum total dominating set",
            ),
            upper_labeling=upper,
            lower=LowerWitness("gamma_t", tds.value, vertices=tds.witness),
        ))

    if hcls.pair is None:
        value, couple = min_couple_cost(g, 2, 3, node_budget=node_budget)
        upper = couple_labeling(g, h, 2, couple, node_budget=node_budget)
        return _self_check(g, h, Certificate(
            lo=value,
            hi=value,
            case="RdH3NoPair",
            citations=(
                "a second factor with 2-rainbow number 3 whose minimum "
                "labelings never use {1,2} forces the product value "
                "min(2|A| + 3|B|) over dominating couples (A, B)",
            ),
            upper_labeling=upper,
            lower=LowerWitness("couple", value, couple=couple),
        ))

    # 2-rainbow number 3 with a pair witness
    ds = min_dominating_set(g, node_budget=node_budget)
    tds = min_total_dominating_set(g, node_budget=node_budget)
    if tds.value == ds.value:
        upper = total_dom_labeling(g, h, 2, node_budget=node_budget)
        return _self_check(g, h, Certificate(
            lo=2 * ds.value,
            hi=2 * ds.value,
            case="GammaEqGammaT",
            citations=(
                "gamma(first factor) = gamma_t(first factor) pins the "
                "product value between 2*gamma and 2*gamma_t",
            ),
            upper_labeling=upper,
            lower=LowerWitness("gamma", ds.value, vertices=ds.witness),
        ))
    value, couple = min_couple_cost(g, 2, 3, node_budget=node_budget)
    hi = value
    upper = couple_labeling(g, h, 2, couple, node_budget=node_budget)
    citations = [
        "lower bound: twice the domination number of the first factor "
        "(valid for every nontrivial connected second factor)",
        "upper bound: best dominating couple, 2|A| + 3|B|",
    ]
    order = _path_order(g)
    if order is not None:
        pub = path_upper_bound(g.n)
        if pub < hi:
            pw = hcls.pair
            canon = path_pattern_labeling(
                g.n, h, pw.u, pw.v, node_budget=node_budget
            )
            masks = [0] * idx.size
            for i, gv in enumerate(order):
                for x in range(h.n):
                    masks[idx.encode(gv, x)] = canon.masks[idx.encode(i, x)]
            hi = pub
            upper = RainbowLabeling(2, tuple(masks))
            citations[1] = "upper bound: path tiling of weight path_upper_bound(n)"
    refined_exact = None
    refined_labeling = None
    if refine and idx.size <= SOLVER_VERTEX_CAP:
        prod, _ = lexicographic(g, h)
        try:
            res = min_rainbow(prod, 2, node_budget=node_budget)
        except BudgetError:
            pass
        else:
            if not (2 * ds.value <= res.value <= hi):
                raise RainbowDomError(
                    "internal check failed: exact solve escaped certified bounds"
                )
            refined_exact = res.value
            refined_labeling = res.witness
    return _self_check(g, h, Certificate(
        lo=2 * ds.value,
        hi=hi,
        case="RdH3Pair",
        citations=tuple(citations),
        upper_labeling=upper,
        lower=LowerWitness("gamma", ds.value, vertices=ds.witness),
        refined_exact=refined_exact,
        refined_labeling=refined_labeling,
    ))


def _effective(cert: Certificate) -> tuple[int, int, RainbowLabeling | None]:
    if cert.refined_exact is not None:
        return cert.refined_exact, cert.refined_exact, cert.refined_labeling
    return cert.lo, cert.hi, cert.upper_labeling


def certify_rd_lex(
    g: Graph,
    h: Graph,
    *,
    strict: bool = False,
    refine: bool = True,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Certificate:
    """Certificate for the 2-rainbow domination number of the product of g
    and h. Disconnected g is certified per component and summed; disconnected
    h admits no closed-form case, so the value is exact-solved unless
    strict."""
    if g.n == 0 or h.n == 0:
        return Certificate(
            lo=0,
            hi=0,
            case="TrivialG" if g.n == 0 else "TrivialH",
            citations=("empty product",),
            upper_labeling=RainbowLabeling(2, ()),
            lower=LowerWitness("exact_solve", 0),
        )
    if not is_connected(h):
        if strict:
            raise DisconnectedError(
                "the case theorems assume a connected second factor"
            )
        size = g.n * h.n
        if size > SOLVER_VERTEX_CAP:
            raise CapacityError(
                f"disconnected second factor falls back to an exact solve, "
                f"but the product has {size} > {SOLVER_VERTEX_CAP} vertices"
            )
        prod, _ = lexicographic(g, h)
        res = min_rainbow(prod, 2, node_budget=node_budget)
        return _self_check(g, h, Certificate(
            lo=res.value,
            hi=res.value,
            case="ComponentSum-NA",
            citations=(
                "second factor disconnected: no closed-form case applies; "
                "value by exact solve",
            ),
            upper_labeling=res.witness,
            lower=LowerWitness("exact_solve", res.value),
        ))
    hcls = classify_h(h, node_budget=node_budget)
    comps = components(g)
    if len(comps) == 1:
        return _certify_connected(g, h, hcls, refine=refine, node_budget=node_budget)
    idx = ProductIndex(g.n, h.n)
    parts = []
    lo = hi = 0
    masks = [0] * idx.size
    for comp in comps:
        sub, back = induced_subgraph(g, comp)
        cert = _certify_connected(sub, h, hcls, refine=refine, node_budget=node_budget)
        eff_lo, eff_hi, eff_lab = _effective(cert)
        lo += eff_lo
        hi += eff_hi
        sub_idx = ProductIndex(sub.n, h.n)
        for i in range(sub.n):
            for x in range(h.n):
                masks[idx.encode(back[i], x)] = eff_lab.masks[sub_idx.encode(i, x)]
        parts.append((tuple(back), cert))
    return _self_check(g, h, Certificate(
        lo=lo,
        hi=hi,
        case="ComponentSum",
        citations=(
            "first factor disconnected: the product value is the sum of the "
            "per-component values",
        ),
        upper_labeling=RainbowLabeling(2, tuple(masks)),
        lower=None,
        parts=tuple(parts),
    ))


def projection_property(g: Graph, idx: ProductIndex, f: RainbowLabeling) -> tuple[bool, bool]:
    """Whether the first-factor projections of the color-1 and color-2
    support of f (full labels count for both) each dominate g."""
    if f.k != 2:
        raise PreconditionError("the projection property is about 2-rainbow labelings")
    if len(f.masks) != idx.size or idx.ng != g.n:
        raise PreconditionError("labeling does not match the product index")
    support1 = {p for p, m in enumerate(f.masks) if m & 1}
    support2 = {p for p, m in enumerate(f.masks) if m & 2}
    return (
        is_dominating_set(g, project_g(idx, support1)),
        is_dominating_set(g, project_g(idx, support2)),
    )


# ---------------------------------------------------------------------------
# corpus verification


@dataclass
class CorpusReport:
    ng_max: int
    h_names: tuple[str, ...]
    product_cap: int
    tasks: int
    checks: dict[str, int] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)
    conjecture_notes: list[str] = field(default_factory=list)
    skips: list[str] = field(default_factory=list)
    wall_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_text(self) -> str:
        lines = [
            "corpus verification report",
            f"first factor: all connected graphs on 1..{self.ng_max} vertices",
            f"second factors: {', '.join(self.h_names)}",
            f"product cap: {self.product_cap} vertices",
            f"tasks: {self.tasks}",
            "checks performed:",
        ]
        lines.extend(f"  {name}: {count}" for name, count in sorted(self.checks.items()))
        if self.skips:
            lines.append("skips:")
            lines.extend(f"  - {s}" for s in self.skips)
        if self.conjecture_notes:
            lines.append("conjecture notes:")
            lines.extend(f"  - {s}" for s in self.conjecture_notes)
        lines.append(f"violations: {len(self.violations)}")
        lines.extend(f"  - {v}" for v in self.violations)
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "ng_max": self.ng_max,
            "h_names": list(self.h_names),
            "product_cap": self.product_cap,
            "tasks": self.tasks,
            "checks": dict(sorted(self.checks.items())),
            "violations": list(self.violations),
            "conjecture_notes": list(self.conjecture_notes),
            "skips": list(self.skips),
            "wall_seconds": self.wall_seconds,
        }


def _corpus_task(args: tuple) -> tuple[dict, list, list, list]:
    (g6g, g6h, run_g_checks, product_cap, enum_product_cap, enum_cap, node_budget) = args
    g = parse_graph6(g6g)
    h = parse_graph6(g6h)
    name = f"{g6g} o {g6h}"
    checks: dict[str, int] = {}
    violations: list[str] = []
    notes: list[str] = []
    skips: list[str] = []

    def bump(key: str):
        checks[key] = checks.get(key, 0) + 1

    def violate(msg: str):
        violations.append(f"{name}: {msg}")

    gamma_g = min_dominating_set(g, node_budget=node_budget).value
    if run_g_checks:
        for k in (1, 2):
            direct = min_rainbow(g, k, node_budget=node_budget).value
            via = min_rainbow_via_cartesian(g, k, node_budget=node_budget).value
            bump("rainbow_vs_cartesian")
            if direct != via:
                violate(f"k={k}: direct {direct} != cartesian route {via}")
        if min_rainbow(g, 1, node_budget=node_budget).value != gamma_g:
            violate("1-rainbow number differs from domination number")
        for k in (2, 3):
            lo, hi = general_bounds(g, k, node_budget=node_budget)
            val = min_rainbow(g, k, node_budget=node_budget).value
            bump("general_bounds")
            if not (lo <= val <= hi):
                violate(f"k={k}: value {val} outside general bounds [{lo},{hi}]")

    if g.n * h.n > product_cap:
        skips.append(f"{name}: product has {g.n * h.n} > {product_cap} vertices")
        return checks, violations, notes, skips

    try:
        prod, idx = lexicographic(g, h)
        exact = min_rainbow(prod, 2, node_budget=node_budget)
        hcls = classify_h(h, node_budget=node_budget)

        if g.n >= 2:
            tds = min_total_dominating_set(g, node_budget=node_budget)
            lab = total_dom_labeling(g, h, 2, node_budget=node_budget)
            bump("upper_total_dom")
            if lab.weight != 2 * tds.value or not is_k_rainbow_dominating(prod, lab):
                violate("total-domination labeling broken")
            elif exact.value > 2 * tds.value:
                violate(f"exact {exact.value} above 2*gamma_t {2 * tds.value}")

        if hcls.gamma == 1:
            lab = universal_vertex_labeling(g, h, 2, node_budget=node_budget)
            bump("upper_universal")
            if lab.weight != 2 * gamma_g or not is_k_rainbow_dominating(prod, lab):
                violate("universal-vertex labeling broken")
            elif exact.value > 2 * gamma_g:
                violate(f"exact {exact.value} above 2*gamma {2 * gamma_g}")

        if h.n >= 2:
            cost, couple = min_couple_cost(g, 2, hcls.rd2, node_budget=node_budget)
            lab = couple_labeling(g, h, 2, couple, node_budget=node_budget)
            bump("upper_couple")
            if lab.weight != cost or not is_k_rainbow_dominating(prod, lab):
                violate("couple labeling broken")
            elif exact.value > cost:
                violate(f"exact {exact.value} above couple optimum {cost}")

        if g.n >= 2 and h.n >= 2:
            bump("lower_2gamma")
            if exact.value < 2 * gamma_g:
                violate(f"exact {exact.value} below 2*gamma {2 * gamma_g}")

        cert = certify_rd_lex(g, h, refine=False, node_budget=node_budget)
        bump("case_value")
        if not (cert.lo <= exact.value <= cert.hi):
            violate(
                f"certificate {cert.describe()} excludes exact {exact.value}"
            )
        if cert.case == "RdH3Pair" and _path_order(g) is not None and g.n >= 2:
            pub = path_upper_bound(g.n)
            verdict = "attained" if exact.value == pub else "strict"
            notes.append(
                f"{name}: path conjecture {verdict}: exact {exact.value}, "
                f"tile bound {pub}"
            )

        if g.n >= 2 and h.n >= 3 and g.n * h.n <= enum_product_cap:
            try:
                all_good = True
                for f in enumerate_min_2rdfs(prod, enum_cap, node_budget=node_budget):
                    p1, p2 = projection_property(g, idx, f)
                    if not (p1 and p2):
                        all_good = False
                bump("projection_all_minima")
                if not all_good:
                    violate("a minimum labeling has a non-dominating projection")
            except CapExceededError:
                skips.append(f"{name}: more than {enum_cap} minimum labelings")

        if g.n >= 2 and h.n == 2 and h.m == 1 and g.n * h.n <= enum_product_cap:
            try:
                found = False
                for f in enumerate_min_2rdfs(prod, enum_cap, node_budget=node_budget):
                    p1, p2 = projection_property(g, idx, f)
                    if p1 and p2:
                        found = True
                        break
                bump("projection_exists")
                if not found:
                    violate("no minimum labeling has both projections dominating")
            except CapExceededError:
                skips.append(f"{name}: more than {enum_cap} minimum labelings")
    except BudgetError as exc:
        skips.append(f"{name}: budget exhausted ({exc})")
    return checks, violations, notes, skips


def verify_corpus(
    ng_max: int,
    h_list: list[Graph],
    product_cap: int,
    *,
    workers: int = 1,
    node_budget: int = DEFAULT_NODE_BUDGET,
    enum_product_cap: int = 14,
    enum_cap: int = 100000,
) -> CorpusReport:
    """Replay every certified claim against exact solves on the corpus of all
    connected first factors with up to ng_max vertices."""
    start = time.monotonic()
    corpus = []
    for n in range(1, ng_max + 1):
        corpus.extend(enumerate_connected_graphs(n))
    h_names = tuple(to_graph6(h) for h in h_list)
    tasks = [
        (to_graph6(g), g6h, hi == 0, product_cap, enum_product_cap, enum_cap, node_budget)
        for g in corpus
        for hi, g6h in enumerate(h_names)
    ]
    report = CorpusReport(
        ng_max=ng_max,
        h_names=h_names,
        product_cap=product_cap,
        tasks=len(tasks),
    )
    if workers <= 1:
        results = [_corpus_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_corpus_task, tasks, chunksize=4))
    for checks, violations, notes, skips in results:
        for key, count in checks.items():
            report.checks[key] = report.checks.get(key, 0) + count
        report.violations.extend(violations)
        report.conjecture_notes.extend(notes)
        report.skips.extend(skips)
    report.wall_seconds = time.monotonic() - start
    return report
