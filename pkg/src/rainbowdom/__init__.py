"""Exact computation and certification of rainbow domination invariants on
graphs and their lexicographic products."""

from .errors import (
    BudgetError,
    CapExceededError,
    CapacityError,
    DisconnectedError,
    HTooSmallError,
    IsolatedVertexError,
    NoPairWitnessError,
    NotDisjointError,
    NotDominatingCoupleError,
    NoUniversalVertexError,
    ParseError,
    PreconditionError,
    RainbowDomError,
)
from .graphs import (
    Graph,
    canonical_form,
    canonical_graph,
    components,
    enumerate_connected_graphs,
    from_edge_list,
    gen_complete,
    gen_cycle,
    gen_double_c4,
    gen_glued_paths,
    gen_path,
    gen_star,
    induced_subgraph,
    is_connected,
    is_dominating_set,
    is_isomorphic,
    is_total_dominating_set,
    max_degree,
    parse_edge_list,
    format_edge_list,
    parse_graph6,
    to_graph6,
)
from .products import (
    ProductIndex,
    cartesian,
    g_layer,
    h_layer,
    lexicographic,
    project_g,
    project_h,
)
from .labelings import (
    RainbowCheck,
    RainbowLabeling,
    dominating_set_to_rdf,
    format_labeling,
    induced_partition,
    is_k_rainbow_dominating,
    layer_contribution,
    parse_labeling,
    rdf_to_dominating_set,
    weight,
)
from .solvers import (
    DEFAULT_NODE_BUDGET,
    SOLVER_VERTEX_CAP,
    PairWitness,
    SolveResult,
    enumerate_min_2rdfs,
    min_dominating_set,
    min_rainbow,
    min_rainbow_via_cartesian,
    min_total_dominating_set,
    pair_witness,
)
from .couples import (
    DominatingCouple,
    couple_labeling,
    is_dominating_couple,
    min_couple_cost,
)
from .constructions import (
    PatternTile,
    glued_family_labeling,
    path_pattern_labeling,
    path_upper_bound,
    tiles,
    total_dom_labeling,
    universal_vertex_labeling,
)
from .certify import (
    Certificate,
    CorpusReport,
    HClassification,
    LowerWitness,
    certify_rd_lex,
    classify_h,
    general_bounds,
    projection_property,
    verify_corpus,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CapExceededError",
    "CapacityError",
    "Certificate",
    "CorpusReport",
    "DEFAULT_NODE_BUDGET",
    "DisconnectedError",
    "DominatingCouple",
    "Graph",
    "HClassification",
    "HTooSmallError",
    "IsolatedVertexError",
    "LowerWitness",
    "NoPairWitnessError",
    "NotDisjointError",
    "NotDominatingCoupleError",
    "NoUniversalVertexError",
    "PairWitness",
    "ParseError",
    "PatternTile",
    "PreconditionError",
    "ProductIndex",
    "RainbowCheck",
    "RainbowDomError",
    "RainbowLabeling",
    "SOLVER_VERTEX_CAP",
    "SolveResult",
    "canonical_form",
    "canonical_graph",
    "cartesian",
    "certify_rd_lex",
    "classify_h",
    "components",
    "couple_labeling",
    "dominating_set_to_rdf",
    "enumerate_connected_graphs",
    "enumerate_min_2rdfs",
    "format_edge_list",
    "format_labeling",
    "from_edge_list",
    "g_layer",
    "gen_complete",
    "gen_cycle",
    "gen_double_c4",
    "gen_glued_paths",
    "gen_path",
    "gen_star",
    "general_bounds",
    "glued_family_labeling",
    "h_layer",
    "induced_partition",
    "induced_subgraph",
    "is_connected",
    "is_dominating_couple",
    "is_dominating_set",
    "is_isomorphic",
    "is_k_rainbow_dominating",
    "is_total_dominating_set",
    "layer_contribution",
    "lexicographic",
    "max_degree",
    "min_couple_cost",
    "min_dominating_set",
    "min_rainbow",
    "min_rainbow_via_cartesian",
    "min_total_dominating_set",
    "pair_witness",
    "parse_edge_list",
    "parse_graph6",
    "parse_labeling",
    "path_pattern_labeling",
    "path_upper_bound",
    "project_g",
    "project_h",
    "projection_property",
    "rdf_to_dominating_set",
    "tiles",
    "to_graph6",
    "total_dom_labeling",
    "universal_vertex_labeling",
    "verify_corpus",
    "weight",
]
