"""Extremal planar graph toolkit: constructions, pattern-freeness,
exhaustive enumeration, and planar Turán formulas."""

from .canon import canonical_code, canonical_form, is_isomorphic
from .embedding import (
    DisconnectedGraphError,
    FaceVector,
    PlaneEmbedding,
    embed_planar,
    is_planar,
    is_triangulation,
)
from .graph6 import from_graph6, to_dot, to_graph6
from .graphs import (
    Graph,
    build_primitive,
    complete_bipartite,
    complete_graph,
    copies,
    cycle_graph,
    disjoint_union,
    empty_graph,
    join,
    path_graph,
    star_graph,
)
from .matching import max_matching, maximum_matching_edges
from .oracle import (
    BudgetExhausted,
    ExpensiveCensusError,
    SearchBudget,
    TriangulationCensus,
    enumerate_triangulations,
    exact_planar_turan,
    exists_planar_with_degree_profile,
    search_witness,
)
from .patterns import (
    ConeGraph,
    ConePath,
    Explicit,
    Fan,
    Match,
    PatternGuardError,
    PatternSpec,
    Star,
    Wheel,
    chromatic_classify,
    contains_subgraph,
    has_cycle_of_length,
    has_path_on,
    has_three_disjoint_cycles,
    is_pattern_free,
    pattern_match,
    realize,
)
from .formulas import (
    FormulaRangeError,
    NoFormulaError,
    Prop13Verdict,
    formula_value,
    prop13_classify,
    reference_bounds,
    verify_verdict,
)
from .values import TuranValue

__version__ = "0.1.0"
