"""Boolean function minors, their hypergraph counterpart, and verification tools."""

from .bfcore import (
    GapClass,
    GapTag,
    MinorWitness,
    TruthTable,
    Zhegalkin,
    arity_gap,
    canonical_form,
    classify_gap,
    essential_arity,
    essential_variables,
    identify,
    is_equivalent,
    is_irreducible_direct,
    is_minor,
    substitute,
    truth_table_from_zhegalkin,
    zhegalkin_from_truth_table,
)
from .hypergraph import (
    ContractionClass,
    ContractionClassPartition,
    Hypergraph,
    VertexMap,
    automorphisms,
    compose_quotients,
    contract,
    contraction_classes,
    ess_drop_analysis,
    hypergraph_of,
    is_2set_transitive,
    is_irreducible_by_contractions,
    is_isomorphic,
    polynomial_of,
    support,
    support_reduce,
    verify_quotient_map,
)
from .graphs import (
    AiDecomposition,
    Graph,
    JIGraphClass,
    JIKind,
    ai_decomposition,
    classify_join_irreducible,
    classify_property_p,
    complement,
    complete,
    cycle,
    disjoint_union,
    empty,
    graph_join,
    path,
    reduce_isolated,
    satisfies_property_p,
)
from .designs import (
    DesignParams,
    SteinerReport,
    builtin_instances,
    delete_pair,
    design_parameters,
    is_minus2_monomorphic,
    is_steiner,
    is_steiner_triple,
    steiner_report,
)
from .poset import Block, ClassRecord, enumerate_classes, levels, lower_covers

__version__ = "0.1.0"
