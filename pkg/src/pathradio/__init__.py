"""Optimal radio k-colorings of powers of paths."""

from .coloring import ColoringError, ColorSequence, RadioColoring
from .construct import (
    case_sequence,
    construct_optimal,
    greedy_color,
    prec1_less,
    prec2_less,
    reverse_chain,
    special_chain,
)
from .formula import (
    AS_PRINTED,
    CONSISTENT,
    CaseTag,
    HypothesisError,
    SpanFormulaResult,
    alpha1,
    alpha2_lower_bound,
    case_of,
    hypothesis_holds,
    min_valid_k,
    parity_offset,
    theorem_span,
)
from .graph import (
    InstanceError,
    Layering,
    NamedVertex,
    PathPowerGraph,
    build_graph,
    build_layering,
    diameter,
    distance,
)
from .oracle import (
    OracleResult,
    certify_instance,
    certify_theorem,
    greedy_span_of_order,
    rc_exact,
)
from .verify import (
    Decomposition,
    ValidityReport,
    check_coloring,
    classify_pair,
    decompose,
    lower_bound_certificate,
    run_polarity,
    sequence_of,
)

__version__ = "0.1.0"
