"""Facet reasoning over Dung-style abstract argumentation frameworks.

The package bundles a framework data model with ICCMA-format parsing,
an extension search engine for eight semantics, credulous/skeptical
narrowing, facet and significance computation, navigation sessions,
instance generators for the classic CNF/QBF constructions, a benchmark
harness, a CLI, and a JSON HTTP service.
"""

from .errors import (
    ArgFacetsError,
    BudgetExceededError,
    EmptyHistoryError,
    FormulaError,
    FrameworkError,
    NotACurrentFacetError,
    NotAFacetError,
    OracleLimitError,
    ParseError,
)
from .facets import (
    FacetReport,
    Literal,
    NavigationSession,
    Polarity,
    SessionState,
    SignificanceEntry,
    approve,
    count_facets,
    disapprove,
    facet_report,
    has_at_least,
    has_at_most,
    has_exactly,
    is_facet,
    session_approve,
    session_create,
    session_state,
    session_undo,
    significance,
    significance_table,
)
from .formats import FORMATS, parse_framework, render_framework
from .framework import (
    ALL_SEMANTICS,
    Argument,
    ArgumentSet,
    ArgumentationFramework,
    Semantics,
)
from .reductions import (
    CnfFormula,
    QbfForallExists,
    SatUnsatInstance,
    cnf_satisfiable,
    copy_gadget,
    duplicate_argument,
    guard_satisfiable,
    parse_dimacs,
    parse_qdimacs_ae,
    qbf_is_true,
    qbf_reduction,
    random_af,
    random_cnf,
    satunsat_instance,
    standard_translation,
    union_frameworks,
)
from .search import (
    Budget,
    Constraints,
    EnumerationResult,
    SearchStats,
    brute_force,
    credulous_set,
    enumerate_extensions,
    exists_extension,
    skeptical_set,
)
from .semantics import defended, range_of, satisfies

__version__ = "0.1.0"

__all__ = [
    "ALL_SEMANTICS",
    "ArgFacetsError",
    "Argument",
    "ArgumentSet",
    "ArgumentationFramework",
    "Budget",
    "BudgetExceededError",
    "CnfFormula",
    "Constraints",
    "EmptyHistoryError",
    "EnumerationResult",
    "FacetReport",
    "FORMATS",
    "FormulaError",
    "FrameworkError",
    "Literal",
    "NavigationSession",
    "NotACurrentFacetError",
    "NotAFacetError",
    "OracleLimitError",
    "ParseError",
    "Polarity",
    "QbfForallExists",
    "SatUnsatInstance",
    "SearchStats",
    "Semantics",
    "SessionState",
    "SignificanceEntry",
    "approve",
    "brute_force",
    "cnf_satisfiable",
    "copy_gadget",
    "count_facets",
    "credulous_set",
    "defended",
    "disapprove",
    "duplicate_argument",
    "enumerate_extensions",
    "exists_extension",
    "facet_report",
    "guard_satisfiable",
    "has_at_least",
    "has_at_most",
    "has_exactly",
    "is_facet",
    "parse_dimacs",
    "parse_framework",
    "parse_qdimacs_ae",
    "qbf_is_true",
    "qbf_reduction",
    "random_af",
    "random_cnf",
    "range_of",
    "render_framework",
    "satisfies",
    "satunsat_instance",
    "session_approve",
    "session_create",
    "session_state",
    "session_undo",
    "significance",
    "significance_table",
    "skeptical_set",
    "standard_translation",
    "union_frameworks",
]
