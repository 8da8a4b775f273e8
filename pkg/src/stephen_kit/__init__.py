"""Schützenberger automata and word-problem decisions for inverse semigroup
presentations, with a static overlap analyzer for the one-relation Adian
classes whose closures are certified to terminate."""

from .decision import Answer, Verdict, decide_equal, decide_natural_leq, is_idempotent
from .engine import (
    Budget,
    ClosureResult,
    Direction,
    ExpansionSite,
    StaleSiteError,
    Status,
    close,
    elementary_expansion,
    find_expansions,
    full_p_expansion,
    schutzenberger_automaton,
)
from .oracle import (
    BruteClosure,
    brute_force_accepts,
    brute_force_closure,
    brute_force_equal,
    munn_tree,
)
from .presentation import (
    CertificateBasis,
    FinitenessCertificate,
    FinitenessVerdict,
    Letter,
    OverlapCase,
    OverlapProfile,
    Presentation,
    PresentationError,
    SideGraph,
    Word,
    classify_finiteness,
    count_r_word_occurrences,
    is_adian,
    overlap_profile,
    parse_presentation,
    parse_word,
    side_graphs,
)
from .word_graph import BirootedGraph, FoldReport, fold, isomorphic, linear_graph

__version__ = "0.1.0"

__all__ = [
    "Answer",
    "BirootedGraph",
    "BruteClosure",
    "Budget",
    "CertificateBasis",
    "ClosureResult",
    "Direction",
    "ExpansionSite",
    "FinitenessCertificate",
    "FinitenessVerdict",
    "FoldReport",
    "Letter",
    "OverlapCase",
    "OverlapProfile",
    "Presentation",
    "PresentationError",
    "SideGraph",
    "StaleSiteError",
    "Status",
    "Verdict",
    "Word",
    "brute_force_accepts",
    "brute_force_closure",
    "brute_force_equal",
    "classify_finiteness",
    "close",
    "count_r_word_occurrences",
    "decide_equal",
    "decide_natural_leq",
    "elementary_expansion",
    "find_expansions",
    "fold",
    "full_p_expansion",
    "is_adian",
    "is_idempotent",
    "isomorphic",
    "linear_graph",
    "munn_tree",
    "overlap_profile",
    "parse_presentation",
    "parse_word",
    "schutzenberger_automaton",
    "side_graphs",
]
