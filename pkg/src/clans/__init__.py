"""Clans, the K-orbit closure order, and smoothness of orbit closures in the
flag variety for U(p,q).

The package enumerates the clans of a signature (p, q), computes orbit
dimensions, generates the closure order from its three moves, classifies
every orbit closure as smooth or not rationally smooth by seven-pattern
avoidance, and cross-checks the verdicts with a structural certificate and
with reflection counting on closed orbits.
"""

from .core import (
    MINUS,
    PLUS,
    Clan,
    ClanError,
    Entry,
    SignaturePrefix,
    base_dimension,
    canonicalize,
    count_clans,
    dimension,
    enumerate_clans,
    format_clan,
    is_closed,
    is_sign,
    open_clan,
    pair_map,
    parse_clan,
    prefix_signature,
    token_sort_key,
)
from .poset import (
    ENDPOINT_SLIDE,
    PAIR_CREATION,
    PAIR_EXCHANGE,
    Move,
    NonIncreasingMoveError,
    OrbitPoset,
    PosetSizeError,
    build_poset,
    export_dot,
    export_tsv,
    moves,
    successors,
)
from .patterns import (
    FORBIDDEN_PATTERNS,
    BlockSplit,
    Certificate,
    ClosedLeaf,
    DecompositionError,
    OuterStrip,
    SignDelete,
    SmoothnessVerdict,
    StructuralViolation,
    build_certificate,
    certificate_json,
    classify,
    find_embedding,
    includes_any,
    is_rationally_smooth,
    structural_check,
    verdict_json,
    verify_certificate,
)
from .springer import (
    EXCEEDS_BUDGET,
    ReflectionWitness,
    apply_reflection,
    collapse_to_closed,
    noncompact_reflections,
    springer_count,
    springer_diagnosis,
    witness_json,
)
from .verify import BudgetStatistic, CheckResult, report_lines, run_checks

__version__ = "0.1.0"

__all__ = [
    "PLUS",
    "MINUS",
    "Entry",
    "Clan",
    "ClanError",
    "SignaturePrefix",
    "base_dimension",
    "canonicalize",
    "count_clans",
    "dimension",
    "enumerate_clans",
    "format_clan",
    "is_closed",
    "is_sign",
    "open_clan",
    "pair_map",
    "parse_clan",
    "prefix_signature",
    "token_sort_key",
    "Move",
    "OrbitPoset",
    "NonIncreasingMoveError",
    "PosetSizeError",
    "PAIR_CREATION",
    "ENDPOINT_SLIDE",
    "PAIR_EXCHANGE",
    "build_poset",
    "export_dot",
    "export_tsv",
    "moves",
    "successors",
    "FORBIDDEN_PATTERNS",
    "Certificate",
    "ClosedLeaf",
    "SignDelete",
    "BlockSplit",
    "OuterStrip",
    "DecompositionError",
    "SmoothnessVerdict",
    "StructuralViolation",
    "build_certificate",
    "certificate_json",
    "classify",
    "find_embedding",
    "includes_any",
    "is_rationally_smooth",
    "structural_check",
    "verdict_json",
    "verify_certificate",
    "EXCEEDS_BUDGET",
    "ReflectionWitness",
    "apply_reflection",
    "collapse_to_closed",
    "noncompact_reflections",
    "springer_count",
    "springer_diagnosis",
    "witness_json",
    "BudgetStatistic",
    "CheckResult",
    "report_lines",
    "run_checks",
    "__version__",
]
