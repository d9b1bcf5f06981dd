"""Verification toolkit for the central extension of the Klein bottle group.

The group ⟨a, b | [aba⁻¹b, a] = [b, aba⁻¹b] = 1⟩ has the central word
t = aba⁻¹b; elements are integer triples (k, m, n) in the normal form
t^k b^m a^n.  The package provides exact word-length formulas, standard
geodesic representatives, length-preserving rewriting moves with orbit
search, a brute-force BFS oracle that certifies all of it, and a small CLI
(``ckgeo``) with deterministic output.
"""

from .core import (
    CENTRAL_ELEMENT,
    CENTRAL_WORD,
    Element,
    GENERATORS,
    IDENTITY,
    IsometryKind,
    NormalizationRecord,
    apply_isometry,
    evaluate,
    inverse,
    lattice_path,
    letter_map_for,
    multiply,
    normalize_quadrant,
    par,
    project_to_klein,
)
from .errors import (
    BallBudgetError,
    CkgeoError,
    GeodesicCapError,
    OrbitCapError,
    ParseError,
    ResourceError,
)
from .geodesics import (
    LengthTable,
    RegionCase,
    classify_region,
    closed_ball_elements,
    continuation_rule_letters,
    continuations,
    depth,
    geodesic_count,
    is_dead_end,
    is_geodesic,
    length,
    std_rep,
)
from .models import CK, KLEIN, MODELS, ZSQUARED, GroupModel, get_model
from .moves import (
    ConnectivityReport,
    MoveEdge,
    MoveKind,
    YoungDecomposition,
    castling_neighbors,
    check_theorem2,
    clipping_neighbors,
    detowering_neighbors,
    neighbors,
    orbit,
    young_decomposition,
    young_recompose,
    young_rectangle,
)
from .oracle import (
    AuditReport,
    BallIndex,
    CheckReport,
    CkStandardWords,
    StandardLanguage,
    TruncatedLanguage,
    Z2StandardWords,
    audit_dead_ends,
    build_ball,
    check_continuation_rules,
    check_last_letter,
    check_standard_language,
    enumerate_geodesics,
    exact_length,
    expected_terminal_words,
)
from .render import RenderSpec, render_svg, write_svg
from .words import (
    LETTERS,
    LetterMapKind,
    Word,
    apply_letter_map,
    cyclic_shifts,
    format_word,
    free_reduce,
    inverse_letter,
    is_reduced,
    parse_word,
    syllables,
    word_inverse,
)

__version__ = "0.1.0"

__all__ = [
    "apply_isometry",
    "apply_letter_map",
    "audit_dead_ends",
    "AuditReport",
    "BallBudgetError",
    "BallIndex",
    "build_ball",
    "castling_neighbors",
    "CENTRAL_ELEMENT",
    "CENTRAL_WORD",
    "check_continuation_rules",
    "check_last_letter",
    "check_standard_language",
    "check_theorem2",
    "CheckReport",
    "CK",
    "CkgeoError",
    "CkStandardWords",
    "classify_region",
    "clipping_neighbors",
    "closed_ball_elements",
    "ConnectivityReport",
    "continuation_rule_letters",
    "continuations",
    "cyclic_shifts",
    "depth",
    "detowering_neighbors",
    "Element",
    "enumerate_geodesics",
    "evaluate",
    "exact_length",
    "expected_terminal_words",
    "format_word",
    "free_reduce",
    "GENERATORS",
    "geodesic_count",
    "GeodesicCapError",
    "get_model",
    "GroupModel",
    "IDENTITY",
    "inverse",
    "inverse_letter",
    "is_dead_end",
    "is_geodesic",
    "is_reduced",
    "IsometryKind",
    "KLEIN",
    "lattice_path",
    "length",
    "LengthTable",
    "letter_map_for",
    "LetterMapKind",
    "LETTERS",
    "MODELS",
    "MoveEdge",
    "MoveKind",
    "multiply",
    "neighbors",
    "NormalizationRecord",
    "normalize_quadrant",
    "orbit",
    "OrbitCapError",
    "par",
    "parse_word",
    "ParseError",
    "project_to_klein",
    "RegionCase",
    "render_svg",
    "RenderSpec",
    "ResourceError",
    "StandardLanguage",
    "std_rep",
    "syllables",
    "TruncatedLanguage",
    "Word",
    "word_inverse",
    "write_svg",
    "young_decomposition",
    "young_recompose",
    "young_rectangle",
    "YoungDecomposition",
    "Z2StandardWords",
    "ZSQUARED",
    "__version__",
]
