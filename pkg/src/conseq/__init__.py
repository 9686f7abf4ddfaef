"""Finitary consequence operators generated by two-sorted rule systems.

The package builds deductive closure operators from finite rule sets whose
symbols carry one of two sorts, computes closures by semi-naive fixpoint,
tabulates the resulting operators extensionally over small universes, and
checks the closure-operator laws and one-pass closed forms by exhaustive
enumeration.  A line-oriented ``.lgs`` text format and a CLI expose the
whole toolkit; see README.md.
"""

from .closure import (
    DeductionSet,
    chain_system,
    close,
    close_naive,
    closed_form_binary,
    closed_form_ternary,
    step,
)
from .errors import (
    BadIdentifier,
    ConseqError,
    DuplicateElement,
    EmptyStandardPart,
    EmptySystem,
    LanguageMismatch,
    NameCollision,
    NullaryRule,
    ParseError,
    PreconditionViolated,
    TooShort,
    UniverseIncomplete,
    UniverseMismatch,
    UniverseTooLarge,
    UnknownSymbol,
)
from .fileformat import (
    SystemDocument,
    parse_set,
    parse_system,
    render_set,
    render_system,
)
from .influence import (
    InfluenceWeight,
    Strength,
    compare_influence,
    matched_rules_binary,
    matched_rules_ternary,
    weight_binary,
    weight_ternary,
)
from .laws import (
    UNIVERSE_CAP,
    LawReport,
    LawResult,
    OperatorTable,
    TableComparison,
    check_axioms,
    equivalent,
    tabulate,
    verify_closed_form_characterization,
)
from .model import (
    Language,
    LogicSystem,
    Rule,
    ShapeCheck,
    Sort,
    Symbol,
    is_mixed_binary,
    is_mixed_ternary,
    make_language,
    make_system,
)

__version__ = "0.1.0"

__all__ = [
    "BadIdentifier",
    "ConseqError",
    "DeductionSet",
    "DuplicateElement",
    "EmptyStandardPart",
    "EmptySystem",
    "InfluenceWeight",
    "Language",
    "LanguageMismatch",
    "LawReport",
    "LawResult",
    "LogicSystem",
    "NameCollision",
    "NullaryRule",
    "OperatorTable",
    "ParseError",
    "PreconditionViolated",
    "Rule",
    "ShapeCheck",
    "Sort",
    "Strength",
    "Symbol",
    "SystemDocument",
    "TableComparison",
    "TooShort",
    "UNIVERSE_CAP",
    "UniverseIncomplete",
    "UniverseMismatch",
    "UniverseTooLarge",
    "UnknownSymbol",
    "chain_system",
    "check_axioms",
    "close",
    "close_naive",
    "closed_form_binary",
    "closed_form_ternary",
    "compare_influence",
    "equivalent",
    "is_mixed_binary",
    "is_mixed_ternary",
    "make_language",
    "make_system",
    "matched_rules_binary",
    "matched_rules_ternary",
    "parse_set",
    "parse_system",
    "render_set",
    "render_system",
    "step",
    "tabulate",
    "verify_closed_form_characterization",
    "weight_binary",
    "weight_ternary",
]
