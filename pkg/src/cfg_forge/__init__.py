"""cfg-forge: an executable context-free grammar toolkit.

Closure constructions (union, concatenation, Kleene star), simplification
transforms (empty-rule, unit-rule, useless-symbol, and inaccessible-symbol
elimination, plus their ordered combination), and a bounded-language
harness (enumeration, membership with derivation traces, equivalence
checks, seeded random grammars).
"""

from .closure import LiftTag, concat, lift_form, lift_symbol, star, union
from .core import (
    NONTERMINAL,
    TERMINAL,
    DerivationTrace,
    Grammar,
    Rule,
    Sentence,
    SententialForm,
    Symbol,
    TraceStep,
    ValidationReport,
    Violation,
    apply_rule,
    compose,
    embed,
    empty_trace,
    form_text,
    fresh_name,
    nt,
    replay,
    rules_by_lhs,
    term,
    validate,
)
from .errors import (
    BoundTooLarge,
    CFGError,
    EmptyLanguage,
    FormMismatch,
    GrammarSyntaxError,
    InvalidOperand,
    PositionMismatch,
    TraceInvalid,
    UnknownRule,
    ValidationError,
    VariantExplosion,
)
from .harness import (
    BoundedLanguage,
    EquivVerdict,
    GenParams,
    enumerate_sentences,
    equiv_bounded,
    length_cap,
    member,
    random_grammar,
)
from .simplify import (
    PredicateReport,
    accessible_set,
    check_predicates,
    eliminate_empty,
    eliminate_empty_core,
    eliminate_inaccessible,
    eliminate_unit,
    eliminate_useless,
    nullable_set,
    simplify_all,
    unit_pairs,
    useful_set,
)
from .textfmt import (
    GrammarDocument,
    parse_document,
    parse_grammar,
    serialize_grammar,
)

__version__ = "0.1.0"

__all__ = [
    "BoundTooLarge",
    "BoundedLanguage",
    "CFGError",
    "DerivationTrace",
    "EmptyLanguage",
    "EquivVerdict",
    "FormMismatch",
    "GenParams",
    "Grammar",
    "GrammarDocument",
    "GrammarSyntaxError",
    "InvalidOperand",
    "LiftTag",
    "NONTERMINAL",
    "PositionMismatch",
    "PredicateReport",
    "Rule",
    "Sentence",
    "SententialForm",
    "Symbol",
    "TERMINAL",
    "TraceInvalid",
    "TraceStep",
    "UnknownRule",
    "ValidationError",
    "ValidationReport",
    "VariantExplosion",
    "Violation",
    "accessible_set",
    "apply_rule",
    "check_predicates",
    "compose",
    "concat",
    "eliminate_empty",
    "eliminate_empty_core",
    "eliminate_inaccessible",
    "eliminate_unit",
    "eliminate_useless",
    "embed",
    "empty_trace",
    "enumerate_sentences",
    "equiv_bounded",
    "form_text",
    "fresh_name",
    "length_cap",
    "lift_form",
    "lift_symbol",
    "member",
    "nt",
    "nullable_set",
    "parse_document",
    "parse_grammar",
    "random_grammar",
    "replay",
    "rules_by_lhs",
    "serialize_grammar",
    "simplify_all",
    "star",
    "term",
    "unit_pairs",
    "union",
    "useful_set",
    "validate",
]
