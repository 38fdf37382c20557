"""Closure constructions: grammar union, concatenation, and Kleene star.

Each construction lifts the operand nonterminals into a tagged namespace
(name prefixes ``u1:``, ``u2:``, ``k:``) and adds a fresh start symbol
``#S``, so operand rule sets can never collide.  Terminals are identified
by name across operands: the results describe languages over the shared
terminal alphabet.  Nested constructions compound prefixes (``u1:k:S``),
which keeps lifting injective.
"""

from __future__ import annotations

from enum import Enum

from .core import (
    Grammar,
    Rule,
    SententialForm,
    Symbol,
    fresh_name,
    nt,
    validate,
)
from .errors import InvalidOperand


class LiftTag(Enum):
    """Which operand a lifted symbol came from."""

    LEFT = "u1:"
    RIGHT = "u2:"
    SOLE = "k:"

    @property
    def prefix(self) -> str:
        return self.value


def lift_symbol(sym: Symbol, tag: LiftTag) -> Symbol:
    """Prefix nonterminal names with the tag; terminals pass through."""
    if sym.is_terminal:
        return sym
    return nt(tag.prefix + sym.name)


def lift_form(form: SententialForm, tag: LiftTag) -> SententialForm:
    return tuple(lift_symbol(s, tag) for s in form)


def _lift_rules(g: Grammar, tag: LiftTag) -> list[Rule]:
    return [Rule(lift_symbol(r.lhs, tag), lift_form(r.rhs, tag)) for r in g.rules]


def _require_valid(g: Grammar, which: str) -> None:
    report = validate(g)
    if not report.ok:
        raise InvalidOperand(f"{which} operand fails validation", report)


def _fresh_start(*lifted_alphabets: tuple[Symbol, ...]) -> Symbol:
    taken = {s.name for alphabet in lifted_alphabets for s in alphabet}
    return nt(fresh_name("#S", taken))


def union(g1: Grammar, g2: Grammar) -> Grammar:
    """Grammar whose language is L(g1) union L(g2).

    The fresh start rewrites to either operand's lifted start; it never
    occurs on a right-hand side.
    """
    _require_valid(g1, "left")
    _require_valid(g2, "right")
    left_nts = tuple(lift_symbol(s, LiftTag.LEFT) for s in g1.nonterminals)
    right_nts = tuple(lift_symbol(s, LiftTag.RIGHT) for s in g2.nonterminals)
    start = _fresh_start(left_nts, right_nts, g1.terminals, g2.terminals)
    rules = [
        Rule(start, (lift_symbol(g1.start, LiftTag.LEFT),)),
        Rule(start, (lift_symbol(g2.start, LiftTag.RIGHT),)),
    ]
    rules += _lift_rules(g1, LiftTag.LEFT)
    rules += _lift_rules(g2, LiftTag.RIGHT)
    return Grammar.make(
        nonterminals=(start,) + left_nts + right_nts,
        terminals=g1.terminals + g2.terminals,
        start=start,
        rules=rules,
    )


def concat(g1: Grammar, g2: Grammar) -> Grammar:
    """Grammar whose language is L(g1) concatenated with L(g2)."""
    _require_valid(g1, "left")
    _require_valid(g2, "right")
    left_nts = tuple(lift_symbol(s, LiftTag.LEFT) for s in g1.nonterminals)
    right_nts = tuple(lift_symbol(s, LiftTag.RIGHT) for s in g2.nonterminals)
    start = _fresh_start(left_nts, right_nts, g1.terminals, g2.terminals)
    rules = [
        Rule(
            start,
            (
                lift_symbol(g1.start, LiftTag.LEFT),
                lift_symbol(g2.start, LiftTag.RIGHT),
            ),
        )
    ]
    rules += _lift_rules(g1, LiftTag.LEFT)
    rules += _lift_rules(g2, LiftTag.RIGHT)
    return Grammar.make(
        nonterminals=(start,) + left_nts + right_nts,
        terminals=g1.terminals + g2.terminals,
        start=start,
        rules=rules,
    )


def star(g: Grammar) -> Grammar:
    """Grammar whose language is the Kleene star of L(g).

    Seed rules: the fresh start rewrites to itself followed by the lifted
    operand start, or to the empty form; the empty string is therefore
    always generated.
    """
    _require_valid(g, "sole")
    sole_nts = tuple(lift_symbol(s, LiftTag.SOLE) for s in g.nonterminals)
    start = _fresh_start(sole_nts, g.terminals)
    rules = [
        Rule(start, (start, lift_symbol(g.start, LiftTag.SOLE))),
        Rule(start, ()),
    ]
    rules += _lift_rules(g, LiftTag.SOLE)
    return Grammar.make(
        nonterminals=(start,) + sole_nts,
        terminals=g.terminals,
        start=start,
        rules=rules,
    )
