"""Grammar simplification: nullable/unit/useful/accessible analyses and the
transforms that eliminate empty rules, unit rules, useless symbols, and
inaccessible symbols, plus their ordered combination.

All four analyses are least fixpoints computed by worklist iteration; the
brute-force derivation search in the test suite checks them extensionally.
Transforms are pure: they return new, canonically sorted grammars.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Grammar, Rule, Symbol, fresh_name, nt
from .errors import EmptyLanguage, VariantExplosion

# A single rule with more nullable occurrences than this would expand to
# more than 2^16 variants.
MAX_NULLABLE_OCCURRENCES = 16

NullableSet = frozenset[Symbol]
UnitRelation = frozenset[tuple[Symbol, Symbol]]
UsefulSet = frozenset[Symbol]
AccessibleSet = frozenset[Symbol]


# ---------------------------------------------------------------------------
# nullable analysis and empty-rule elimination


def _nullable_with_witness(
    g: Grammar,
) -> tuple[NullableSet, dict[Symbol, tuple[int, Rule]]]:
    """Nullable nonterminals plus, for each, an insertion index and a witness
    rule whose right-hand side symbols all entered the set strictly earlier.

    The witness data lets callers synthesize an explicit derivation of the
    empty form (erase the witness right-hand side left to right, recursing
    on symbols with smaller insertion index).
    """
    witness: dict[Symbol, tuple[int, Rule]] = {}
    changed = True
    while changed:
        changed = False
        for r in g.rules:
            if r.lhs in witness:
                continue
            if all(s.is_nonterminal and s in witness for s in r.rhs):
                witness[r.lhs] = (len(witness), r)
                changed = True
    return frozenset(witness), witness


def nullable_set(g: Grammar) -> NullableSet:
    """Nonterminals from which the empty form is derivable."""
    members, _ = _nullable_with_witness(g)
    return members


def _empty_core_rules(g: Grammar) -> dict[Rule, tuple[Rule, tuple[int, ...]]]:
    """Every nullable-deletion variant of every non-empty rule, mapped to its
    provenance: (original rule, deleted right-hand-side positions).

    Variants are generated in ascending deletion-count order, so each rule's
    recorded provenance uses the fewest deletions that produce it.
    """
    nullable = nullable_set(g)
    out: dict[Rule, tuple[Rule, tuple[int, ...]]] = {}
    for r in sorted(set(g.rules)):
        if r.is_empty:
            continue
        spots = [i for i, s in enumerate(r.rhs) if s in nullable]
        if len(spots) > MAX_NULLABLE_OCCURRENCES:
            raise VariantExplosion(
                f"rule {r} has {len(spots)} nullable occurrences "
                f"(limit {MAX_NULLABLE_OCCURRENCES})"
            )
        masks = sorted(range(1 << len(spots)), key=lambda m: (m.bit_count(), m))
        for mask in masks:
            deleted = tuple(spots[j] for j in range(len(spots)) if mask >> j & 1)
            rhs = tuple(s for i, s in enumerate(r.rhs) if i not in deleted)
            if not rhs:
                continue
            out.setdefault(Rule(r.lhs, rhs), (r, deleted))
    return out


def eliminate_empty_core(g: Grammar) -> Grammar:
    """Remove empty rules, preserving the language minus the empty string.

    Keeps every non-empty rule and adds each variant obtained by deleting
    any subset of nullable occurrences from a right-hand side, except
    variants that would come out empty.
    """
    return Grammar.make(
        nonterminals=g.nonterminals,
        terminals=g.terminals,
        start=g.start,
        rules=_empty_core_rules(g),
    )


def eliminate_empty(g: Grammar) -> Grammar:
    """Remove empty rules, preserving the language exactly.

    Wraps the core elimination with a fresh start symbol that rewrites to
    the old start, plus an empty rule for the fresh start alone when the
    original language contains the empty string.  The fresh start never
    occurs on a right-hand side.
    """
    nullable = nullable_set(g)
    core = _empty_core_rules(g)
    taken = {s.name for s in g.nonterminals} | {s.name for s in g.terminals}
    start = nt(fresh_name("#E", taken))
    rules = list(core) + [Rule(start, (g.start,))]
    if g.start in nullable:
        rules.append(Rule(start, ()))
    return Grammar.make(
        nonterminals=g.nonterminals + (start,),
        terminals=g.terminals,
        start=start,
        rules=rules,
    )


# ---------------------------------------------------------------------------
# unit analysis and unit-rule elimination


def _unit_chains(g: Grammar) -> dict[tuple[Symbol, Symbol], tuple[Rule, ...]]:
    """For every pair (a, b) with b reachable from a through unit rules, a
    shortest witnessing chain of unit rules."""
    edges: dict[Symbol, list[Rule]] = {}
    for r in g.rules:
        if r.is_unit:
            edges.setdefault(r.lhs, []).append(r)
    chains: dict[tuple[Symbol, Symbol], tuple[Rule, ...]] = {}
    for a in sorted(edges):
        frontier: list[tuple[Symbol, tuple[Rule, ...]]] = [(a, ())]
        seen: set[Symbol] = set()
        while frontier:
            node, path = frontier.pop(0)
            for r in edges.get(node, ()):
                b = r.rhs[0]
                if b in seen:
                    continue
                seen.add(b)
                chains[(a, b)] = path + (r,)
                frontier.append((b, path + (r,)))
    return chains


def unit_pairs(g: Grammar) -> UnitRelation:
    """Transitive closure of the direct unit-rule edges."""
    return frozenset(_unit_chains(g))


def _unit_expansion(g: Grammar) -> dict[Rule, tuple[tuple[Rule, ...], Rule]]:
    """Rules of the unit-free grammar, each mapped to its provenance:
    (chain of unit rules applied first, non-unit rule of ``g`` applied last).
    """
    chains = _unit_chains(g)
    out: dict[Rule, tuple[tuple[Rule, ...], Rule]] = {}
    for r in sorted(set(g.rules)):
        if not r.is_unit:
            out.setdefault(r, ((), r))
    for (a, b), chain in sorted(chains.items()):
        for r in sorted(set(g.rules)):
            if r.lhs == b and not r.is_unit:
                out.setdefault(Rule(a, r.rhs), (chain, r))
    return out


def eliminate_unit(g: Grammar) -> Grammar:
    """Remove unit rules, preserving the language.

    Keeps every non-unit rule and, for each unit pair (a, b), anticipates
    b's non-unit rules under a.
    """
    return Grammar.make(
        nonterminals=g.nonterminals,
        terminals=g.terminals,
        start=g.start,
        rules=_unit_expansion(g),
    )


# ---------------------------------------------------------------------------
# useful-symbol analysis and elimination


def useful_set(g: Grammar) -> UsefulSet:
    """Symbols from which some terminal string is derivable.

    Terminals are useful by definition; a nonterminal is useful when some
    rule rewrites it into useful symbols only (an empty right-hand side
    counts: it derives the empty string).
    """
    useful: set[Symbol] = set(g.terminals)
    changed = True
    while changed:
        changed = False
        for r in g.rules:
            if r.lhs in useful:
                continue
            if all(s in useful for s in r.rhs):
                useful.add(r.lhs)
                changed = True
    return frozenset(useful)


def eliminate_useless(g: Grammar) -> Grammar:
    """Drop every rule mentioning a useless symbol and shrink the
    nonterminal alphabet to the useful ones.

    Undefined when the start symbol itself is useless (the language is
    empty and no root could be assigned); raises EmptyLanguage then.
    """
    useful = useful_set(g)
    if g.start not in useful:
        raise EmptyLanguage(
            f"start symbol {g.start.name!r} derives no terminal string; "
            "the language is empty"
        )
    rules = [
        r
        for r in g.rules
        if r.lhs in useful and all(s in useful for s in r.rhs)
    ]
    return Grammar.make(
        nonterminals=[s for s in g.nonterminals if s in useful],
        terminals=g.terminals,
        start=g.start,
        rules=rules,
    )


# ---------------------------------------------------------------------------
# accessible-symbol analysis and elimination


def accessible_set(g: Grammar) -> AccessibleSet:
    """Symbols occurring in some form derivable from the start symbol."""
    accessible: set[Symbol] = {g.start}
    changed = True
    while changed:
        changed = False
        for r in g.rules:
            if r.lhs not in accessible:
                continue
            for s in r.rhs:
                if s not in accessible:
                    accessible.add(s)
                    changed = True
    return frozenset(accessible)


def eliminate_inaccessible(g: Grammar) -> Grammar:
    """Drop every rule whose left-hand side is unreachable from the start
    symbol and shrink both alphabets to the accessible symbols.

    Right-hand sides of surviving rules are accessible automatically.
    """
    accessible = accessible_set(g)
    return Grammar.make(
        nonterminals=[s for s in g.nonterminals if s in accessible],
        terminals=[s for s in g.terminals if s in accessible],
        start=g.start,
        rules=[r for r in g.rules if r.lhs in accessible],
    )


# ---------------------------------------------------------------------------
# combined simplification and structural predicates


def simplify_all(g: Grammar) -> Grammar:
    """Apply all four eliminations in the order that makes them compose:
    empty rules first (may introduce unit rules), then unit rules (never
    introduces empty rules here, since the only empty rule left is owned by
    the fresh start, which no right-hand side mentions), then useless and
    inaccessible symbols (rule deletions only, so earlier guarantees hold).

    Requires a nonempty language; raises EmptyLanguage otherwise.
    """
    if g.start not in useful_set(g):
        raise EmptyLanguage(
            f"start symbol {g.start.name!r} derives no terminal string; "
            "the language is empty"
        )
    g = eliminate_empty(g)
    g = eliminate_unit(g)
    g = eliminate_useless(g)
    g = eliminate_inaccessible(g)
    return g


SIMPLIFY_STEPS = {
    "empty": eliminate_empty,
    "unit": eliminate_unit,
    "useless": eliminate_useless,
    "inaccessible": eliminate_inaccessible,
}

SIMPLIFY_ORDER = ("empty", "unit", "useless", "inaccessible")


@dataclass(frozen=True)
class PredicateReport:
    """Structural census of a grammar, one flag per simplification goal."""

    has_no_empty_rules: bool
    has_one_empty_rule: bool
    has_no_unit_rules: bool
    has_no_useless_symbols: bool
    has_no_inaccessible_symbols: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "has_no_empty_rules": self.has_no_empty_rules,
            "has_one_empty_rule": self.has_one_empty_rule,
            "has_no_unit_rules": self.has_no_unit_rules,
            "has_no_useless_symbols": self.has_no_useless_symbols,
            "has_no_inaccessible_symbols": self.has_no_inaccessible_symbols,
        }


def check_predicates(g: Grammar) -> PredicateReport:
    """Evaluate the five structural predicates.

    ``has_one_empty_rule`` holds when exactly one rule is empty and its
    left-hand side is the start symbol.  The symbol predicates compare the
    declared alphabets against the analysis fixpoints.
    """
    empty_rules = [r for r in g.rules if r.is_empty]
    useful = useful_set(g)
    accessible = accessible_set(g)
    symbols = set(g.symbols)
    return PredicateReport(
        has_no_empty_rules=not empty_rules,
        has_one_empty_rule=(
            len(empty_rules) == 1 and empty_rules[0].lhs == g.start
        ),
        has_no_unit_rules=not any(r.is_unit for r in g.rules),
        has_no_useless_symbols=symbols <= useful,
        has_no_inaccessible_symbols=symbols <= accessible,
    )
