"""Bounded-language harness: enumeration, membership with derivation
witnesses, bounded equivalence verdicts, and a seeded grammar generator.

Membership and enumeration normalize the grammar first (empty-rule and
unit-rule elimination, without the fresh-start wrapper).  Afterwards every
rule has a nonempty right-hand side and a single-symbol right-hand side is
a terminal, so each derivation step strictly increases form length plus
terminal count; derivations of a sentence of length n therefore take at
most 2n+1 steps and forms never need to exceed the length bound.  The empty
string is handled separately through the nullable analysis.

Traces returned by :func:`member` are expressed over the *original* grammar:
each normalized step is expanded back into the original rule it came from,
followed by explicit erasures of the deleted nullable occurrences and the
unit-chain steps that were anticipated away.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field

from .core import (
    DerivationTrace,
    Grammar,
    Rule,
    Sentence,
    Symbol,
    TraceStep,
    nt,
    term,
)
from .errors import BoundTooLarge
from .simplify import (
    _empty_core_rules,
    _nullable_with_witness,
    _unit_expansion,
)

MAX_LEN_CAP = 12
CAP_ENV_VAR = "CFG_FORGE_MAXLEN"

NT_NAMES = ("S", "A", "B", "C", "D")
T_NAMES = ("a", "b", "c")


def length_cap() -> int:
    """The enumeration cap: 12, lowered (never raised) by CFG_FORGE_MAXLEN."""
    cap = MAX_LEN_CAP
    raw = os.environ.get(CAP_ENV_VAR)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            return cap
        if 0 <= value < cap:
            cap = value
    return cap


def _check_bound(max_len: int) -> None:
    cap = length_cap()
    if max_len > cap:
        raise BoundTooLarge(f"length bound {max_len} exceeds cap {cap}")
    if max_len < 0:
        raise ValueError("length bound must be nonnegative")


def _sentence_key(s: Sentence) -> tuple[int, tuple[str, ...]]:
    return (len(s), tuple(sym.name for sym in s))


@dataclass(frozen=True)
class BoundedLanguage:
    """All sentences of length at most ``max_len``, sorted by length then
    lexicographically, without duplicates."""

    max_len: int
    sentences: tuple[Sentence, ...]

    def __contains__(self, s: Sentence) -> bool:
        return tuple(s) in set(self.sentences)

    def __iter__(self):
        return iter(self.sentences)

    def __len__(self) -> int:
        return len(self.sentences)


@dataclass(frozen=True)
class EquivVerdict:
    """Outcome of a bounded language comparison.

    When not equivalent, ``counterexample`` is the shortest (then
    lexicographically least) sentence in the symmetric difference and
    ``side`` names the grammar ("left" or "right") that generates it.
    """

    equivalent: bool
    max_len: int
    counterexample: Sentence | None = None
    side: str | None = None


# ---------------------------------------------------------------------------
# normalization shared by enumeration and membership


@dataclass(frozen=True)
class _Normalized:
    start: Symbol
    rules_by_lhs: dict[Symbol, tuple[Rule, ...]]
    # provenance of normalized rules back to the original grammar
    core_prov: dict[Rule, tuple[Rule, tuple[int, ...]]]
    unit_prov: dict[Rule, tuple[tuple[Rule, ...], Rule]]
    nullable_witness: dict[Symbol, tuple[int, Rule]]


def _normalize(g: Grammar) -> _Normalized:
    _, witness = _nullable_with_witness(g)
    core_prov = _empty_core_rules(g)
    core = Grammar.make(g.nonterminals, g.terminals, g.start, core_prov)
    unit_prov = _unit_expansion(core)
    by_lhs: dict[Symbol, list[Rule]] = {}
    for r in sorted(unit_prov):
        by_lhs.setdefault(r.lhs, []).append(r)
    return _Normalized(
        start=g.start,
        rules_by_lhs={k: tuple(v) for k, v in by_lhs.items()},
        core_prov=core_prov,
        unit_prov=unit_prov,
        nullable_witness=witness,
    )


# ---------------------------------------------------------------------------
# enumeration


def enumerate_sentences(g: Grammar, max_len: int) -> BoundedLanguage:
    """Exactly the sentences of L(g) of length at most ``max_len``.

    Computed over the normalized grammar by dynamic programming on exact
    sentence length: no rule contracts, so the sets for length n depend
    only on lengths strictly below n.  Deterministic and duplicate-free.

    Sentences are interned as bytes during the computation (one terminal
    per byte, indexed in sorted name order, so byte order and lexicographic
    name order agree) and decoded once at the end.
    """
    _check_bound(max_len)
    norm = _normalize(g)
    terminals = sorted(set(g.terminals))
    code = {t: bytes([i]) for i, t in enumerate(terminals)}

    # right-hand sides with terminals pre-encoded
    coded_rules: dict[Symbol, list[tuple[object, ...]]] = {}
    for lhs, rules in norm.rules_by_lhs.items():
        coded_rules[lhs] = [
            tuple(code[s] if s.is_terminal else s for s in r.rhs) for r in rules
        ]

    lang_memo: dict[tuple[Symbol, int], frozenset[bytes]] = {}
    seq_memo: dict[tuple[tuple[object, ...], int], frozenset[bytes]] = {}

    def lang(sym: Symbol, n: int) -> frozenset[bytes]:
        key = (sym, n)
        if key not in lang_memo:
            found: set[bytes] = set()
            for rhs in coded_rules.get(sym, ()):
                found |= seq(rhs, n)
            lang_memo[key] = frozenset(found)
        return lang_memo[key]

    def seq(items: tuple[object, ...], n: int) -> frozenset[bytes]:
        if not items:
            return frozenset([b""]) if n == 0 else frozenset()
        head, tail = items[0], items[1:]
        if isinstance(head, bytes):
            if n < 1 + len(tail):
                return frozenset()
            if not tail:
                return frozenset([head]) if n == 1 else frozenset()
            return frozenset(head + rest for rest in seq(tail, n - 1))
        key = (items, n)
        if key not in seq_memo:
            found: set[bytes] = set()
            # each remaining item needs at least one terminal
            for k in range(1, n - len(tail) + 1):
                heads = lang(head, k)
                if not heads:
                    continue
                for rest in seq(tail, n - k):
                    for u in heads:
                        found.add(u + rest)
            seq_memo[key] = frozenset(found)
        return seq_memo[key]

    coded: set[bytes] = set()
    if g.start in norm.nullable_witness:
        coded.add(b"")
    for n in range(1, max_len + 1):
        coded |= lang(g.start, n)

    decoded = tuple(
        tuple(terminals[b] for b in s)
        for s in sorted(coded, key=lambda s: (len(s), s))
    )
    return BoundedLanguage(max_len=max_len, sentences=decoded)


# ---------------------------------------------------------------------------
# membership


def member(g: Grammar, w: Sentence) -> tuple[bool, DerivationTrace | None]:
    """Decide whether ``w`` is generated by ``g``.

    On success the returned trace derives ``w`` from the start symbol using
    the rules of ``g`` itself, and replays under :func:`cfg_forge.core.replay`.
    """
    w = tuple(w)
    _check_bound(len(w))
    declared = set(g.terminals)
    if any(s not in declared for s in w):
        return False, None

    _, witness = _nullable_with_witness(g)
    if not w:
        if g.start not in witness:
            return False, None
        steps: list[TraceStep] = []
        _erase(g.start, 0, (g.start,), steps, witness)
        return True, DerivationTrace((g.start,), tuple(steps), ())

    norm = _normalize(g)
    found = _leftmost_search(norm, w)
    if found is None:
        return False, None
    return True, _translate(g, norm, found, w)


def _leftmost_search(
    norm: _Normalized, w: Sentence
) -> list[tuple[Rule, int]] | None:
    """Depth-first leftmost derivation search on the normalized grammar.

    State is (matched prefix length, unmatched form suffix); leading
    terminals of the suffix are consumed against ``w`` immediately, so the
    suffix head is always a nonterminal.  Dead states are memoized.
    """
    n = len(w)
    dead: set[tuple[int, tuple[Symbol, ...]]] = set()
    path: list[tuple[Rule, int]] = []

    def dfs(i: int, rest: tuple[Symbol, ...]) -> bool:
        while rest and rest[0].is_terminal:
            if i >= n or rest[0] != w[i]:
                return False
            i += 1
            rest = rest[1:]
        if not rest:
            return i == n
        if i + len(rest) > n:
            return False
        key = (i, rest)
        if key in dead:
            return False
        head = rest[0]
        for rule in norm.rules_by_lhs.get(head, ()):
            if i + len(rest) - 1 + len(rule.rhs) > n:
                continue
            path.append((rule, i))
            if dfs(i, rule.rhs + rest[1:]):
                return True
            path.pop()
        dead.add(key)
        return False

    if dfs(0, (norm.start,)):
        return path
    return None


def _erase(
    sym: Symbol,
    at: int,
    form: tuple[Symbol, ...],
    steps: list[TraceStep],
    witness: dict[Symbol, tuple[int, Rule]],
) -> tuple[Symbol, ...]:
    """Append steps deriving the empty form from the nullable ``sym`` at
    position ``at``; returns the form with that occurrence removed."""
    rule = witness[sym][1]
    steps.append(TraceStep(rule, at))
    form = form[:at] + rule.rhs + form[at + 1 :]
    for child in rule.rhs:
        # children erase completely, so each successive one sits at ``at``
        form = _erase(child, at, form, steps, witness)
    return form


def _apply_core(
    core_rule: Rule,
    at: int,
    form: tuple[Symbol, ...],
    steps: list[TraceStep],
    norm: _Normalized,
) -> tuple[Symbol, ...]:
    """Replay one empty-elimination rule as original-grammar steps: the
    original rule, then erasure of each deleted nullable occurrence."""
    original, deleted = norm.core_prov[core_rule]
    steps.append(TraceStep(original, at))
    form = form[:at] + original.rhs + form[at + 1 :]
    for k, d in enumerate(sorted(deleted)):
        form = _erase(original.rhs[d], at + d - k, form, steps, norm.nullable_witness)
    return form


def _translate(
    g: Grammar,
    norm: _Normalized,
    norm_steps: list[tuple[Rule, int]],
    w: Sentence,
) -> DerivationTrace:
    """Expand a normalized-grammar derivation into one over ``g``."""
    form: tuple[Symbol, ...] = (g.start,)
    steps: list[TraceStep] = []
    for rule, at in norm_steps:
        chain, base = norm.unit_prov[rule]
        for link in chain:
            form = _apply_core(link, at, form, steps, norm)
        form = _apply_core(base, at, form, steps, norm)
    if form != w:
        raise AssertionError("trace translation lost the derived sentence")
    return DerivationTrace((g.start,), tuple(steps), w)


# ---------------------------------------------------------------------------
# bounded equivalence


def equiv_bounded(g1: Grammar, g2: Grammar, max_len: int) -> EquivVerdict:
    """Compare the bounded languages of two grammars as sets."""
    _check_bound(max_len)
    left = set(enumerate_sentences(g1, max_len).sentences)
    right = set(enumerate_sentences(g2, max_len).sentences)
    if left == right:
        return EquivVerdict(equivalent=True, max_len=max_len)
    counterexample = min(left ^ right, key=_sentence_key)
    return EquivVerdict(
        equivalent=False,
        max_len=max_len,
        counterexample=counterexample,
        side="left" if counterexample in left else "right",
    )


# ---------------------------------------------------------------------------
# seeded random grammars


@dataclass(frozen=True)
class GenParams:
    """Bounds for the random grammar generator; output is a pure function
    of this record (including the seed)."""

    seed: int = 0
    max_nonterminals: int = 5
    max_terminals: int = 3
    max_rules: int = 8
    max_rhs_len: int = 4
    empty_rule_prob: float = 0.15
    unit_rule_prob: float = 0.15

    def __post_init__(self):
        if not 1 <= self.max_nonterminals <= 5:
            raise ValueError("max_nonterminals must be in 1..5")
        if not 1 <= self.max_terminals <= 3:
            raise ValueError("max_terminals must be in 1..3")
        if not 1 <= self.max_rules <= 8:
            raise ValueError("max_rules must be in 1..8")
        if not 1 <= self.max_rhs_len <= 4:
            raise ValueError("max_rhs_len must be in 1..4")
        if self.empty_rule_prob < 0 or self.unit_rule_prob < 0:
            raise ValueError("rule probabilities must be nonnegative")
        if self.empty_rule_prob + self.unit_rule_prob > 1:
            raise ValueError("rule probabilities must sum to at most 1")


def random_grammar(p: GenParams) -> Grammar:
    """A valid random grammar, deterministic in ``p``.

    Left-hand sides are drawn uniformly over the declared nonterminals.
    With both rule probabilities zero the output has no empty and no unit
    rules (a length-1 right-hand side is then always a terminal).
    """
    rng = random.Random(p.seed)
    nts = [nt(name) for name in NT_NAMES[: rng.randint(1, p.max_nonterminals)]]
    ts = [term(name) for name in T_NAMES[: rng.randint(1, p.max_terminals)]]
    symbols = nts + ts
    rules = []
    for _ in range(rng.randint(1, p.max_rules)):
        lhs = rng.choice(nts)
        roll = rng.random()
        if roll < p.empty_rule_prob:
            rhs: tuple[Symbol, ...] = ()
        elif roll < p.empty_rule_prob + p.unit_rule_prob:
            rhs = (rng.choice(nts),)
        else:
            size = rng.randint(1, p.max_rhs_len)
            if size == 1:
                rhs = (rng.choice(ts),)
            else:
                rhs = tuple(rng.choice(symbols) for _ in range(size))
        rules.append(Rule(lhs, rhs))
    return Grammar.make(nts, ts, nts[0], rules)
