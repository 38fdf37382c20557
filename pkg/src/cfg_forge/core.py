"""Grammar data model, validation, and the trace-based derivation engine.

Symbols are atoms tagged terminal or nonterminal.  A grammar is an immutable
record of declared alphabets, a start symbol, and a rule set.  Derivations
are first-class: a ``DerivationTrace`` records which rule was applied at
which position, so every rewrite claim can be replayed and checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import FormMismatch, PositionMismatch, TraceInvalid, UnknownRule

NONTERMINAL = "nonterminal"
TERMINAL = "terminal"

# Characters legal in symbol names.  '#' and ':' are reserved for names the
# toolkit generates itself (fresh starts and lifted nonterminals); user input
# containing them is flagged by strict validation only.
NAME_CHARS = frozenset(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_'#:"
)
RESERVED_CHARS = frozenset("#:")
RESERVED_WORDS = frozenset({"eps"})


@dataclass(frozen=True, order=True)
class Symbol:
    """A terminal or nonterminal atom, ordered by (kind, name)."""

    kind: str
    name: str

    @property
    def is_terminal(self) -> bool:
        return self.kind == TERMINAL

    @property
    def is_nonterminal(self) -> bool:
        return self.kind == NONTERMINAL

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        tag = "T" if self.is_terminal else "N"
        return f"{tag}({self.name})"


def nt(name: str) -> Symbol:
    return Symbol(NONTERMINAL, name)


def term(name: str) -> Symbol:
    return Symbol(TERMINAL, name)


# A sentential form is an ordered run of symbols; a sentence is the
# terminal-only special case.  Both are plain tuples.
SententialForm = tuple[Symbol, ...]
Sentence = tuple[Symbol, ...]


def form_text(form: Iterable[Symbol]) -> str:
    """Render a form as space-separated names, 'eps' when empty."""
    text = " ".join(s.name for s in form)
    return text or "eps"


@dataclass(frozen=True, order=True)
class Rule:
    """A rewrite rule ``lhs -> rhs`` with a possibly empty right-hand side."""

    lhs: Symbol
    rhs: tuple[Symbol, ...]

    def __post_init__(self):
        # accept any iterable for convenience, store a tuple
        if not isinstance(self.rhs, tuple):
            object.__setattr__(self, "rhs", tuple(self.rhs))

    @property
    def is_empty(self) -> bool:
        return not self.rhs

    @property
    def is_unit(self) -> bool:
        return len(self.rhs) == 1 and self.rhs[0].is_nonterminal

    def __str__(self) -> str:
        return f"{self.lhs.name} -> {form_text(self.rhs)}"


@dataclass(frozen=True)
class Grammar:
    """An immutable context-free grammar.

    Use :meth:`make` to build canonical instances (sorted, duplicate-free).
    The bare constructor preserves its input untouched so that
    :func:`validate` can report problems in raw data.
    """

    nonterminals: tuple[Symbol, ...]
    terminals: tuple[Symbol, ...]
    start: Symbol
    rules: tuple[Rule, ...]

    @classmethod
    def make(
        cls,
        nonterminals: Iterable[Symbol],
        terminals: Iterable[Symbol],
        start: Symbol,
        rules: Iterable[Rule],
    ) -> "Grammar":
        """Build a grammar in canonical form: alphabets and rules sorted
        lexicographically with duplicates removed."""
        return cls(
            nonterminals=tuple(sorted(set(nonterminals))),
            terminals=tuple(sorted(set(terminals))),
            start=start,
            rules=tuple(sorted(set(rules))),
        )

    @property
    def symbols(self) -> tuple[Symbol, ...]:
        return self.nonterminals + self.terminals

    def rules_for(self, lhs: Symbol) -> tuple[Rule, ...]:
        return tuple(r for r in self.rules if r.lhs == lhs)

    def terminal(self, name: str) -> Symbol | None:
        for s in self.terminals:
            if s.name == name:
                return s
        return None


def rules_by_lhs(g: Grammar) -> dict[Symbol, tuple[Rule, ...]]:
    """Index rules by left-hand side, preserving the grammar's rule order."""
    index: dict[Symbol, list[Rule]] = {}
    for r in g.rules:
        index.setdefault(r.lhs, []).append(r)
    return {k: tuple(v) for k, v in index.items()}


def fresh_name(base: str, taken: set[str]) -> str:
    """Return ``base``, or ``base`` with the lowest numeric suffix making it
    unique among ``taken``.  Bases use reserved characters, so collisions can
    only come from previously generated names."""
    if base not in taken:
        return base
    i = 1
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    item: str = ""


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]


def _name_violations(sym: Symbol, strict: bool) -> list[Violation]:
    out = []
    if not sym.name:
        out.append(Violation("bad-name", "symbol name is empty", sym.name))
    elif not set(sym.name) <= NAME_CHARS:
        out.append(
            Violation("bad-name", f"illegal characters in name {sym.name!r}", sym.name)
        )
    if sym.name in RESERVED_WORDS:
        out.append(
            Violation("reserved-name", f"{sym.name!r} is a reserved word", sym.name)
        )
    if strict and set(sym.name) & RESERVED_CHARS:
        out.append(
            Violation(
                "reserved-char",
                f"name {sym.name!r} uses generated-name characters '#'/':'",
                sym.name,
            )
        )
    return out


def validate(g: Grammar, strict: bool = False) -> ValidationReport:
    """Check every grammar invariant and report all failures.

    Accepts raw, possibly inconsistent input and never raises.  With
    ``strict`` set, names using the generated-name characters are flagged
    too (useful for vetting hand-written files).
    """
    violations: list[Violation] = []

    declared = set(g.nonterminals) | set(g.terminals)
    for kind, alphabet in ((NONTERMINAL, g.nonterminals), (TERMINAL, g.terminals)):
        seen = set()
        for sym in alphabet:
            violations.extend(_name_violations(sym, strict))
            if sym.kind != kind:
                violations.append(
                    Violation(
                        "kind-mismatch",
                        f"{sym.name!r} declared in the {kind} alphabet but has kind {sym.kind}",
                        sym.name,
                    )
                )
            if sym in seen:
                violations.append(
                    Violation(
                        "duplicate-symbol",
                        f"{sym.name!r} declared more than once",
                        sym.name,
                    )
                )
            seen.add(sym)

    overlap = {s.name for s in g.nonterminals} & {s.name for s in g.terminals}
    for name in sorted(overlap):
        violations.append(
            Violation(
                "alphabet-overlap",
                f"{name!r} declared both terminal and nonterminal",
                name,
            )
        )

    if g.start not in set(g.nonterminals):
        violations.append(
            Violation(
                "start-not-declared",
                f"start symbol {g.start.name!r} not declared as a nonterminal",
                g.start.name,
            )
        )

    seen_rules: set[Rule] = set()
    for r in g.rules:
        if r in seen_rules:
            violations.append(
                Violation("duplicate-rule", f"duplicate rule {r}", str(r))
            )
        seen_rules.add(r)
        if not r.lhs.is_nonterminal:
            violations.append(
                Violation(
                    "bad-lhs", f"rule {r} has a terminal left-hand side", str(r)
                )
            )
        elif r.lhs not in declared:
            violations.append(
                Violation(
                    "undeclared-symbol",
                    f"undeclared nonterminal {r.lhs.name!r} in rule {r}",
                    r.lhs.name,
                )
            )
        for s in r.rhs:
            if s not in declared:
                violations.append(
                    Violation(
                        "undeclared-symbol",
                        f"undeclared {s.kind} {s.name!r} in rule {r}",
                        s.name,
                    )
                )

    return ValidationReport(ok=not violations, violations=tuple(violations))


# ---------------------------------------------------------------------------
# derivation engine


@dataclass(frozen=True)
class TraceStep:
    rule: Rule
    position: int


@dataclass(frozen=True)
class DerivationTrace:
    """A constructive witness of one form deriving another.

    Replaying ``steps`` from ``start_form`` must reproduce ``end_form``;
    each step replaces the single occurrence of its rule's left-hand side
    at the recorded position.  Zero steps witness reflexivity.
    """

    start_form: SententialForm
    steps: tuple[TraceStep, ...]
    end_form: SententialForm


def empty_trace(form: SententialForm) -> DerivationTrace:
    return DerivationTrace(form, (), form)


def apply_rule(
    g: Grammar, form: SententialForm, rule: Rule, position: int
) -> SententialForm:
    """Rewrite the occurrence of ``rule.lhs`` at ``position``.

    The result length is ``len(form) - 1 + len(rule.rhs)``.
    """
    if rule not in g.rules:
        raise UnknownRule(f"rule {rule} is not part of the grammar")
    if not 0 <= position < len(form):
        raise PositionMismatch(
            f"position {position} outside form of length {len(form)}"
        )
    if form[position] != rule.lhs:
        raise PositionMismatch(
            f"form holds {form[position].name!r} at position {position}, "
            f"rule rewrites {rule.lhs.name!r}"
        )
    return form[:position] + rule.rhs + form[position + 1 :]


def replay(g: Grammar, trace: DerivationTrace) -> SententialForm:
    """Replay a trace step by step and verify its recorded end form."""
    form = trace.start_form
    for i, step in enumerate(trace.steps):
        try:
            form = apply_rule(g, form, step.rule, step.position)
        except (PositionMismatch, UnknownRule) as exc:
            raise TraceInvalid(f"step {i} failed: {exc}", step=i) from exc
    if form != trace.end_form:
        raise TraceInvalid(
            f"replayed form {form_text(form)!r} differs from recorded "
            f"end form {form_text(trace.end_form)!r}"
        )
    return form


def compose(t1: DerivationTrace, t2: DerivationTrace) -> DerivationTrace:
    """Join two traces end to start (derivation transitivity)."""
    if t1.end_form != t2.start_form:
        raise FormMismatch(
            f"cannot compose: {form_text(t1.end_form)!r} != "
            f"{form_text(t2.start_form)!r}"
        )
    return DerivationTrace(t1.start_form, t1.steps + t2.steps, t2.end_form)


def embed(
    t: DerivationTrace, prefix: SententialForm, suffix: SententialForm
) -> DerivationTrace:
    """Run a trace inside a surrounding context.

    Rewrites are context-free, so shifting every step by ``len(prefix)``
    yields a trace from ``prefix + start + suffix`` to
    ``prefix + end + suffix``.
    """
    shift = len(prefix)
    steps = tuple(TraceStep(s.rule, s.position + shift) for s in t.steps)
    return DerivationTrace(
        prefix + t.start_form + suffix, steps, prefix + t.end_form + suffix
    )
