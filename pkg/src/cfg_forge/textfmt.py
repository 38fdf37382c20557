"""Text format for grammar files.

Layout, in order: ``terminals:`` and ``nonterminals:`` with space-separated
names on the same line, ``start:`` with one name, then ``rules:`` followed
by one rule per line (``LHS -> tok tok ...``, alternatives joined with
``|``, and the keyword ``eps`` alone for an empty right-hand side).  Blank
lines are ignored.  A ``#`` starts a comment running to the end of the
line, except when immediately followed by a name character: generated
names such as ``#E`` or ``u1:#S`` are emitted and read back verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Grammar, Rule, Symbol, form_text, nt, term, validate
from .errors import GrammarSyntaxError, ValidationError

_NAME_START = set("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_'")

SECTION_ORDER = ("terminals:", "nonterminals:", "start:", "rules:")


@dataclass(frozen=True)
class GrammarDocument:
    """A parsed grammar file plus enough source positions for diagnostics."""

    text: str
    grammar: Grammar
    rule_lines: dict[Rule, int] = field(default_factory=dict)
    section_lines: dict[str, int] = field(default_factory=dict)


def _strip_comment(line: str) -> str:
    for i, ch in enumerate(line):
        if ch != "#":
            continue
        follower = line[i + 1] if i + 1 < len(line) else ""
        if follower not in _NAME_START:
            return line[:i]
    return line


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = _strip_comment(raw).strip()
        if stripped:
            out.append((lineno, stripped))
    return out


def parse_document(text: str) -> GrammarDocument:
    """Parse the concrete syntax without validating grammar invariants.

    Tokens undeclared in either alphabet are kept (as nonterminals) so that
    validation can report them; syntax problems raise GrammarSyntaxError
    with a line number.
    """
    lines = _content_lines(text)
    if len(lines) < 4:
        lineno = lines[-1][0] if lines else 1
        raise GrammarSyntaxError("expected sections terminals:, nonterminals:, start:, rules:", lineno)

    section_lines: dict[str, int] = {}

    def section(index: int, header: str) -> tuple[int, str]:
        lineno, content = lines[index]
        if content != header and not content.startswith(header + " "):
            raise GrammarSyntaxError(f"expected section {header!r}", lineno)
        section_lines[header] = lineno
        return lineno, content[len(header) :].strip()

    _, terminal_names = section(0, "terminals:")
    _, nonterminal_names = section(1, "nonterminals:")
    start_line, start_names = section(2, "start:")
    rules_line, rules_rest = section(3, "rules:")
    if rules_rest:
        raise GrammarSyntaxError("rules must start on the line after 'rules:'", rules_line)

    terminals = [term(name) for name in terminal_names.split()]
    nonterminals = [nt(name) for name in nonterminal_names.split()]
    start_tokens = start_names.split()
    if len(start_tokens) != 1:
        raise GrammarSyntaxError("start: takes exactly one name", start_line)

    nt_names = {s.name for s in nonterminals}
    t_names = {s.name for s in terminals}

    def resolve(name: str) -> Symbol:
        if name in nt_names:
            return nt(name)
        if name in t_names:
            return term(name)
        return nt(name)  # undeclared; validation reports it

    start = resolve(start_tokens[0])

    rules: list[Rule] = []
    rule_lines: dict[Rule, int] = {}
    for lineno, content in lines[4:]:
        tokens = content.split()
        if len(tokens) < 2 or tokens[1] != "->":
            raise GrammarSyntaxError("expected 'LHS -> tok tok ...'", lineno)
        lhs = resolve(tokens[0])
        alternatives: list[list[str]] = [[]]
        for tok in tokens[2:]:
            if tok == "|":
                alternatives.append([])
            else:
                alternatives[-1].append(tok)
        for alt in alternatives:
            if not alt:
                raise GrammarSyntaxError(
                    "empty alternative (use 'eps' for an empty right-hand side)",
                    lineno,
                )
            if alt == ["eps"]:
                rule = Rule(lhs, ())
            else:
                rule = Rule(lhs, tuple(resolve(tok) for tok in alt))
            rules.append(rule)
            rule_lines.setdefault(rule, lineno)

    grammar = Grammar(
        nonterminals=tuple(nonterminals),
        terminals=tuple(terminals),
        start=start,
        rules=tuple(rules),
    )
    return GrammarDocument(
        text=text,
        grammar=grammar,
        rule_lines=rule_lines,
        section_lines=section_lines,
    )


def parse_grammar(text: str) -> Grammar:
    """Parse, validate, and canonicalize a grammar document."""
    doc = parse_document(text)
    report = validate(doc.grammar)
    if not report.ok:
        raise ValidationError(report)
    g = doc.grammar
    return Grammar.make(g.nonterminals, g.terminals, g.start, g.rules)


def serialize_grammar(g: Grammar) -> str:
    """Render a grammar in canonical order; parsing the output yields an
    identical grammar (for canonical inputs, the exact same value)."""
    terminals = " ".join(s.name for s in sorted(set(g.terminals)))
    nonterminals = " ".join(s.name for s in sorted(set(g.nonterminals)))
    lines = [
        f"terminals: {terminals}".rstrip(),
        f"nonterminals: {nonterminals}".rstrip(),
        f"start: {g.start.name}",
        "rules:",
    ]
    for r in sorted(set(g.rules)):
        lines.append(f"{r.lhs.name} -> {form_text(r.rhs)}")
    return "\n".join(lines) + "\n"
