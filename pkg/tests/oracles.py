"""Independent oracles used by the test suite.

The brute-force functions characterize nullable/useful/accessible by
searching over actual derivations (bounded breadth-first rewriting), with
no reference to the library's fixpoint analyses.  Bounds follow the shape
of minimal witnesses: on the small grammars tested (at most 5 alphabet
symbols, right-hand sides of at most 2), every witness fits within a form
length of twice the alphabet and a step budget of twice the alphabet times
the longest right-hand side.
"""

from __future__ import annotations

from cfg_forge import Grammar, Sentence, SententialForm, Symbol


def _max_rhs(g: Grammar) -> int:
    return max((len(r.rhs) for r in g.rules), default=1)


def derivable_forms(
    g: Grammar,
    start: SententialForm,
    max_steps: int,
    max_len: int,
    skip=None,
    found=None,
) -> set[SententialForm]:
    """All forms reachable from ``start`` by rewriting any occurrence with
    any rule, visiting at most ``max_steps`` frontier generations and
    dropping forms longer than ``max_len``.

    ``skip`` prunes forms from the search; ``found`` stops it early.
    """
    seen = {start}
    frontier = [start]
    for _ in range(max_steps):
        grown: list[SententialForm] = []
        for form in frontier:
            for i, sym in enumerate(form):
                if sym.is_terminal:
                    continue
                for r in g.rules:
                    if r.lhs != sym:
                        continue
                    nxt = form[:i] + r.rhs + form[i + 1 :]
                    if len(nxt) > max_len or nxt in seen:
                        continue
                    if skip and skip(nxt):
                        continue
                    seen.add(nxt)
                    if found and found(nxt):
                        return seen
                    grown.append(nxt)
        if not grown:
            break
        frontier = grown
    return seen


def brute_nullable(g: Grammar) -> frozenset[Symbol]:
    """Nonterminals that derive the empty form, by direct search.

    Terminals never disappear, so any form containing one is pruned.
    """
    steps = 2 * len(g.symbols) * _max_rhs(g)
    max_len = 2 * len(g.symbols)
    out = set()
    for n in g.nonterminals:
        forms = derivable_forms(
            g,
            (n,),
            steps,
            max_len,
            skip=lambda f: any(s.is_terminal for s in f),
            found=lambda f: f == (),
        )
        if () in forms:
            out.add(n)
    return frozenset(out)


def brute_useful(g: Grammar) -> frozenset[Symbol]:
    """Symbols that derive some terminal-only form, by direct search."""
    steps = 2 * len(g.symbols) * _max_rhs(g)
    max_len = 2 * len(g.symbols)
    out = set(g.terminals)
    for n in g.nonterminals:
        forms = derivable_forms(
            g,
            (n,),
            steps,
            max_len,
            found=lambda f: all(s.is_terminal for s in f),
        )
        if any(all(s.is_terminal for s in f) for f in forms):
            out.add(n)
    return frozenset(out)


def brute_accessible(g: Grammar) -> frozenset[Symbol]:
    """Symbols occurring in some form derivable from the start symbol."""
    steps = 2 * len(g.symbols) * _max_rhs(g)
    max_len = 2 * len(g.symbols)
    forms = derivable_forms(g, (g.start,), steps, max_len)
    return frozenset({s for f in forms for s in f} | {g.start})


def concat_languages(
    left: set[Sentence], right: set[Sentence], max_len: int
) -> set[Sentence]:
    """Pairwise concatenation, truncated to ``max_len``."""
    return {x + y for x in left for y in right if len(x) + len(y) <= max_len}


def star_language(words: set[Sentence], max_len: int) -> set[Sentence]:
    """All concatenations of the given words with total length at most
    ``max_len``; always contains the empty sentence."""
    useful = [w for w in words if w]
    closure = {()}
    frontier = [()]
    while frontier:
        base = frontier.pop()
        for w in useful:
            joined = base + w
            if len(joined) <= max_len and joined not in closure:
                closure.add(joined)
                frontier.append(joined)
    return closure
