"""Shared grammar builders for the test suite."""

from __future__ import annotations

from textwrap import dedent

from cfg_forge import Grammar, Sentence, nt, parse_grammar, term


def g(text: str) -> Grammar:
    return parse_grammar(dedent(text))


def sent(text: str) -> Sentence:
    """Build a sentence from space-separated terminal names."""
    return tuple(term(name) for name in text.split())


def sentences(*texts: str) -> set[Sentence]:
    return {sent(t) for t in texts}


def paper_grammar() -> Grammar:
    """The a*b example: ({S,A,B},{a,b},{S -> aS, S -> b},S)."""
    return g(
        """
        terminals: a b
        nonterminals: S A B
        start: S
        rules:
        S -> a S | b
        """
    )
