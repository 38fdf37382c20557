"""Union, concatenation, and Kleene star constructions."""

import pytest

from cfg_forge import (
    GenParams,
    InvalidOperand,
    LiftTag,
    concat,
    enumerate_sentences,
    lift_form,
    member,
    nt,
    random_grammar,
    star,
    term,
    union,
    validate,
)
from helpers import g, paper_grammar, sent, sentences

AB_STAR_B = """
    terminals: a b
    nonterminals: S
    start: S
    rules:
    S -> a S | b
"""


def lang(gr, n):
    return set(enumerate_sentences(gr, n).sentences)


class TestLiftForm:
    def test_single_nonterminal(self):
        assert lift_form((term("a"), nt("S")), LiftTag.LEFT) == (
            term("a"),
            nt("u1:S"),
        )

    def test_empty_form(self):
        assert lift_form((), LiftTag.RIGHT) == ()

    def test_terminals_pass_through(self):
        form = (nt("A"), term("b"), nt("C"))
        assert lift_form(form, LiftTag.SOLE) == (nt("k:A"), term("b"), nt("k:C"))


class TestUnion:
    def test_bounded_language_is_set_union(self):
        g1 = g(AB_STAR_B)
        g2 = g("terminals: c\nnonterminals: T\nstart: T\nrules:\nT -> c\n")
        assert lang(union(g1, g2), 2) == sentences("b", "c", "a b")

    def test_self_union_preserves_bounded_language(self):
        g1 = paper_grammar()
        assert lang(union(g1, g1), 4) == lang(g1, 4)

    def test_rule_count(self):
        g1 = g(AB_STAR_B)
        g2 = g("terminals: c\nnonterminals: T\nstart: T\nrules:\nT -> c\n")
        u = union(g1, g2)
        assert len(u.rules) == len(g1.rules) + len(g2.rules) + 2

    def test_result_validates(self):
        u = union(paper_grammar(), paper_grammar())
        assert validate(u).ok

    def test_invalid_operand_rejected(self):
        from cfg_forge import Grammar, Rule

        bad = Grammar.make([nt("S")], [term("a")], nt("T"), [])
        with pytest.raises(InvalidOperand):
            union(bad, paper_grammar())

    def test_fresh_start_never_on_rhs(self):
        u = union(paper_grammar(), paper_grammar())
        assert all(u.start not in r.rhs for r in u.rules)

    def test_lifted_namespaces_disjoint(self):
        g1 = paper_grammar()
        u = union(g1, g1)
        left = {s.name for s in u.nonterminals if s.name.startswith("u1:")}
        right = {s.name for s in u.nonterminals if s.name.startswith("u2:")}
        assert left and right and not (left & right)
        assert u.start.name == "#S"
        assert u.start.name not in left | right


class TestConcat:
    def test_singleton_languages(self):
        g1 = g("terminals: b\nnonterminals: S\nstart: S\nrules:\nS -> b\n")
        g2 = g("terminals: c\nnonterminals: T\nstart: T\nrules:\nT -> c\n")
        assert lang(concat(g1, g2), 2) == sentences("b c")

    def test_concat_with_empty_language(self):
        # S has no terminal derivation, so the concatenation is empty
        empty = g("terminals: a\nnonterminals: S\nstart: S\nrules:\nS -> a S\n")
        g2 = g("terminals: c\nnonterminals: T\nstart: T\nrules:\nT -> c\n")
        for n in range(5):
            assert lang(concat(empty, g2), n) == set()

    def test_rule_count(self):
        g1 = g(AB_STAR_B)
        g2 = g("terminals: c\nnonterminals: T\nstart: T\nrules:\nT -> c\n")
        c = concat(g1, g2)
        assert len(c.rules) == len(g1.rules) + len(g2.rules) + 1

    def test_result_validates(self):
        assert validate(concat(paper_grammar(), paper_grammar())).ok


class TestStar:
    def test_single_letter_language(self):
        g1 = g("terminals: a\nnonterminals: S\nstart: S\nrules:\nS -> a\n")
        assert lang(star(g1), 2) == sentences("", "a", "a a")

    def test_empty_sentence_always_generated(self):
        for seed in range(30):
            gr = random_grammar(GenParams(seed=seed))
            ok, trace = member(star(gr), ())
            assert ok and trace is not None

    def test_star_of_ab_star_b_up_to_three(self):
        # all concatenations of {b, ab, aab} with total length <= 3
        g1 = g(AB_STAR_B)
        expected = sentences("", "b", "a b", "b b", "a a b", "a b b", "b a b", "b b b")
        assert lang(star(g1), 3) == expected

    def test_fresh_start_on_rhs_only_in_seed_rule(self):
        st = star(paper_grammar())
        offenders = [r for r in st.rules if st.start in r.rhs]
        assert offenders == [r for r in st.rules if r.lhs == st.start and r.rhs]

    def test_result_validates(self):
        assert validate(star(paper_grammar())).ok


def test_nested_constructions_compound_prefixes():
    inner = star(g("terminals: a\nnonterminals: S\nstart: S\nrules:\nS -> a\n"))
    outer = union(inner, inner)
    names = {s.name for s in outer.nonterminals}
    assert "u1:k:S" in names and "u2:k:S" in names
    assert "u1:#S" in names and "u2:#S" in names
    assert outer.start.name == "#S"
    assert validate(outer).ok
