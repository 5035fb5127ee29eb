import pytest

from gsbasis import (DegenerateRuleError, GeneratorSet, InconsistentPresentationError, ParseError,
                     Polynomial, Rule, RewriteSystem, format_basis, make_rule, parse_basis)
from gsbasis.automaton import FactorAutomaton
from gsbasis.rewrite import replay_trace

from helpers import completed

H2_TEXT = """\
generators: s1 s2
order: deglex s1 < s2
s1 s1 -> 1
s2 s2 -> 1
s2 s1 s2 s1 s2 -> s1 s2 s1 s2 s1
"""


def test_parse_format_round_trip():
    S = parse_basis(H2_TEXT)
    assert len(S) == 3
    assert format_basis(S) == H2_TEXT
    assert format_basis(parse_basis(format_basis(completed("H4")))) == format_basis(completed("H4"))


def test_parse_error_position():
    text = "generators: s1 s2\ns1 s1 -> 1\ns2 s3 -> 1\n"
    with pytest.raises(ParseError) as info:
        parse_basis(text)
    assert info.value.line == 3
    assert info.value.column == 4


def test_parse_requires_arrow():
    with pytest.raises(ParseError) as info:
        parse_basis("generators: s1\ns1 s1 = 1\n")
    assert info.value.line == 2


def test_rhs_must_be_smaller():
    G = GeneratorSet.standard(2)
    with pytest.raises(ValueError):
        RewriteSystem([Rule((0,), Polynomial.monomial((1,)))], G)


def test_make_rule_monic():
    G = GeneratorSet.standard(2)
    r = make_rule(G.parse_polynomial("2*s2 s1 - 4*s1 s2"))
    assert r.lhs == (1, 0) and r.rhs == Polynomial.monomial((0, 1), 2)
    with pytest.raises(InconsistentPresentationError):
        make_rule(Polynomial.monomial((), 3))


def test_normal_form_h3_extra_relation():
    S = completed("H3")
    G = S.generators
    assert G.format_polynomial(S.normal_form(G.parse_word("s3 s2 s1 s3"))) == "s2 s3 s2 s1"


def test_normal_form_is_linear():
    S = completed("H3")
    G = S.generators
    p = G.parse_polynomial("s3 s2 s3 - s2 s3 s2 + 2*s1 s1")
    assert S.normal_form(p) == Polynomial.monomial((), 2)


def test_trace_replays():
    S = completed("H4")
    w = (3, 2, 1, 0) * 6
    trace = []
    nf = S.normal_form(w, trace)
    assert trace
    assert replay_trace(trace, S) == Polynomial.monomial(w) - nf
    assert S.is_standard(next(iter(nf)))


def test_find_reducible_leftmost():
    S = completed("H3")
    rid, pos = S.find_reducible((0, 0, 2, 2))
    assert pos == 0 and S.rule(rid).lhs == (0, 0)
    assert S.find_reducible((0, 1, 2)) is None


def test_polynomial_rhs():
    # y x -> x + 1: not a group algebra, exercises branching
    G = GeneratorSet(["x", "y"])
    S = RewriteSystem([make_rule(G.parse_polynomial("y x - x - 1"))], G)
    # y y x -> y x + y -> x + 1 + y
    assert G.format_polynomial(S.normal_form(G.parse_word("y y x"))) == "y + x + 1"
    assert G.format_polynomial(S.normal_form(G.parse_word("x y"))) == "x y"


def test_automaton_occurrences():
    fa = FactorAutomaton([(0, 1), (1,), (1, 1, 0)], 2)
    assert sorted(fa.occurrences((0, 1, 1, 0))) == [(0, 0), (1, 1), (1, 2), (2, 1)]
    assert fa.accepts((0, 0, 0))
    assert not fa.accepts((0, 1))
    with pytest.raises(DegenerateRuleError):
        FactorAutomaton([()], 2)
