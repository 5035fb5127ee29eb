import pytest

from gsbasis import (GeneratorSet, InconsistentPresentationError, Polynomial, RewriteSystem,
                     complete, compositions, interreduce, is_closed, make_rule, parse_basis,
                     preset_presentation, reduces_to_zero)
from gsbasis.composition import Kind
from gsbasis.relations import catalog

from helpers import completed


def _rule(G, text, id):
    return make_rule(G.parse_polynomial(text), id=id)


def test_intersection_example():
    # s3s2s1s3 and s3s2s3 overlap in s3, giving s3s2s1s3s2s3
    G = GeneratorSet.standard(3)
    p = _rule(G, "s3 s2 s1 s3 - s2 s3 s2 s1", 0)
    q = _rule(G, "s3 s2 s3 - s2 s3 s2", 1)
    comps = compositions(p, q)
    words = {c.w for c in comps if c.kind is Kind.INTERSECTION}
    assert (2, 1, 0, 2, 1, 2) in words


def test_inclusion_found():
    G = GeneratorSet.standard(2)
    p = _rule(G, "s1 s2 - s1", 0)
    q = _rule(G, "s2 s1 s2 s1 - s1", 1)
    inc = [c for c in compositions(p, q) if c.kind is Kind.INCLUSION]
    assert [c.a for c in inc] == [(1,)]
    assert inc[0].w == q.lhs


def test_self_overlap_excludes_trivial():
    G = GeneratorSet.standard(1)
    p = _rule(G, "s1 s1 - 1", 0)
    assert [len(c.w) for c in compositions(p, p)] == [3]


def test_h2_presentation_closed():
    closed, witness = is_closed(preset_presentation("H2"))
    assert closed and witness is None


def test_h3_presentation_not_closed():
    R = preset_presentation("H3")
    closed, witness = is_closed(R)
    assert not closed
    nf = R.normal_form(witness.value)
    lead = max(nf, key=lambda w: (len(w), w))
    assert lead == (2, 1, 0, 2)


def test_completed_compositions_vanish():
    S = completed("H3")
    closed, _ = is_closed(S)
    assert closed
    from gsbasis import all_compositions
    assert all(reduces_to_zero(c, S) for c in all_compositions(S))


def test_completion_report_h2():
    report = complete(preset_presentation("H2"))
    assert report.closed and report.rules_added == 0 and len(report.system) == 3
    assert "status: closed" in report.summary()


def test_truncation_is_reported():
    report = complete(preset_presentation("H4"), max_rule_length=10)
    assert report.truncated and not report.closed
    assert "exceeds 10" in report.reason


def test_round_limit():
    report = complete(preset_presentation("H3"), max_rounds=2)
    assert report.truncated


def test_inconsistent_presentation():
    # x^2 = 1 and x = 2 force 1 = 4
    G = GeneratorSet(["x"])
    S = RewriteSystem([make_rule(G.parse_polynomial("x x - 1"), id=0),
                       make_rule(G.parse_polynomial("x - 2"), id=1)], G)
    with pytest.raises(InconsistentPresentationError):
        complete(S)


def test_published_thirteen_rules_interreduce_to_completion():
    R = preset_presentation("H3")
    extra = [make_rule(Polynomial.monomial(lhs) - Polynomial.monomial(rhs), id=10 + i)
             for i, (_, lhs, rhs) in enumerate(catalog("H3"))]
    P = RewriteSystem(list(R.rules) + extra, R.generators)
    assert len(P) == 13
    assert is_closed(P)[0]
    reduced = interreduce(P)
    assert reduced.lhs_set == completed("H3").lhs_set
    assert len(reduced) == 9


def test_completion_independent_of_rule_order():
    R = preset_presentation("H3")
    flipped = RewriteSystem(list(reversed([r for r in R.rules])), R.generators)
    assert complete(flipped).system.lhs_set == completed("H3").lhs_set


def test_symmetric_group_s3_already_closed():
    # standard words 1, a, b, ab, ba, aba: the six elements of S3
    from gsbasis import count_standard
    S = parse_basis("generators: a b\na a -> 1\nb b -> 1\nb a b -> a b a\n")
    report = complete(S)
    assert report.closed and report.rules_added == 0
    assert count_standard(report.system) == 6
