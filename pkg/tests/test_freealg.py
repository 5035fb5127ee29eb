from fractions import Fraction

import pytest

from gsbasis import (EmptyPolynomialError, GeneratorSet, MonomialOrder, Ordering, ParseError,
                     Polynomial, deglex_compare, leading_term, poly_mul_monomial)

G3 = GeneratorSet.standard(3)


def test_deglex_length_first():
    assert deglex_compare((0, 0, 0), (2, 2)) == Ordering.GREATER
    assert deglex_compare((0, 1), (1, 0)) == Ordering.LESS
    assert deglex_compare((), ()) == Ordering.EQUAL


def test_deglex_letter_precedence():
    # s3 s2 s3 > s2 s3 s2 since s3 > s2
    assert deglex_compare((2, 1, 2), (1, 2, 1)) == Ordering.GREATER
    assert deglex_compare((1, 0, 1, 0, 1), (0, 1, 0, 1, 0)) == Ordering.GREATER


def test_order_describe():
    assert MonomialOrder(G3).describe() == "deglex s1 < s2 < s3"


def test_generator_labels_validated():
    with pytest.raises(ValueError):
        GeneratorSet(["a", "a"])
    with pytest.raises(ValueError):
        GeneratorSet([])


def test_word_round_trip():
    for text, w in [("s3 s2 s1", (2, 1, 0)), ("s3*s2*s1", (2, 1, 0)), ("1", ())]:
        assert G3.parse_word(text) == w
    assert G3.format_word(()) == "1"
    assert G3.format_word((0, 2)) == "s1 s3"


def test_unknown_generator_column():
    with pytest.raises(ParseError) as info:
        G3.parse_word("s1 s4")
    assert info.value.column == 4


def test_polynomial_parse_and_format():
    p = G3.parse_polynomial("s3 s2 s3 - s2 s3 s2")
    assert p == Polynomial({(2, 1, 2): 1, (1, 2, 1): -1})
    assert G3.format_polynomial(p) == "s3 s2 s3 - s2 s3 s2"
    q = G3.parse_polynomial("1/2*s1 + 3 − s2")
    assert q[(0,)] == Fraction(1, 2) and q[()] == 3 and q[(1,)] == -1
    assert G3.parse_polynomial("0") == Polynomial()
    assert G3.format_polynomial(Polynomial()) == "0"


@pytest.mark.parametrize("bad", ["s1 +", "+ - s1", "s1 s5"])
def test_polynomial_parse_errors(bad):
    with pytest.raises(ParseError):
        G3.parse_polynomial(bad)


def test_arithmetic_cancels():
    p = Polynomial({(0,): 2, (1,): -1})
    assert p - p == 0
    assert (p + p)[(0,)] == 4
    assert p * Polynomial.monomial((2,)) == Polynomial({(0, 2): 2, (1, 2): -1})
    assert poly_mul_monomial((1,), p, (0,)) == Polynomial({(1, 0, 0): 2, (1, 1, 0): -1})


def test_leading_term():
    p = G3.parse_polynomial("s1 s2 s1 s2 s1 - s2 s1 s2 s1 s2")
    assert leading_term(p) == ((1, 0, 1, 0, 1), -1)
    with pytest.raises(EmptyPolynomialError):
        leading_term(Polynomial())


def test_polynomial_is_hashable_and_drops_zeros():
    p = Polynomial({(0,): 0, (1,): 1})
    assert len(p) == 1
    assert hash(p) == hash(Polynomial.monomial((1,)))
