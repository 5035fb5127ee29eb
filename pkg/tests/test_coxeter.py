import pytest

from gsbasis import (CoxeterMatrix, ParseError, UnsupportedBondError, format_presentation,
                     parse_presentation, preset, presentation_from_matrix, preset_presentation)
from gsbasis.coxeter import INFINITY


def lhs_text(S):
    return [S.generators.format_word(r.lhs) for r in sorted(S.rules, key=lambda r: r.id)]


def test_h3_presentation_rules():
    assert lhs_text(preset_presentation("H3")) == [
        "s1 s1", "s2 s2", "s3 s3", "s2 s1 s2 s1 s2", "s3 s2 s3", "s3 s1"]


def test_h4_presentation_size():
    S = preset_presentation("H4")
    assert len(S) == 10
    assert "s4 s3 s4" in lhs_text(S)


def test_h2_braid_orientation():
    S = preset_presentation("H2")
    r = S.rule(2)
    assert r.lhs == (1, 0, 1, 0, 1)
    assert list(r.rhs) == [(0, 1, 0, 1, 0)]


def test_matrix_validation():
    with pytest.raises(ValueError):
        CoxeterMatrix([[1, 3], [2, 1]])
    with pytest.raises(ValueError):
        CoxeterMatrix([[2, 3], [3, 1]])


def test_infinite_bond_rejected():
    M = CoxeterMatrix([[1, INFINITY], [INFINITY, 1]])
    with pytest.raises(UnsupportedBondError):
        presentation_from_matrix(M)


def test_presentation_text_round_trip():
    M, _, _ = preset("H4")
    M2, gens = parse_presentation(format_presentation(M))
    assert M2 == M and gens.rank == 4
    M3, _ = parse_presentation("preset: H3\n")
    assert M3 == preset("H3")[0]


def test_presentation_override():
    M, _ = parse_presentation("rank: 3\nm: 1 2 5\nm: 2 3 3 # H3\n")
    assert M == preset("H3")[0]


@pytest.mark.parametrize("text, line", [
    ("rank: 2\nm: 1 2\n", 2),
    ("rank: 2\ncolour: red\n", 2),
    ("rank x\n", 1),
])
def test_presentation_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_presentation(text)
    assert info.value.line == line


def test_unknown_preset():
    with pytest.raises(KeyError):
        preset("E8")
