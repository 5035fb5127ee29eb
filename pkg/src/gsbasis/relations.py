"""Catalog of the extra relations holding in the H3 and H4 group algebras.

Words are written compactly with one digit per generator (``"4321"`` is
``s4 s3 s2 s1``), parentheses for grouping and ``^k`` for powers.  Each entry
is ``(name, left, right)`` with ``left`` the leading side.
"""

from __future__ import annotations

import re


def expand(text: str) -> tuple:
    """Expand compact notation into a 0-based word, e.g. ``"(43)^2 1"`` -> ``(3, 2, 3, 2, 0)``."""
    pos = 0
    src = text

    def parse_seq():
        nonlocal pos
        out = []
        while pos < len(src) and src[pos] != ")":
            ch = src[pos]
            if ch == " ":
                pos += 1
                continue
            if ch == "(":
                pos += 1
                inner = parse_seq()
                if pos >= len(src) or src[pos] != ")":
                    raise ValueError(f"unbalanced parentheses in {text!r}")
                pos += 1
                item = inner
            elif ch.isdigit():
                pos += 1
                item = [int(ch) - 1]
            else:
                raise ValueError(f"unexpected {ch!r} in {text!r}")
            m = re.match(r"\^(\d+)", src[pos:])
            if m:
                pos += m.end()
                item = item * int(m.group(1))
            out.extend(item)
        return out

    word = parse_seq()
    if pos != len(src):
        raise ValueError(f"unbalanced parentheses in {text!r}")
    return tuple(word)


X = "(43212132123)"

H3_RELATIONS = [
    ("321.a", "(321)3", "2(321)"),
    ("321.b", "(321)32", "2(3212)"),
    ("321.c", "(321)^2", "2(32121)"),
    ("321.d", "(3212)32", "2(3212)3"),
    ("321.e", "(3212)321", "2(32121)3"),
    ("321.f", "(3212)^2", "2(32121)32"),
    ("321.g", "(32121)^2", "2(32121)3212"),
]

H4_RELATIONS = [
    ("432.a", "(432)4", "3(432)"),
    ("432.b", "(432)43", "32(432)"),

    ("4321.a", "(4321)4", "3(4321)"),
    ("4321.b", "(4321)43", "32(4321)"),
    ("4321.c", "(4321)432", "32(43212)"),
    ("4321.d", "(4321)^2", "32(432121)"),

    ("43212.a", "(43212)4", "3(43212)"),
    ("43212.b", "(43212)43", "3(432123)"),
    ("43212.c", "(43212)432", "32(432123)"),
    ("43212.d", "(43212)4321", "32(4321213)"),
    ("43212.e", "(43212)^2", "32(43212132)"),

    ("432123.a", "(432123)2", "2(432123)"),
    ("432123.b", "(432123)43", "3(432123)4"),
    ("432123.c", "(432123)432", "32(432123)4"),
    ("432123.d", "(432123)4321", "32(4321213)4"),
    ("432123.e", "(432123)43212", "32(43212132)4"),
    ("432123.f", "(432123)^2", "32(43212132)43"),

    ("432121.a", "(432121)4", "3(432121)"),
    ("432121.b", "(432121)43", "3(4321213)"),
    ("432121.c", "(432121)432", "3(43212132)"),
    ("432121.d", "(432121)4321", "3(432121321)"),
    ("432121.e", "(432121)43212", "3(4321213212)"),
    ("432121.f", "(432121)432123", "3(43212132123)"),
    ("432121.g", "(432121)^2", "32(4321213212)"),

    ("4321213.a", "(4321213)43", "3(4321213)4"),
    ("4321213.b", "(4321213)432", "3(43212132)4"),
    ("4321213.c", "(4321213)4321", "3(432121321)4"),
    ("4321213.d", "(4321213)43212", "3(4321213212)4"),
    ("4321213.e", "(4321213)432123", "3(4321213212)43"),
    ("4321213.f", "(4321213)432121", "32(4321213212)4"),
    ("4321213.g", "(4321213)^2", "32(4321213212)43"),

    ("43212132.a", "(43212132)432", "3(43212132)43"),
    ("43212132.b", "(43212132)4321", "3(432121321)43"),
    ("43212132.c", "(43212132)43212", "3(432121321)432"),
    ("43212132.d", "(43212132)432123", "3(4321213212)432"),
    ("43212132.e", "(43212132)432121", "3(432121321)4321"),
    ("43212132.f", "(43212132)4321213", "3(4321213212)4321"),
    ("43212132.g", "(43212132)^2", "3(4321213212)43212"),

    ("432121321.a", "(432121321)432121", "3(432121321)43212"),
    ("432121321.b", "(432121321)4321213", "3(432121321)432123"),
    ("432121321.c", "(432121321)43212132", "3(4321213212)432123"),
    ("432121321.d", "(432121321)^2", "3(4321213212)4321213"),

    ("4321213212", "(4321213212)^2", "3(4321213212)432121321"),

    ("4321213212x.a", "(4321213212)(432123)43", X + "(432123)4"),
    ("4321213212x.b", "(4321213212)(4321213)43", X + "(4321213)4"),
    ("4321213212x.c", "(4321213212)(43212132)432", X + "(43212132)43"),
    ("4321213212x.d", "(4321213212)(432121321)432121", X + "(432121321)43212"),
    ("4321213212x.e", "(4321213212)(432121321)(432123)43",
     "2(4321213212)(432121321)(432123)4"),

    ("43212132123.a", X + "1", "2" + X),
    ("43212132123.b", X + "2", "1" + X),

    ("43212132123x.a", X + "(432123)43", "(4321213212)(432123)4"),
    ("43212132123x.b", X + "(4321213)43", "(4321213212)(4321213)4"),
    ("43212132123x.c", X + "(43212132)432", "(4321213212)(43212132)43"),
    ("43212132123x.d", X + "(432121321)432121", "(4321213212)(432121321)43212"),

    # closing groups: powers of the length-11 block
    ("X.4321213212.a", X + "(4321213212)432121321", "3" + X + "(4321213212)43212132"),
    ("X.4321213212.b", X + "(4321213212)(432123)43", X + "^2(432123)4"),
    ("X.4321213212.c", X + "(4321213212)(4321213)43", X + "^2(4321213)4"),
    ("X.4321213212.d", X + "(4321213212)(43212132)432", X + "^2(43212132)43"),

    ("X^2.a", X + "^2(432121321)43212", "3" + X + "^2(432121321)4321"),
    ("X^2.b", X + "^2(4321213212)432123", "3" + X + "^2(4321213212)43212"),
    ("X^2.c", X + "^2(4321213212)4321213", "3" + X + "^2(4321213212)432121"),

    ("X^3.a", X + "^3(432123)4", "3" + X + "^3 432123"),
    ("X^3.b", X + "^3(4321213)4", "3" + X + "^3 4321213"),
    ("X^3.c", X + "^3(43212132)4", "3" + X + "^3 43212132"),
    ("X^3.d", X + "^3(432121321)4", "3" + X + "^3 432121321"),
    ("X^3.e", X + "^3(4321213212)4", "3" + X + "^3 4321213212"),

    ("X^4", X + "^4 43", "3" + X + "^4 4"),
]


def catalog(name: str):
    """Expanded ``(name, left, right)`` triples valid in the named group."""
    name = name.upper()
    if name == "H2":
        return []
    if name == "H3":
        rows = H3_RELATIONS
    elif name == "H4":
        rows = H3_RELATIONS + H4_RELATIONS
    else:
        raise KeyError(f"no relation catalog for {name!r}")
    return [(label, expand(left), expand(right)) for label, left, right in rows]
