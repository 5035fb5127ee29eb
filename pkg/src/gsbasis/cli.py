"""Command-line interface: ``gsbasis <subcommand> [flags]``.

Basis files are the only state shared between subcommands, so every number
can be reproduced from a shell script.  Exit statuses are listed in
:data:`EXIT`.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import stdmon
from .composition import complete
from .coxeter import parse_presentation, preset, presentation_from_matrix
from .errors import (
    GSBasisError,
    InconsistentPresentationError,
    InfiniteLanguageError,
    ParseError,
)
from .oracle import build_rep, enumerate_group, verify_homomorphism, verify_relation, \
    word_to_matrix
from .relations import catalog
from .rewrite import format_basis, parse_basis

EXIT = {
    "ok": 0,
    "error": 1,
    "usage": 2,
    "truncated": 3,
    "verify_failed": 4,
    "parse_error": 5,
    "infinite": 6,
    "inconsistent": 7,
}

# verify is exhaustive over all pairs up to this many standard words
EXHAUSTIVE_LIMIT = 1000
DEFAULT_SAMPLES = 10**4


class _Fail(Exception):
    def __init__(self, status, message):
        super().__init__(message)
        self.status = status


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_file(parser, path):
    try:
        return parser(_read(path))
    except ParseError as exc:
        raise _Fail(EXIT["parse_error"], f"{path}: {exc}") from None


def _presentation(args):
    """Starting rewriting system from --preset, --presentation or --basis."""
    given = [x for x in (args.preset, args.presentation, args.basis) if x]
    if len(given) != 1:
        raise _Fail(EXIT["usage"], "give exactly one of --preset, --presentation, --basis")
    if args.preset:
        M, gens, _ = preset(args.preset)
        return presentation_from_matrix(M, gens)
    if args.presentation:
        M, gens = _parse_file(parse_presentation, args.presentation)
        return presentation_from_matrix(M, gens)
    return _parse_file(parse_basis, args.basis)


def _limits(args):
    limits = {}
    for name, value in (("max_rule_length", args.max_length), ("max_rules", args.max_rules),
                        ("max_rounds", args.max_rounds)):
        if value is not None:
            if value <= 0:
                raise _Fail(EXIT["usage"], f"--{name.replace('_', '-')} must be positive")
            limits[name] = value
    return limits


def _basis(args):
    """Completed system: a --basis file as is, or a completed preset/presentation."""
    if args.basis and not (args.preset or args.presentation):
        return _parse_file(parse_basis, args.basis)
    if args.presentation:
        M, gens = _parse_file(parse_presentation, args.presentation)
        S0 = presentation_from_matrix(M, gens)
    elif args.preset:
        M, gens, _ = preset(args.preset)
        S0 = presentation_from_matrix(M, gens)
    else:
        raise _Fail(EXIT["usage"], "need --basis, --preset or --presentation")
    report = complete(S0)
    if report.truncated:
        raise _Fail(EXIT["truncated"], f"completion truncated: {report.reason}")
    return report.system


def _word(S, text, flag):
    if text is None:
        raise _Fail(EXIT["usage"], f"{flag} is required")
    try:
        return S.generators.parse_word(text)
    except ParseError as exc:
        raise _Fail(EXIT["parse_error"], f"{flag}: {exc}") from None


def cmd_complete(args):
    S0 = _presentation(args)
    t0 = time.perf_counter()
    report = complete(S0, **_limits(args))
    elapsed = time.perf_counter() - t0
    _write(args.out, format_basis(report.system))
    # keep stdout clean for the basis when no --out is given
    info = sys.stdout if args.out else sys.stderr
    print(report.summary(), file=info)
    print(f"time: {elapsed:.2f}s", file=info)
    return EXIT["truncated"] if report.truncated else EXIT["ok"]


def cmd_nf(args):
    S = _basis(args)
    w = _word(S, args.word, "--word")
    print(S.generators.format_polynomial(S.normal_form(w)))
    return EXIT["ok"]


def cmd_count(args):
    S = _basis(args)
    n = stdmon.count_standard(S)
    print("infinite" if n == stdmon.INFINITE else n)
    return EXIT["ok"]


def cmd_enumerate(args):
    S = _basis(args)
    words = stdmon.enumerate_standard(S, args.max_length)
    fmt = S.generators.format_word
    _write(args.out, "".join(fmt(w) + "\n" for w in words))
    return EXIT["ok"]


def cmd_longest(args):
    S = _basis(args)
    w0 = stdmon.longest_standard(S)
    print(S.generators.format_word(w0))
    print(f"length {len(w0)}", file=sys.stderr)
    return EXIT["ok"]


def cmd_cosets(args):
    S = _basis(args)
    tower = stdmon.coset_tower(S)
    print(" ".join(str(k) for k in tower.sizes))
    if args.out:
        fmt = S.generators.format_word
        lines = []
        for k, level in enumerate(tower.levels, start=2):
            lines.append(f"M{k} {len(level)}")
            lines.extend(fmt(w) for w in level)
        _write(args.out, "\n".join(lines) + "\n")
    return EXIT["ok"]


def cmd_table(args):
    S = _basis(args)
    _, table = stdmon.action_table(S)
    _write(args.out, stdmon.format_action_table(table))
    return EXIT["ok"]


def cmd_multiply(args):
    S = _basis(args)
    u = _word(S, args.left, "--left")
    v = _word(S, args.right, "--right")
    print(S.generators.format_word(stdmon.multiply(u, v, S)))
    return EXIT["ok"]


def cmd_verify(args):
    if args.preset:
        M, gens, _ = preset(args.preset)
        name = args.preset.upper()
    elif args.presentation:
        M, gens = _parse_file(parse_presentation, args.presentation)
        name = None
    else:
        raise _Fail(EXIT["usage"], "verify needs --preset or --presentation")
    if args.basis:
        S = _parse_file(parse_basis, args.basis)
    else:
        S = _basis(args)
    failures = 0

    def line(ok, text):
        nonlocal failures
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} {text}")

    rep = build_rep(M)
    line(True, f"reflection representation of rank {M.n}")

    for r in sorted(S.rules, key=lambda r: r.id):
        if len(r.rhs) != 1 or next(iter(r.rhs.values())) != 1:
            line(False, f"rule {r.format(S.generators)} is not a group relation")
            continue
        ok = verify_relation(r.lhs, next(iter(r.rhs)), rep)
        line(ok, f"rule {r.id} holds in the group")

    if name in ("H3", "H4"):
        for label, lhs, rhs in catalog(name):
            ok = verify_relation(lhs, rhs, rep)
            ok = ok and S.normal_form(lhs) == S.normal_form(rhs)
            line(ok, f"relation {label}")

    group = enumerate_group(rep)
    count = stdmon.count_standard(S)
    line(group.order == count, f"group order {group.order}, standard monomials {count}")
    if count == stdmon.INFINITE:
        return EXIT["verify_failed"]

    w0 = stdmon.longest_standard(S)
    line(not word_to_matrix(w0, rep).is_identity() or not w0,
         f"longest element has length {len(w0)}")

    samples = args.samples
    if samples is None and count > EXHAUSTIVE_LIMIT:
        samples = DEFAULT_SAMPLES
    report = verify_homomorphism(S, rep, samples=samples, seed=args.seed)
    how = "all" if report.exhaustive else f"seed {args.seed},"
    line(report.counterexample is None,
         f"products agree with matrices ({how} {report.pairs_checked} pairs)")
    line(report.injective, f"standard monomials map to distinct matrices ({report.words})")

    print(f"order {group.order}")
    print(f"{failures} failure(s)")
    return EXIT["verify_failed"] if failures else EXIT["ok"]


COMMANDS = {
    "complete": (cmd_complete, "complete a presentation and write the basis"),
    "nf": (cmd_nf, "normal form of --word"),
    "count": (cmd_count, "number of standard monomials"),
    "enumerate": (cmd_enumerate, "list standard monomials in deg-lex order"),
    "longest": (cmd_longest, "deg-lex largest standard monomial"),
    "cosets": (cmd_cosets, "coset tower sizes (and representatives with --out)"),
    "table": (cmd_table, "generator action table"),
    "multiply": (cmd_multiply, "standard form of --left times --right"),
    "verify": (cmd_verify, "check a basis against the reflection representation"),
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gsbasis",
        description="Gröbner–Shirshov bases for Coxeter group algebras of type H.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--preset", help="H2, H3 or H4")
        p.add_argument("--presentation", help="presentation file (rank:/m: lines)")
        p.add_argument("--basis", help="basis file")
        p.add_argument("--out", help="output file (default stdout)")
        p.add_argument("--word")
        p.add_argument("--left")
        p.add_argument("--right")
        p.add_argument("--max-length", type=int,
                       help="completion: longest allowed rule; enumerate: longest word")
        p.add_argument("--max-rules", type=int)
        p.add_argument("--max-rounds", type=int)
        p.add_argument("--samples", type=int, help="sampled pairs for verify")
        p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        return handler(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.status
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT["parse_error"]
    except InfiniteLanguageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT["infinite"]
    except InconsistentPresentationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT["inconsistent"]
    except (GSBasisError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT["error"]


if __name__ == "__main__":
    sys.exit(main())
