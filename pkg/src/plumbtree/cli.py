"""Command line front end.

Exit codes: 0 in S (or success), 1 not in S, 2 parse error, 3 invalid graph
or parameters, 4 search budget exceeded, 5 classification disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import io
from .contfrac import ContFracError
from .duality import dual_tree
from .enumeration import EnumerationError, survey
from .families import (
    ABC,
    FamilyError,
    appendix_embedding,
    check_input,
    classify,
    generate,
    G,
    M,
    N,
    W,
)
from .graph import GraphError
from .lattice import BudgetExceeded, EmbeddingError, default_budget
from .obstructions import ISOTROPIC_BUDGET, obstruction_report

EXIT_IN_S, EXIT_NOT_IN_S, EXIT_PARSE, EXIT_INVALID, EXIT_BUDGET, EXIT_VIOLATION = range(6)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read_graph(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_PARSE) from None
    try:
        return io.parse_graph(text)
    except io.ParseError as exc:
        raise CliError(f"parse error: {exc}", EXIT_PARSE) from None
    except GraphError as exc:
        raise CliError(f"invalid graph: {exc}", EXIT_INVALID) from None


def _validated(path: str):
    tree = _read_graph(path)
    try:
        check_input(tree)
    except GraphError as exc:
        raise CliError(f"invalid graph: {exc}", EXIT_INVALID) from None
    return tree


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def cmd_classify(args) -> int:
    tree = _validated(args.file)
    budget = args.budget if args.budget is not None else default_budget()
    rep = classify(tree, budget)
    if args.json:
        out = {
            "in_S": rep.in_S,
            "labels": rep.label_strings(),
            "case": rep.case.value if rep.case else None,
            "full": rep.full,
            "index_types": rep.profile,
            "witness": io.embedding_json(tree, rep.embedding) if rep.embedding else None,
            "notes": rep.notes,
        }
        print(json.dumps(out, indent=2))
    elif not args.quiet:
        labels = ", ".join(rep.label_strings()) or "none"
        print(f"{'in S' if rep.in_S else 'not in S'}; labels: {labels}")
        if rep.in_S:
            print(f"case: {rep.case.value}")
            print(f"full: {'yes' if rep.full else 'no'}")
            print("index types: " + " ".join(map(str, rep.profile)))
            print("witness:")
            for line in io.embedding_lines(tree, rep.embedding):
                print("  " + line)
        for note in rep.notes:
            print(note)
    if rep.violation:
        return EXIT_VIOLATION
    return EXIT_IN_S if rep.in_S else EXIT_NOT_IN_S


def _parse_moves(tokens):
    moves = []
    for tok in tokens:
        if tok == "v":
            moves.append(("vertex",))
        elif tok.startswith("e") and tok[1:].isdigit():
            moves.append(("edge", int(tok[1:])))
        else:
            raise CliError(f"bad move {tok!r}; use 'v' or 'e<neighbour id>'", EXIT_INVALID)
    return moves


def cmd_generate(args) -> int:
    fam = args.family
    try:
        if fam == "gpq":
            label = G(args.p, args.q)
        elif fam == "abc":
            label = ABC(args.base.upper(), _parse_moves(args.moves))
        else:
            label = {"w": W, "n": N, "m": M}[fam](args.p, args.q, args.r)
        tree = generate(label)
        comments = [f"family {label}"]
        if args.embed:
            emb = appendix_embedding(label)
            comments += ["embedding:"] + ["  " + x for x in io.embedding_lines(tree, emb)]
    except (FamilyError, ContFracError, GraphError) as exc:
        raise CliError(f"invalid parameters: {exc}", EXIT_INVALID) from None
    sys.stdout.write(io.to_text(tree, comments))
    return 0


def cmd_check(args) -> int:
    tree = _validated(args.file)
    rep = obstruction_report(tree, args.isotropic_budget, args.budget)
    if args.json:
        out = {
            "rational": rep.is_rational,
            "K_squared": _frac(rep.k_squared),
            "n_plus_K_squared": _frac(rep.k_squared_plus_n),
            "det": rep.det,
            "invariant_factors": rep.invariant_factors,
            "det_is_square": rep.det_is_square,
            "isotropic_subgroup": rep.isotropic,
            "mu": rep.mu,
            "mu_note": rep.mu_note,
            "in_S": rep.in_S,
            "failures": rep.failures,
        }
        print(json.dumps(out, indent=2))
        return 0
    ok, bad = "ok", "obstruction FAILS"
    print(f"rational: {'yes' if rep.is_rational else 'no'}: {ok if rep.is_rational else bad}")
    print(f"n + K^2 = {_frac(rep.k_squared_plus_n)}: {ok if rep.k_squared_plus_n == 0 else bad}")
    factors = " x ".join(f"Z/{d}" for d in rep.invariant_factors) or "0"
    print(f"|D| = {rep.det} ({factors}): {'square' if rep.det_is_square else 'not a square: ' + bad}")
    print(f"self-isotropic subgroup: {rep.isotropic}" + (f": {bad}" if rep.isotropic == "no" else ""))
    if rep.mu is None:
        print(f"mu: {rep.mu_note}")
    else:
        print(f"mu = {rep.mu} (mod 16): {ok if rep.mu == 0 else bad}")
    print(f"diagonal lattice embedding: {'yes' if rep.in_S else 'no: ' + bad}")
    if rep.failures:
        print("cannot bound a rational homology disk smoothing (" + "; ".join(rep.failures) + ")")
    else:
        print("all necessary conditions hold")
    return 0


def cmd_dual(args) -> int:
    tree = _read_graph(args.file)
    try:
        d = dual_tree(tree)
    except GraphError as exc:
        raise CliError(f"invalid graph: {exc}", EXIT_INVALID) from None
    legs = d.leg_weights()
    if args.json:
        print(json.dumps({"center": d.center, "legs": legs,
                          "leg_values": [_frac(x) for x in d.legs], "rank": d.rank()}, indent=2))
        return 0
    print(f"center decoration: {d.center}")
    for x, ws in zip(d.legs, legs):
        print(f"leg {_frac(x)}: {ws}")
    print(f"rank: {d.rank()}")
    if d.center >= 0:
        print("non-negative center: not a plumbing-tree input")
    return 0


def cmd_enumerate(args) -> int:
    try:
        rep = survey(args.n, args.min_weight)
    except EnumerationError as exc:
        raise CliError(str(exc), EXIT_INVALID) from None
    print(rep.summary())
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(rep.to_json(), fh, indent=2)
    if rep.violations:
        for text in rep.violations:
            print(f"THEOREM-VIOLATION {text}")
        return EXIT_VIOLATION
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise CliError(message, EXIT_PARSE)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="plumbtree", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="decide membership in S and name the families")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--quiet", action="store_true")
    p.add_argument("--budget", type=int, default=None, help="search node budget")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("generate", help="print a family member")
    p.add_argument("--embed", action="store_true", help="also print the explicit embedding")
    gsub = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    g = gsub.add_parser("gpq")
    g.add_argument("p", type=int)
    g.add_argument("q", type=int)
    for name in ("w", "n", "m"):
        g = gsub.add_parser(name)
        for x in ("p", "q", "r"):
            g.add_argument(x, type=int)
    g = gsub.add_parser("abc")
    g.add_argument("base", choices=["A", "B", "C", "a", "b", "c"])
    g.add_argument("moves", nargs="*", help="'v' or 'e<id>'")
    for g in gsub.choices.values():
        g.add_argument("--embed", action="store_true", default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check", help="necessary conditions for a rational homology disk smoothing")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--isotropic-budget", type=int, default=ISOTROPIC_BUDGET)
    p.add_argument("--budget", type=int, default=None, help="search node budget")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("dual", help="dual of a star-shaped graph")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("enumerate", help="survey all small trees")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-weight", type=int, required=True)
    p.add_argument("--report", default=None, help="write the JSON report here")
    p.set_defaults(func=cmd_enumerate)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except EmbeddingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
