"""Command-line front end.

    signed-mahonian stats -r 3 "4^2,2^1,5^1,1,3^1"
    signed-mahonian sum -r 2 -n 2 star -e 1 --dmaj
    signed-mahonian closed bc -r 2 -n 2 -e -1 -h 1
    signed-mahonian verify t22 --r 2 --n 4
    signed-mahonian lift -r 3 "8,9,7,1,6,2,4,3,5"
    signed-mahonian list
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import formulas as F
from .cycring import QPolynomial
from .maps import algorithm_A, phi, star
from .perm import CharacterSpec, format_word, parse_entries, parse_permutation, parse_word, stats
from .sets import RestrictionSpec, dmaj_signed_sum, enumerate as enumerate_set, signed_mahonian_sum
from .verify import CATALOG, default_grid, verify_identity


def _emit_poly(p: QPolynomial, text: bool) -> None:
    print(p.to_text() if text else p.to_json())


def _w(args) -> tuple[int, ...]:
    if args.w is None:
        raise SystemExit("error: this identity needs -w")
    return tuple(v for v, _ in parse_entries(args.w))


def _need(args, *names) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise SystemExit("error: missing " + ", ".join("-" + m for m in missing))


def _spec(args) -> CharacterSpec:
    return CharacterSpec(args.e, args.h)


# id -> (required flags, builder)
CLOSED: dict[str, tuple[tuple[str, ...], Callable]] = {
    "gs": (("n",), lambda a: F.gessel_simion(a.n)),
    "agr": (("n",), lambda a: F.adin_gessel_roichman(a.n)),
    "bc": (("r", "n"), lambda a: F.biagioli_caselli(a.r, a.n, _spec(a))),
    "eq14": (("n", "k"), lambda a: F.caselli_sn(a.n, a.k)),
    "coset-fmaj": (("r", "n", "k"), lambda a: F.fmaj_coset(a.r, a.n, a.k)),
    "t22": (("r", "n", "k", "b"), lambda a: F.thm_main_coset(a.r, a.n, a.k, a.b, _spec(a))),
    "t24": (("r", "n", "k", "b"), lambda a: F.thm_UV(a.r, a.n, a.k, a.b, a.h)),
    "t26": (("r", "n", "k", "b"), lambda a: F.thm_main_II(a.r, a.n, a.k, a.b, a.h)),
    "t43": (("n", "k", "b"), lambda a: F.signed_quotient_r1(a.n, a.k, a.b)),
    "t32": (("r", "n", "word"), lambda a: F.thm_epsilon1_rhs(parse_word(a.word, a.r), a.r, a.n, a.h,
                                                             a.variant)),
    "t35": (("r", "n", "word"), lambda a: F.thm_main_III_rhs(parse_word(a.word, a.r), a.r, a.n, a.h,
                                                              a.variant)),
    "lem-insert": (("r", "k"), lambda a: F.lemma_insertion_rhs(a.k, a.r, a.h)),
    "t51": (("r",), lambda a: F.thm_main_I(_w(a), a.r, _spec(a))),
    "t61-fiber": (("r",), lambda a: F.thm_dmaj_fiber(_w(a), a.r, a.e)),
    "t61-group": (("r", "n"), lambda a: F.thm_dmaj_group(a.r, a.n, a.e)),
    "r7-halpha": (("r", "n", "alpha"), lambda a: F.remark7_H_alpha(
        a.r, a.n, tuple(v for v, _ in parse_entries(a.alpha)), a.h)),
    "f-closed": (("r",), lambda a: F.f_closed(a.r, a.h)),
    "f-sum": (("r",), lambda a: F.f_defining_sum(a.r, a.h)),
}


def cmd_stats(args) -> int:
    pi = parse_permutation(args.perm, args.r)
    st = stats(pi)
    if args.text:
        print(" ".join(f"{k}={v}" for k, v in st.items()))
    else:
        print(json.dumps(st, separators=(",", ":")))
    return 0


def _emit_perm(pi, text: bool) -> None:
    st = stats(pi)
    if text:
        print(format_word(pi), " ".join(f"{k}={v}" for k, v in st.items()))
    else:
        print(json.dumps({"perm": format_word(pi), **st}, separators=(",", ":")))


def cmd_lift(args) -> int:
    pi = algorithm_A(tuple(v for v, _ in parse_entries(args.w)), args.r)
    _emit_perm(star(pi) if args.star else pi, args.text)
    return 0


def cmd_phi(args) -> int:
    _emit_perm(phi(parse_permutation(args.perm, args.r), args.k, args.t), args.text)
    return 0


def cmd_sum(args) -> int:
    spec = RestrictionSpec.parse(args.restriction, args.r)
    members = enumerate_set(args.r, args.n, spec)
    if args.dmaj:
        if args.h:
            raise ValueError("the Dmaj sum carries no zeta twist; use -h 0")
        members = (pi for pi in members if sum(pi.colors) % args.r == 0)
        poly = dmaj_signed_sum(members, args.e)
    else:
        poly = signed_mahonian_sum(members, _spec(args))
    _emit_poly(poly, args.text)
    return 0


def cmd_closed(args) -> int:
    if args.id not in CLOSED:
        raise SystemExit(f"error: unknown closed form {args.id!r}; known: {', '.join(CLOSED)}")
    needed, build = CLOSED[args.id]
    _need(args, *needed)
    if args.r is None:
        args.r = 1
    _emit_poly(build(args), args.text)
    return 0


def parse_range(text: str | None) -> list[int] | None:
    """``"4"``, ``"1..4"`` or ``"1,3,5"``."""
    if text is None:
        return None
    if ".." in text:
        lo, hi = (int(x) for x in text.split(".."))
        return list(range(lo, hi + 1))
    return [int(x) for x in text.split(",")]


def cmd_verify(args) -> int:
    ids = list(CATALOG) if args.id == "all" else [args.id]
    for id in ids:
        if id not in CATALOG:
            raise SystemExit(f"error: unknown identity {id!r}; run 'list' for the catalog")
    grid = {"r": parse_range(args.r), "n": parse_range(args.n)}
    counts = {"pass": 0, "fail": 0, "skip": 0}
    for id in ids:
        for rep in verify_identity(id, grid, scale=args.scale):
            counts[rep.status] += 1
            if args.text:
                if rep.status != "pass" or not args.quiet:
                    params = " ".join(f"{k}={v}" for k, v in rep.params.items())
                    extra = f"  {rep.detail}" if rep.detail else ""
                    print(f"{rep.status.upper():4s} {rep.theorem} {params}{extra}")
            elif rep.status != "pass" or not args.quiet:
                print(rep.to_json(timing=args.timing))
    print(f"{counts['pass']} passed, {counts['fail']} failed, {counts['skip']} skipped",
          file=sys.stderr)
    return 1 if counts["fail"] else 0


def cmd_list(args) -> int:
    for id, ident in CATALOG.items():
        g = default_grid(id)
        kind = "pointwise" if ident.pointwise else "identity"
        closed = "closed" if id in CLOSED else "-"
        if args.text:
            print(f"{id:12s} {kind:9s} {closed:6s} r={g['r']} n={g['n']}  {ident.description}")
        else:
            print(json.dumps({"id": id, "kind": kind, "closed_form": id in CLOSED,
                              "description": ident.description, "default_grid": g},
                             separators=(",", ":")))
    return 0


def _help_flag(p: argparse.ArgumentParser) -> None:
    # -h is the character twist, so help is long-form only
    p.add_argument("--help", action="help", help="show this help message and exit")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="signed-mahonian",
                                     description="Signed Mahonian polynomials on colored permutation groups.")
    mode = argparse.ArgumentParser(add_help=False)
    g = mode.add_mutually_exclusive_group()
    g.add_argument("--json", dest="text", action="store_false", help="JSON output (default)")
    g.add_argument("--text", dest="text", action="store_true", help="human-readable output")
    mode.set_defaults(text=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[mode], help="statistics of one colored permutation")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("perm", help='window notation, e.g. "4^2,2^1,5^1,1,3^1"')
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("lift", parents=[mode], help="fmaj-minimal colored lift of a permutation")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("w", help='permutation, e.g. "8,9,7,1,6,2,4,3,5"')
    p.add_argument("--star", action="store_true", help="apply the star map to the lift")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("phi", parents=[mode], help="add t to the colors of the first k entries")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("perm")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("sum", parents=[mode], add_help=False, help="brute-force signed sum over a set")
    _help_flag(p)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("restriction", help="full | star | sub a:b | abs-sub a:b | fiber w | star-fiber w | "
                                       "coset k | word W")
    p.add_argument("-e", type=int, default=1, choices=(1, -1), help="epsilon")
    p.add_argument("-h", type=int, default=0, help="zeta exponent of the character")
    p.add_argument("--dmaj", action="store_true", help="sum eps^inv q^Dmaj over the G* members")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("closed", parents=[mode], add_help=False, help="expanded closed form")
    _help_flag(p)
    p.add_argument("id", help=", ".join(CLOSED))
    for flag in ("-r", "-n", "-k", "-b"):
        p.add_argument(flag, type=int)
    p.add_argument("-e", type=int, default=1, choices=(1, -1))
    p.add_argument("-h", type=int, default=0)
    p.add_argument("-w", help="permutation for fiber identities")
    p.add_argument("--alpha", help="word of distinct values")
    p.add_argument("--word", help="colored word W")
    p.add_argument("--variant", default="i", choices=("i", "ii"))
    p.set_defaults(func=cmd_closed)

    p = sub.add_parser("verify", parents=[mode], help="run verification over parameter grids")
    p.add_argument("id", help="identity id or 'all'")
    p.add_argument("--r", help="override r values: 2, 1..3 or 1,3")
    p.add_argument("--n", help="override n values")
    p.add_argument("--scale", type=int, default=0, help="extend default n ranges by this many values")
    p.add_argument("--timing", action="store_true", help="include elapsed seconds in JSON reports")
    p.add_argument("--quiet", action="store_true", help="print only failures and skips")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("list", parents=[mode], help="catalog of identities")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except F.PreconditionError as exc:
        print(f"error: precondition violated: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
