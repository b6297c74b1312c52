"""Command-line entry point.

Exit codes: 0 success, 1 usage or data error, 2 semantic negative
(verification failed, interpolation bound unmet).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from . import bounds, polymethod, search, sets
from .gf import field_make

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NEGATIVE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit2(message)


class SystemExit2(Exception):
    """Usage error carrying the message; mapped to exit code 1."""


def _write_out(payload, out_path):
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def cmd_construct(args):
    field = field_make(args.q)
    kset = sets.construct_variant(field, args.n, args.variant)
    _write_out(kset.to_dict(), args.out)
    return EXIT_OK


def cmd_verify(args):
    kset = sets.kakeya_set_from_dict(_load_json(args.infile))
    res = sets.verify(kset, threads=args.threads)
    if not res.ok:
        print(f"not a Kakeya set: no line in direction {list(res.failing_direction)}")
        return EXIT_NEGATIVE
    print(f"Kakeya set confirmed: {kset.size} points, "
          f"{len(res.witnesses)} directions covered")
    if args.witnesses:
        payload = {
            "format": 1,
            "q": kset.field.q,
            "n": kset.n,
            "witnesses": [[list(b), list(a)] for b, a in sorted(res.witnesses.items())],
        }
        _write_out(payload, args.witnesses)
    return EXIT_OK


def _bound_rows(args):
    if args.optimize:
        m, rep = bounds.best_m(args.n, args.q, args.m_cap)
        return [rep]
    return [bounds.lemma_bound(args.n, args.q, args.m)]


def cmd_bound(args):
    if args.m is None and not args.optimize:
        raise SystemExit2("bound requires --m or --optimize")
    rows = _bound_rows(args)
    if args.csv:
        w = csv.writer(sys.stdout)
        w.writerow(["q", "n", "m", "N", "denom", "bound_ceiling"])
        for r in rows:
            w.writerow([r.q, r.n, r.m, r.N, r.denom, r.bound_ceiling])
    elif args.json:
        payload = [
            {
                "q": r.q, "n": r.n, "m": r.m, "N": r.N, "denom": r.denom,
                "bound": [r.bound.numerator, r.bound.denominator],
                "bound_ceiling": r.bound_ceiling,
            }
            for r in rows
        ]
        _write_out(payload if len(payload) > 1 else payload[0], None)
    else:
        for r in rows:
            print(f"q={r.q} n={r.n} m={r.m}: |K| >= {r.N}/{r.denom} "
                  f"= {float(r.bound):.4f} (ceiling {r.bound_ceiling})")
    return EXIT_OK


def cmd_vanish(args):
    field_q, n, points = _load_points(args.points)
    if field_q.q != args.q or n != args.n:
        raise SystemExit2("--q/--n disagree with the points file")
    try:
        g = polymethod.find_vanishing_poly(field_q, points, args.m)
    except polymethod.BoundNotSatisfiedError as exc:
        print(f"bound not satisfied: {exc.constraints} constraints vs "
              f"{exc.unknowns} unknowns", file=sys.stderr)
        return EXIT_NEGATIVE
    _write_out(g.to_dict(), args.out)
    return EXIT_OK


def _load_points(path):
    from .space import points_from_dict

    return points_from_dict(_load_json(path))


def cmd_minsearch(args):
    if args.n != 2:
        raise SystemExit2("exact search supports --n 2 only")
    field = field_make(args.q)
    size, witness = search.min_kakeya(field, 2)
    print(f"minimum Kakeya size in F_{args.q}^2: {size}")
    if args.out:
        _write_out(witness.to_dict(), args.out)
    return EXIT_OK


def cmd_asym(args):
    rep = bounds.c_alpha(args.alpha, args.n_probe)
    print(f"alpha={rep.alpha} n_probe={rep.n_probe}")
    print(f"tau estimate        : {rep.tau:.6f}")
    print(f"entropy factor      : {rep.entropy_factor:.6f}")
    print(f"c_alpha estimate    : {rep.c_alpha:.6f}  (~1/{1/rep.c_alpha:.3f})")
    print("ladder (n, tau, c):")
    for n, tau, c in rep.ladder:
        print(f"  n={n:4d}  tau={tau:.6f}  c={c:.6f}")
    return EXIT_OK


def cmd_report(args):
    print("== preset lower bounds ==")
    print("c1=1/4 preset (m=n):      |K| >= q^n / C(2n-1,n) >= (q/4)^n")
    for n in (2, 3, 4):
        for q in (5, 9, 31):
            rep = bounds.lemma_bound(n, q, n)
            ok = rep.bound >= Fraction(q, 4) ** n
            print(f"  q={q:3d} n={n}: bound={float(rep.bound):12.2f} "
                  f" (q/4)^n={float(Fraction(q,4)**n):12.2f}  ok={ok}")
    print("c1=1/2.6 preset (m=ceil(n/2)): |K| >= 1/2 (q/2.6)^n")
    for n in (2, 3, 4):
        for q in (5, 9, 31):
            m = (n + 1) // 2
            rep = bounds.lemma_bound(n, q, m)
            target = 0.5 * (q / 2.6) ** n
            print(f"  q={q:3d} n={n} m={m}: bound={float(rep.bound):12.2f} "
                  f" target={target:12.2f}  ok={float(rep.bound) >= target - 1e-9}")
    print("== n=3: 5/24·q³ check (m=2) ==")
    for q in (3, 5, 7, 11, 101):
        rep = bounds.lemma_bound(3, q, 2)
        ok = rep.bound >= Fraction(5, 24) * q**3
        print(f"  q={q:3d}: bound={float(rep.bound):12.2f} "
              f" 5/24 q^3={float(Fraction(5,24)*q**3):12.2f}  ok={ok}")
    print("== construction sizes vs leading term 2^-(n-1) q^n ==")
    for q, variant in ((3, "odd"), (5, "odd"), (9, "odd"),
                       (2, "even"), (4, "even"), (8, "even")):
        field = field_make(q)
        for n in (2, 3):
            rep = sets.upper_bound_size(field, n, variant)
            print(f"  q={q} n={n} {variant:5s}: exact={rep.exact:5d} "
                  f" leading={float(rep.leading_term):9.2f} "
                  f" C={float(rep.c_coefficient):6.3f}")
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="kakeya", description=__doc__)
    parser.add_argument(
        "--threads", type=int,
        default=int(os.environ.get("KAKEYA_THREADS", "1")),
        help="worker cap for verification (default: KAKEYA_THREADS or 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a Kakeya set")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", choices=sets.VARIANTS, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check the Kakeya property")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--witnesses")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="certified lower bound")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--optimize", action="store_true")
    p.add_argument("--m-cap", type=int, default=8)
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("vanish", help="vanishing polynomial for a point set")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--points", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_vanish)

    p = sub.add_parser("minsearch", help="exact minimum in the plane")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--out")
    p.set_defaults(func=cmd_minsearch)

    p = sub.add_parser("asym", help="asymptotic constant probe")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--n-probe", type=int, default=64)
    p.set_defaults(func=cmd_asym)

    p = sub.add_parser("report", help="summary table of bounds and sizes")
    p.set_defaults(func=cmd_report)

    return parser


def dispatch(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
