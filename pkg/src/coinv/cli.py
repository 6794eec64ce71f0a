"""Command-line front end.

Subcommands: basis, hilbert, frobenius, bijection, hook, hmu, verify,
oracle.  All computation is deterministic, so output is byte-stable for a
fixed invocation regardless of --jobs.  Exit codes: 0 success, 1
verification failure, 2 invalid input.
"""

import argparse
import csv
import io
import json
import sys

from . import basis, oracle, smirnov, symfun, verify
from .combinat import Partition


def _fail(message):
    print(message, file=sys.stderr)
    return 2


def _print_rows(rows, header, fmt):
    """Emit a table as csv, json or aligned text."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    elif fmt == "json":
        print(json.dumps([dict(zip(header, row)) for row in rows], indent=2))
    else:
        widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h))
                  for i, h in enumerate(header)]
        print("  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip())
        for row in rows:
            print("  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip())


def cmd_basis(args):
    elements = basis.enumerate_basis(args.n, args.variant)
    if args.format == "json":
        print(json.dumps([b.to_json() for b in elements], indent=2))
    elif args.format == "csv":
        rows = [(b.monomial_str(), b.deg_x, b.deg_theta, b.deg_xi) for b in elements]
        _print_rows(rows, ("monomial", "deg_x", "deg_theta", "deg_xi"), "csv")
    else:
        for b in elements:
            print(b.monomial_str())
    return 0


def cmd_hilbert(args):
    poly = basis.hilbert_series(args.n, args.variant)
    if args.format == "json":
        print(json.dumps(poly.to_json(), indent=2))
    elif args.format == "latex":
        print(poly.latex())
    elif args.format == "csv":
        rows = [(a, b, c, coeff) for (a, b, c), coeff in poly.sorted_terms()]
        _print_rows(rows, ("q", "u", "v", "coeff"), "csv")
    else:
        print(str(poly))
    return 0


def cmd_frobenius(args):
    qsym = symfun.frobenius_qsym(args.n, k=args.k, l=args.l)
    if args.form == "qsym":
        if args.format == "json":
            print(json.dumps(qsym.to_json(), indent=2))
        elif args.format == "csv":
            rows = [("{%s}" % ",".join(str(e) for e in s.elements), str(c))
                    for s, c in qsym.sorted_items()]
            _print_rows(rows, ("subset", "coeff"), "csv")
        elif args.format == "latex":
            pieces = ["\\left(%s\\right) Q_{\\{%s\\},%d}"
                      % (c.latex(), ",".join(str(e) for e in s.elements), args.n)
                      for s, c in qsym.sorted_items()]
            print(" + ".join(pieces) if pieces else "0")
        else:
            for subset, coeff in qsym.sorted_items():
                print("%s: %s" % (subset, coeff))
        return 0
    schur = symfun.schur_expansion(qsym)
    if args.format == "json":
        print(json.dumps(schur.to_json(), indent=2))
    elif args.format == "latex":
        print(schur.latex())
    elif args.format == "csv":
        rows = [(str(p), str(c)) for p, c in schur.sorted_items()]
        _print_rows(rows, ("partition", "coeff"), "csv")
    else:
        for partition, coeff in schur.sorted_items():
            print("s[%s]: %s" % (partition, coeff))
    return 0


def bijection_rows(n):
    """The conversion table, grouped by bar pattern (bitmask order) and
    ordered by the underlying permutation within each group."""
    rows = []
    for b in basis.enumerate_basis(n, "a12"):
        word = smirnov.psi(b)
        k, l = smirnov.ascent_descent_counts(word)
        split = smirnov.split_positions(word)
        rows.append(
            (
                smirnov.format_word(word),
                b.monomial_str(),
                k,
                l,
                smirnov.sminv(word),
                "{%s}" % ",".join(str(s) for s in split),
                _splits_mask(word.splits),
                word.letters,
            )
        )
    rows.sort(key=lambda r: (r[6], r[7]))
    return [r[:6] for r in rows]


def _splits_mask(splits):
    mask = 0
    for s in splits:
        mask |= 1 << (s - 1)
    return mask


def cmd_bijection(args):
    rows = bijection_rows(args.n)
    _print_rows(rows, ("sigma", "basis_element", "k", "l", "sminv", "split"), args.format)
    return 0


def cmd_hook(args):
    rows = []
    ds = [args.d] if args.d is not None else range(args.n)
    for d in ds:
        ks = [args.k] if args.k is not None else range(args.n)
        for k in ks:
            ls = [args.l] if args.l is not None else range(args.n - k)
            for l in ls:
                if k + l >= args.n:
                    continue
                enum = symfun.hook_schur_coefficient(args.n, k, l, d)
                closed = symfun.hook_qbinomial_formula(args.n, k, l, d)
                rows.append((d, k, l, str(enum), str(closed), enum == closed))
    _print_rows(rows, ("d", "k", "l", "enumeration", "q_binomial_form", "equal"), args.format)
    return 0 if all(r[5] for r in rows) else 1


def cmd_hmu(args):
    try:
        parts = tuple(int(p) for p in args.mu.split(",") if p)
        mu = Partition(parts)
    except ValueError as exc:
        return _fail("invalid --mu: %s" % exc)
    if mu.n != args.n:
        return _fail("--mu must be a partition of n=%d" % args.n)
    rows = []
    ks = [args.k] if args.k is not None else range(args.n)
    for k in ks:
        ls = [args.l] if args.l is not None else range(args.n - k)
        for l in ls:
            if k + l >= args.n:
                continue
            rows.append((k, l, str(symfun.h_mu_coefficient(args.n, k, l, mu))))
    _print_rows(rows, ("k", "l", "coefficient"), args.format)
    return 0


def cmd_verify(args):
    return verify.run_all(args.n)


def cmd_oracle(args):
    kind = "a" if args.variant in ("a12", "a11", "a02") else "b"
    if kind == "a" and args.n >= 4 and not args.long:
        return _fail("the n >= 4 type A oracle run is long; pass --long to enable it")
    if kind == "b" and args.n >= 3 and not args.long:
        return _fail("the n >= 3 type B oracle run is long; pass --long to enable it")
    poly, complete, report = oracle.hilbert_via_oracle(
        args.n, kind, max_x_degree=args.max_x_degree, jobs=args.jobs
    )
    if args.format == "json":
        print(json.dumps({
            "hilbert": poly.to_json(),
            "complete": complete,
            "pieces": report,
        }, indent=2))
    else:
        print("Hilbert series: %s" % poly)
        print("complete: %s" % complete)
        for row in report:
            if row["quotient"]:
                print("degree %r: ambient %d, ideal rank %d, quotient %d"
                      % (tuple(row["degree"]), row["ambient"], row["ideal_rank"], row["quotient"]))
    expected = basis.hilbert_series(args.n, "a12" if kind == "a" else "b12")
    if not complete or poly != expected:
        print("MISMATCH against the conjectural series: %s" % expected, file=sys.stderr)
        return 1
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="coinv", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, variant=True):
        p.add_argument("--n", type=int, required=True)
        if variant:
            p.add_argument("--variant", choices=basis.VARIANTS, default="a12")
        p.add_argument("--format", choices=("text", "json", "csv", "latex"), default="text")
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("basis", help="list the basis elements")
    common(p)
    p.set_defaults(run=cmd_basis)

    p = sub.add_parser("hilbert", help="the trigraded Hilbert series")
    common(p)
    p.set_defaults(run=cmd_hilbert)

    p = sub.add_parser("frobenius", help="the conjectural Frobenius series")
    common(p, variant=False)
    p.add_argument("--form", choices=("qsym", "schur"), default="schur")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.set_defaults(run=cmd_frobenius)

    p = sub.add_parser("bijection", help="the basis <-> segmented permutation table")
    common(p, variant=False)
    p.set_defaults(run=cmd_bijection)

    p = sub.add_parser("hook", help="hook Schur coefficients, both routes")
    common(p, variant=False)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.set_defaults(run=cmd_hook)

    p = sub.add_parser("hmu", help="h_mu coefficients of the Frobenius series")
    common(p, variant=False)
    p.add_argument("--mu", required=True, help='partition of n, e.g. "2,1"')
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.set_defaults(run=cmd_hmu)

    p = sub.add_parser("verify", help="run the exhaustive cross-check suite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("oracle", help="quotient dimensions by exact linear algebra")
    common(p)
    p.add_argument("--max-x-degree", type=int, default=None)
    p.add_argument("--long", action="store_true", help="allow the long n=4 type A run")
    p.set_defaults(run=cmd_oracle)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n < 1:
        return _fail("--n must be at least 1")
    try:
        return args.run(args)
    except (ValueError, RuntimeError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
