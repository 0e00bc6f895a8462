"""Command line front end.

Reads ideals from small text files, dispatches the pipeline stages, keeps
the per-(n, d) witness cache on disk, and writes artifacts to stdout or a
file.  Diagnostics go to stderr.  Exit codes: 0 success, 1 input error,
2 size guard exceeded, 3 oracle failure.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .driver import (compute_ugb, result_from_json, result_to_json,
                     staircase_key, staircase_sort_key)
from .errors import ParseError, SPairBudgetError, TooLargeError, UgbError
from .fields import parse_field
from .groebner import normal_form_table, rgb_from_polynomials
from .ideals import (LatticeBasis, TestSet, from_lattice, from_points,
                     lattice_minimize, lattice_test_set)
from .oracle import buchberger, plucker_dual, verify_result
from .orders import order_to_spec, parse_order_spec
from .polynomials import format_polynomial, parse_polynomial
from .staircases import (enumerate_staircases, format_vector, grlex_key,
                         parse_vector, staircase_union, table_support)
from .zonotope import all_chambers, positive_chambers, primitive_differences

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_GUARD = 2
EXIT_ORACLE = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; that code is reserved for guards
    def error(self, message):
        self.print_usage(sys.stderr)
        print("error: %s" % message, file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _read_lines(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read().splitlines()


def _content_lines(lines):
    return [s.strip() for s in lines if s.strip() and not s.lstrip().startswith("#")]


def _emit(args, text):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def read_basis_file(path):
    """Header "n d field order", then one polynomial per line."""
    lines = _content_lines(_read_lines(path))
    if not lines:
        raise ParseError("empty basis file %s" % path)
    head = lines[0].split(None, 3)
    if len(head) != 4:
        raise ParseError("basis header must be 'n d field order', got %r"
                         % lines[0])
    try:
        n, d = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("non-integer n or d in header %r" % lines[0])
    if n < 1 or d < 1:
        raise ParseError("n and d must be positive in header %r" % lines[0])
    field = parse_field(head[2])
    order = parse_order_spec(head[3], d)
    polys = [parse_polynomial(s, d, field) for s in lines[1:]]
    if not polys:
        raise ParseError("no polynomials in basis file %s" % path)
    return n, d, field, order, polys


def render_basis_file(basis):
    lines = ["%d %d %s %s" % (basis.n, basis.d, basis.field.name,
                              order_to_spec(basis.order))]
    lines.extend(format_polynomial(p) for p in basis.polynomials())
    return "\n".join(lines) + "\n"


def _load_result(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError("bad JSON in %s: %s" % (path, exc))
    try:
        return result_from_json(data)
    except (KeyError, TypeError) as exc:
        raise ParseError("malformed result file %s: missing %s" % (path, exc))


def _default_cache_dir():
    return os.path.join(os.path.expanduser("~"), ".cache", "ugb")


def _cache_path(cache_dir, n, d):
    return os.path.join(cache_dir, "orders_n%d_d%d.txt" % (n, d))


def _load_witnesses(path, n, d):
    try:
        lines = _read_lines(path)
    except OSError:
        return None
    if not lines or lines[0].strip() != format_vector((n, d)):
        return None
    try:
        ws = [parse_vector(s, d) for s in lines[1:] if s.strip()]
    except ParseError:
        return None
    return ws or None


def _store_witnesses(path, n, d, ws):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    body = "\n".join([format_vector((n, d))]
                     + [format_vector(w) for w in ws]) + "\n"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(body)


def _witness_list(args, n, d):
    """Disk-cached positive chamber witnesses; recompute on --no-cache or
    when the cache file is absent or stale."""
    path = _cache_path(args.cache_dir, n, d)
    if not args.no_cache:
        cached = _load_witnesses(path, n, d)
        if cached is not None:
            return cached
    ws = [c.witness for c in positive_chambers(n, d, args.max_chambers)]
    if not args.no_cache:
        _store_witnesses(path, n, d, ws)
    return ws


def _result_text(result):
    lines = ["n=%d d=%d field=%s" % (result.n, result.d, result.field.name)]
    lines.append("staircases (%d):" % len(result.initial_staircases))
    for s in result.staircases_sorted():
        lines.append("  " + staircase_key(s))
    lines.append("state_vertices: "
                 + " ".join(format_vector(v)
                            for v in sorted(result.state_vertices)))
    lines.append("ugb (%d):" % len(result.universal_basis))
    for p in result.universal_polynomials():
        lines.append("  " + format_polynomial(p))
    return "\n".join(lines) + "\n"


def cmd_ugb(args):
    n, d, field, order, polys = read_basis_file(args.input)
    if args.repair:
        basis = buchberger(polys, order, spair_budget=args.spair_budget)
    else:
        basis = rgb_from_polynomials(polys, order, field)
    if basis.n != n:
        raise ParseError("header claims n=%d but the basis has %d standard "
                         "monomials" % (n, basis.n))
    result = compute_ugb(basis, witnesses=_witness_list(args, n, d))
    if args.format == "json":
        text = json.dumps(result_to_json(result), indent=2,
                          sort_keys=True) + "\n"
    else:
        text = _result_text(result)
    _emit(args, text)
    return EXIT_OK


def cmd_staircases(args):
    stairs = sorted(enumerate_staircases(args.n, args.d,
                                         limit=args.max_staircases),
                    key=staircase_sort_key)
    _emit(args, "".join(staircase_key(s) + "\n" for s in stairs))
    return EXIT_OK


def cmd_vset(args):
    support = (table_support(args.n, args.d) if args.extended
               else staircase_union(args.n, args.d))
    _emit(args, "".join(format_vector(v) + "\n" for v in support))
    return EXIT_OK


def cmd_zonotope(args):
    dirset = primitive_differences(args.n, args.d)
    if args.all:
        chambers = all_chambers(args.n, args.d, args.max_chambers)
    else:
        chambers = positive_chambers(args.n, args.d, args.max_chambers)
    lines = ["directions: "
             + " ".join(format_vector(v) for v in dirset.generators)]
    for c in chambers:
        lines.append("w=%s h=%s signs=%s"
                     % (format_vector(c.witness), format_vector(c.vertex),
                        c.signs))
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_orders(args):
    ws = _witness_list(args, args.n, args.d)
    _emit(args, "".join(format_vector(w) + "\n" for w in ws))
    return EXIT_OK


def _read_points(path, field):
    rows = _content_lines(_read_lines(path))
    if not rows:
        raise ParseError("empty points file %s" % path)
    points = []
    width = None
    for row in rows:
        parts = [p.strip() for p in row.split(",")]
        if width is None:
            width = len(parts)
        elif len(parts) != width:
            raise ParseError("ragged points file: row %r has %d coordinates,"
                             " expected %d" % (row, len(parts), width))
        points.append(tuple(field.parse(p) for p in parts))
    return points


def cmd_from_points(args):
    field = parse_field(args.field)
    points = _read_points(args.input, field)
    order = parse_order_spec(args.order, len(points[0]))
    basis = from_points(points, order, field)
    _emit(args, render_basis_file(basis))
    return EXIT_OK


def _read_lattice(path):
    rows = _content_lines(_read_lines(path))
    if not rows:
        raise ParseError("empty lattice file %s" % path)
    d = len(rows)
    columns = []
    for row in rows:
        try:
            entries = tuple(int(p) for p in row.split())
        except ValueError:
            raise ParseError("non-integer lattice entry in row %r" % row)
        if len(entries) != d:
            raise ParseError("lattice file must be %d rows of %d integers"
                             % (d, d))
        columns.append(entries)
    return LatticeBasis(columns)


def cmd_from_lattice(args):
    lattice = _read_lattice(args.input)
    field = parse_field(args.field)
    order = parse_order_spec(args.order, lattice.d)
    basis = from_lattice(lattice, order, field)
    _emit(args, render_basis_file(basis))
    return EXIT_OK


def cmd_testset(args):
    result = _load_result(args.input)
    moves = lattice_test_set(result.universal_polynomials())
    _emit(args, "".join(format_vector(t) + "\n" for t in moves))
    return EXIT_OK


def _parse_rational_vector(text, d):
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = [p.strip() for p in body.split(",")]
    if len(parts) != d:
        raise ParseError("expected a %d-vector, got %r" % (d, text))
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise ParseError("bad rational vector %r" % text)


def cmd_minimize(args):
    rows = _content_lines(_read_lines(args.testset))
    if not rows:
        raise ParseError("empty test set file %s" % args.testset)
    d = len(rows[0].strip("()").split(","))
    moves = TestSet(parse_vector(s, d) for s in rows)
    x = parse_vector(args.point, d)
    w = _parse_rational_vector(args.weights, d)
    best = lattice_minimize(moves, x, w)
    _emit(args, format_vector(best) + "\n")
    return EXIT_OK


def cmd_verify(args):
    result = _load_result(args.input)
    reports = verify_result(result)
    lines = []
    failed = False
    for rep in reports:
        if rep.passed:
            lines.append("ok   %s" % rep.name)
        else:
            failed = True
            lines.append("FAIL %s: %s" % (rep.name, rep.detail))
    _emit(args, "\n".join(lines) + "\n")
    if failed:
        print("verification failed", file=sys.stderr)
        return EXIT_ORACLE
    return EXIT_OK


def cmd_plucker(args):
    n, d, field, order, polys = read_basis_file(args.input)
    basis = rgb_from_polynomials(polys, order, field)
    table = normal_form_table(basis)
    coords = plucker_dual(table)
    lines = []
    for subset in sorted(coords, key=lambda c: tuple(grlex_key(u)
                                                     for u in c)):
        key = " ".join(format_vector(u) for u in subset)
        lines.append("%s: %s" % (key, field.render(coords[subset])))
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="ugb",
                     description="Universal bases of zero-dimensional "
                                 "ideals by chamber enumeration.")
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="command")

    io = argparse.ArgumentParser(add_help=False)
    io.add_argument("--output", metavar="FILE",
                    help="write the artifact here instead of stdout")

    cache = argparse.ArgumentParser(add_help=False)
    cache.add_argument("--cache-dir", default=_default_cache_dir(),
                       metavar="DIR", help="witness cache directory")
    cache.add_argument("--no-cache", action="store_true",
                       help="ignore and do not write the witness cache")

    guards = argparse.ArgumentParser(add_help=False)
    guards.add_argument("--max-chambers", type=int, default=10 ** 6)
    guards.add_argument("--max-staircases", type=int, default=10 ** 6)
    guards.add_argument("--spair-budget", type=int, default=10 ** 4)

    p = sub.add_parser("ugb", parents=[io, cache, guards],
                       help="full pipeline on a reduced basis file")
    p.add_argument("input")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--repair", action="store_true",
                   help="complete raw generators to a reduced basis first")
    p.set_defaults(func=cmd_ugb)

    p = sub.add_parser("staircases", parents=[io, guards],
                       help="all staircases of the given size")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_staircases)

    p = sub.add_parser("vset", parents=[io],
                       help="union of all staircases of the given size")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--extended", action="store_true",
                   help="include the one-step upward shifts")
    p.set_defaults(func=cmd_vset)

    p = sub.add_parser("zonotope", parents=[io, guards],
                       help="direction set and arrangement chambers")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--all", action="store_true",
                   help="all chambers, not only the positive ones")
    p.set_defaults(func=cmd_zonotope)

    p = sub.add_parser("orders", parents=[io, cache, guards],
                       help="write and print the witness list")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_orders)

    ideal_opts = argparse.ArgumentParser(add_help=False)
    ideal_opts.add_argument("--order", required=True,
                            help="monomial order spec, e.g. lex:x2>x1")
    ideal_opts.add_argument("--field", default="Q",
                            help="Q or F<p> (default Q)")

    p = sub.add_parser("from-points", parents=[io, ideal_opts],
                       help="vanishing ideal of distinct points")
    p.add_argument("input", help="one point per line, comma separated")
    p.set_defaults(func=cmd_from_points)

    p = sub.add_parser("from-lattice", parents=[io, ideal_opts],
                       help="binomial ideal of a full-rank lattice")
    p.add_argument("input", help="d rows of d integers, one column per row")
    p.set_defaults(func=cmd_from_lattice)

    p = sub.add_parser("testset", parents=[io],
                       help="optimality certificate moves of a lattice run")
    p.add_argument("input", help="result JSON produced by the ugb command")
    p.set_defaults(func=cmd_testset)

    p = sub.add_parser("minimize", parents=[io],
                       help="walk a point to its fiber optimum")
    p.add_argument("testset", help="file of moves, one vector per line")
    p.add_argument("--point", required=True, metavar="VEC",
                   help="starting point, e.g. (3,4)")
    p.add_argument("--weights", required=True, metavar="VEC",
                   help="positive rational cost vector, e.g. (1,3/2)")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("verify", parents=[io],
                       help="independent cross-checks of a result JSON")
    p.add_argument("input")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plucker", parents=[io],
                       help="all maximal minors of the coefficient table")
    p.add_argument("input", help="reduced basis file")
    p.set_defaults(func=cmd_plucker)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TooLargeError, SPairBudgetError) as exc:
        print("guard exceeded: %s" % exc, file=sys.stderr)
        return EXIT_GUARD
    except UgbError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except (OSError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
