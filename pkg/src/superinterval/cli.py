"""Command-line front end.

Exit codes: 0 on success, 1 when an operation rejects its inputs (domain,
shape, type, parse errors), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import fuzzy
from .block import extended_product, gram, major_product, outer_product
from .carrierfile import read_carrier
from .errors import NoneFound, SuperIntervalError
from .lab import axioms, spans
from .lab.carrier import Budget
from .lab.maps import check_linear_map
from .matrix import TYPE_I, TYPE_II, add, hadamard, scalar_mul, transpose
from .partition import count_proper_partitions, enumerate_partitions
from .textio import read_matrix, render_matrix, to_json_obj


class UsageError(Exception):
    pass


def _emit_matrix(m, args):
    print(render_matrix(m, "json" if args.json else "text", args.decimals))


def _emit_report(rep, args):
    if args.json:
        print(json.dumps(rep.to_dict(), sort_keys=True))
    else:
        print(rep.to_text(args.decimals))


def _budget(args) -> Budget:
    kw = {"seed": args.seed}
    if args.samples is not None:
        kw["sample_count"] = args.samples
    if args.limit is not None:
        kw["exhaustive_limit"] = args.limit
    return Budget(**kw)


# -- matrix commands ------------------------------------------------------------


def cmd_binary(op):
    def run(args):
        _emit_matrix(op(read_matrix(args.a), read_matrix(args.b)), args)

    return run


def cmd_scalar_mul(args):
    a = read_matrix(args.a)
    s = a.domain.parse_value(args.by)
    _emit_matrix(scalar_mul(s, a, TYPE_II if args.type_ii else TYPE_I), args)


def cmd_transpose(args):
    _emit_matrix(transpose(read_matrix(args.a)), args)


def cmd_matmul(args):
    f = major_product if args.mode == "major" else extended_product
    _emit_matrix(f(read_matrix(args.a), read_matrix(args.b)), args)


def cmd_outer(args):
    _emit_matrix(outer_product(read_matrix(args.col), read_matrix(args.row)), args)


def cmd_gram(args):
    _emit_matrix(gram(read_matrix(args.a)), args)


def cmd_partitions(args):
    if args.m < 1 or args.n < 1:
        raise UsageError("dimensions must be positive")
    if args.count:
        n = count_proper_partitions(args.m, args.n) + (1 if args.include_trivial else 0)
        print(json.dumps({"count": n}) if args.json else n)
        return
    specs = enumerate_partitions(args.m, args.n, args.include_trivial)
    if args.json:
        print(json.dumps([{"dims": [p.rows, p.cols], "row_cuts": list(p.row_cuts), "col_cuts": list(p.col_cuts)} for p in specs]))
    else:
        for p in specs:
            print(f"{p.rows}x{p.cols} row_cuts={list(p.row_cuts)} col_cuts={list(p.col_cuts)}")


# -- structure lab -----------------------------------------------------------------

CHECKS = ("semigroup", "group", "semiring", "lattice", "strict", "ideal", "direct-sum", "linear-map")
FIND_KINDS = {
    "zero-divisors": axioms.ZERO_DIVISOR,
    "idempotents": axioms.IDEMPOTENT,
    "units": axioms.UNIT_PAIR,
    "additive-inverses": axioms.ADDITIVE_INVERSE,
}


def cmd_check(args):
    cf = read_carrier(args.carrier)
    b = _budget(args)
    c = cf.carrier
    if args.kind == "semigroup":
        rep = axioms.check_semigroup(c, b)
    elif args.kind == "group":
        rep = axioms.check_group(c, b)
    elif args.kind == "semiring":
        rep = axioms.check_semiring(c, b)
    elif args.kind == "lattice":
        rep = axioms.check_lattice(c, b)
    elif args.kind == "strict":
        rep = axioms.check_strictness(c, b, cf.seeds)
    elif args.kind == "ideal":
        rep = spans.check_ideal(cf.generators, c, b)
    elif args.kind == "direct-sum":
        if not cf.parts:
            raise UsageError("direct-sum needs [[parts]] tables in the carrier file")
        rep = spans.check_direct_sum(cf.parts, c, cf.action, b)
    else:
        if cf.map_rule is None:
            raise UsageError("linear-map needs a [map] table in the carrier file")
        rep = check_linear_map(cf.map_rule, c, cf.map_target, cf.action, b)
    _emit_report(rep, args)


def cmd_find(args):
    cf = read_carrier(args.carrier)
    seeds = cf.seeds if args.seeded else None
    if args.seeded and seeds is None:
        raise UsageError("--seeded needs 'seeds' in the carrier file")
    try:
        res = axioms.find_witnesses(cf.carrier, FIND_KINDS[args.kind], _budget(args), seeds, args.max)
    except NoneFound as exc:
        res = exc.search
    if args.json:
        print(json.dumps({
            "kind": res.kind,
            "verdict": res.verdict,
            "scanned": res.scanned,
            "witnesses": [[to_json_obj(m, args.decimals) for m in w] for w in res.witnesses],
        }, sort_keys=True))
        return
    print(f"{res.kind}: {res.verdict} ({len(res.witnesses)} found, {res.scanned} scanned)")
    for k, w in enumerate(res.witnesses, 1):
        print(f"witness {k}:")
        for m in w:
            for line in render_matrix(m, "text", args.decimals).splitlines()[1:]:
                print("    " + line)
            print("    ;")


def cmd_span(args):
    cf = read_carrier(args.carrier)
    if not cf.generators:
        raise UsageError("span needs 'generators' in the carrier file")
    res = spans.span(cf.generators, cf.action, _budget(args))
    if args.json:
        print(json.dumps({"complete": res.complete, "size": len(res), "note": res.note,
                          "elements": [to_json_obj(m, args.decimals) for m in res]}, sort_keys=True))
        return
    print(f"span: {len(res)} elements ({'complete' if res.complete else res.note})")
    for m in res:
        print(" ".join(render_matrix(m, "text", args.decimals).splitlines()[1:]))


def cmd_basis(args):
    cf = read_carrier(args.carrier)
    gs = spans.find_generating_set(cf.carrier, cf.action, _budget(args))
    if args.json:
        print(json.dumps({"carrier_size": gs.carrier_size, "dimension": gs.dimension,
                          "generators": [to_json_obj(m) for m in gs.generators]}, sort_keys=True))
        return
    print(f"carrier size: {gs.carrier_size}")
    print(f"generators: {gs.dimension}")
    for m in gs.generators:
        print(" ".join(render_matrix(m, "text", args.decimals).splitlines()[1:]))


# -- fuzzy ------------------------------------------------------------------------


def _eta_from(args, base=None) -> fuzzy.EtaMap:
    rule = args.eta or (base.rule if base else fuzzy.RECIPROCAL)
    ez = Fraction(args.eta_zero) if args.eta_zero is not None else (base.eta_zero if base else Fraction(1))
    if base is not None:
        return fuzzy.EtaMap(rule, ez, base.integer_value, base.fraction_value)
    return fuzzy.EtaMap(rule, ez)


def cmd_fuzzify(args):
    _emit_matrix(fuzzy.fuzzify(read_matrix(args.a), _eta_from(args)), args)


def cmd_fuzzy_scale(args):
    try:
        s = Fraction(args.by)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read scalar {args.by!r}") from None
    _emit_matrix(fuzzy.SCALAR_OPS[args.op](s, read_matrix(args.a)), args)


def cmd_audit_eta(args):
    cf = read_carrier(args.carrier)
    rep = fuzzy.audit_eta(_eta_from(args, cf.eta), cf.carrier, _budget(args))
    _emit_report(rep, args)


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--decimals", action="store_true", help="print terminating rationals as decimals")

    lab = argparse.ArgumentParser(add_help=False)
    lab.add_argument("--carrier", required=True, help="TOML carrier description")
    lab.add_argument("--seed", type=int, default=0)
    lab.add_argument("--samples", type=int, default=None)
    lab.add_argument("--limit", type=int, default=None, help="exhaustive search limit")

    p = argparse.ArgumentParser(prog="superinterval", description="Exact super interval matrix calculator.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, op, helptext in (
        ("add", add, "entrywise sum of two same-type matrices"),
        ("hadamard", hadamard, "entrywise product of two same-type matrices"),
        ("fuzzy-min", fuzzy.fuzzy_min, "entrywise min of two fuzzy matrices"),
        ("fuzzy-max", fuzzy.fuzzy_max, "entrywise max of two fuzzy matrices"),
    ):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("a")
        s.add_argument("b")
        s.set_defaults(func=cmd_binary(op))

    s = sub.add_parser("scalar-mul", parents=[common], help="scale every endpoint")
    s.add_argument("--by", required=True)
    s.add_argument("--type-ii", action="store_true", help="record the scalar as an interval [0,s]")
    s.add_argument("a")
    s.set_defaults(func=cmd_scalar_mul)

    s = sub.add_parser("transpose", parents=[common])
    s.add_argument("a")
    s.set_defaults(func=cmd_transpose)

    s = sub.add_parser("matmul", parents=[common], help="major (block) or extended product")
    s.add_argument("--mode", choices=("major", "extended"), default="major")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_matmul)

    s = sub.add_parser("outer", parents=[common], help="column times row")
    s.add_argument("col")
    s.add_argument("row")
    s.set_defaults(func=cmd_outer)

    s = sub.add_parser("gram", parents=[common], help="transpose(A) times A")
    s.add_argument("a")
    s.set_defaults(func=cmd_gram)

    s = sub.add_parser("partitions", parents=[common], help="count or list partitions of an m x n grid")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--count", action="store_true")
    g.add_argument("--list", action="store_true")
    s.add_argument("--include-trivial", action="store_true")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_partitions)

    s = sub.add_parser("check", parents=[common, lab], help="verify algebraic axioms on a carrier")
    s.add_argument("kind", choices=CHECKS)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("find", parents=[common, lab], help="search for witnesses")
    s.add_argument("kind", choices=tuple(FIND_KINDS))
    s.add_argument("--max", type=int, default=20, help="stop after this many witnesses")
    s.add_argument("--seeded", action="store_true", help="only try the carrier file's seeds as first component")
    s.set_defaults(func=cmd_find)

    s = sub.add_parser("span", parents=[common, lab], help="materialise the span of the generators")
    s.set_defaults(func=cmd_span)

    s = sub.add_parser("basis", parents=[common, lab], help="greedy generating set of a residue carrier")
    s.set_defaults(func=cmd_basis)

    s = sub.add_parser("fuzzify", parents=[common], help="map endpoints into [0,1]")
    s.add_argument("--eta", choices=(fuzzy.RECIPROCAL, fuzzy.CLASSES), default=None)
    s.add_argument("--eta-zero", default=None)
    s.add_argument("a")
    s.set_defaults(func=cmd_fuzzify)

    s = sub.add_parser("fuzzy-scale", parents=[common], help="min, max or product with a fuzzy scalar")
    s.add_argument("--op", choices=tuple(fuzzy.SCALAR_OPS), required=True)
    s.add_argument("--by", required=True)
    s.add_argument("a")
    s.set_defaults(func=cmd_fuzzy_scale)

    s = sub.add_parser("audit-eta", parents=[common, lab], help="test eta(a+b) >= min(eta(a), eta(b))")
    s.add_argument("--eta", choices=(fuzzy.RECIPROCAL, fuzzy.CLASSES), default=None)
    s.add_argument("--eta-zero", default=None)
    s.set_defaults(func=cmd_audit_eta)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"usage error: no such file: {exc.filename}", file=sys.stderr)
        return 2
    except SuperIntervalError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
