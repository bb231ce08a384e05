"""Command-line surface.

Subcommands: validate, delta, green, fdb-check, bell, checks.  All numeric
output is exact fraction strings; output is byte-identical across runs for a
fixed configuration and seed.  Exit status: 0 all requested checks pass,
1 mathematical mismatch, 2 input or configuration error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from .algebra import Monomial
from .bialgebra import (check_coassoc, check_counit_laws,
                        check_multiplicativity, delta_gen, segal_check)
from .errors import OperadError
from .green import (bell_oracle, c2_equivalence_check, fdb_check, green,
                    g_part)
from .library import BUILTINS, builtin
from .operad import local_finiteness_report, validate_operad
from .specfile import load_operad_file


def _make_parser():
    parser = argparse.ArgumentParser(
        prog="operad-fdb",
        description="incidence bialgebras of operads and the generalized "
                    "Faa di Bruno formula, in exact arithmetic")
    parser.add_argument("--operad", help="builtin operad name (%s)"
                        % ", ".join(sorted(BUILTINS)))
    parser.add_argument("--spec", help="path to an operad spec JSON file")
    parser.add_argument("--cap", type=int, default=5,
                        help="arity window cap (default 5)")
    parser.add_argument("--out", choices=("json", "csv", "text"),
                        default="text", help="output format")
    parser.add_argument("--output", help="write output to this path")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized property checks")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", help="check the operad axioms on the window")
    p_delta = sub.add_parser("delta", help="comultiplication of one generator")
    p_delta.add_argument("--class", dest="class_id", required=True,
                         help="generator class id, e.g. A_3")
    sub.add_parser("green", help="connected Green function table")
    sub.add_parser("fdb-check", help="verify Delta(G) = sum G^w (x) g_w")
    p_bell = sub.add_parser("bell", help="set-partition type counts")
    p_bell.add_argument("--n", type=int, required=True)
    sub.add_parser("checks", help="segal + c2 + coassociativity suite")
    return parser


def _load(args):
    if bool(args.operad) == bool(args.spec):
        raise OperadError("exactly one of --operad or --spec is required")
    if args.spec:
        return load_operad_file(args.spec)
    return builtin(args.operad, args.cap)


def _emit(args, text):
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _rows_to_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _cmd_validate(d, args):
    rep = validate_operad(d)
    fin = local_finiteness_report(d)
    ok = rep.ok and fin.ok
    if args.out == "json":
        payload = {"validate": rep.to_json_obj(),
                   "local_finiteness": fin.to_json_obj()}
        _emit(args, json.dumps(payload, indent=2, sort_keys=True))
    else:
        lines = [rep.summary()]
        lines += ["  " + f for f in rep.all_failures()]
        lines += ["warning: " + w for w in fin.warnings]
        _emit(args, "\n".join(lines))
    return 0 if ok else 1


def _cmd_delta(d, args):
    result = delta_gen(d, args.class_id)
    rows = [(x.label(), outer, str(c)) for x, outer, c in result.rows()]
    if args.out == "json":
        _emit(args, json.dumps(result.to_json_obj(), indent=2, sort_keys=True))
    elif args.out == "csv":
        _emit(args, _rows_to_csv(("inner", "outer", "coefficient"), rows))
    else:
        lines = ["delta(%s):" % args.class_id]
        lines += ["  %s (x) %s : %s" % r for r in rows]
        _emit(args, "\n".join(lines))
    return 0


def _cmd_green(d, args):
    gf = green(d)
    rows = [(m.label(), str(c)) for m, c in gf.series.items()]
    if args.out == "json":
        _emit(args, json.dumps(gf.series.to_json_obj(), indent=2))
    elif args.out == "csv":
        _emit(args, _rows_to_csv(("class", "coefficient"), rows))
    else:
        lines = ["connected Green function of %s:" % d.name]
        lines += ["  %s : %s" % r for r in rows]
        _emit(args, "\n".join(lines))
    return 0


def _cmd_fdb(d, args):
    report = fdb_check(d)
    if args.out == "json":
        _emit(args, json.dumps(report.to_json_obj(), indent=2))
    elif args.out == "csv":
        rows = [(e.inner.label(), e.outer.label(), str(e.lhs), str(e.rhs),
                 str(e.match).lower()) for e in report.entries]
        _emit(args, _rows_to_csv(("inner", "outer", "lhs", "rhs", "match"),
                                 rows))
    else:
        _emit(args, report.text_table())
    return 0 if report.verdict else 1


def _cmd_bell(args):
    n = args.n
    tables = {k: bell_oracle(n, k) for k in range(1, n + 1)}
    if args.out == "json":
        payload = {
            str(k): {"|".join(map(str, typ)): count
                     for typ, count in sorted(tbl.items())}
            for k, tbl in tables.items()
        }
        _emit(args, json.dumps(payload, indent=2, sort_keys=True))
    else:
        rows = []
        for k in range(1, n + 1):
            for typ, count in sorted(tables[k].items()):
                rows.append((str(k), "+".join(map(str, typ)), str(count)))
        if args.out == "csv":
            _emit(args, _rows_to_csv(("blocks", "type", "count"), rows))
        else:
            lines = ["partition type counts for n=%d:" % n]
            lines += ["  k=%s  type %s : %s" % r for r in rows]
            _emit(args, "\n".join(lines))
    return 0


def _random_groupoid_spotcheck(seed, rounds=25):
    """Small randomized orbit/stabilizer suite for the checks command."""
    from math import factorial as fact

    from . import perms
    from .groupoid import action_groupoid

    rng = random.Random(seed)
    failures = []
    for i in range(rounds):
        n = rng.randint(1, 4)
        gens = [rng.choice(perms.all_perms(n)) for _ in range(rng.randint(1, 2))]
        group = {perms.identity(n)}
        frontier = list(group)
        while frontier:
            g = frontier.pop()
            for h in gens:
                k = perms.pcomp(g, h)
                if k not in group:
                    group.add(k)
                    frontier.append(k)
        gpd = action_groupoid(tuple(range(n)), tuple(sorted(group)),
                              perms.pcomp, perms.identity(n),
                              act=lambda x, g: g[x])
        from fractions import Fraction
        if gpd.cardinality() != Fraction(n, len(group)):
            failures.append("round %d: |X|/|G| violated" % i)
        for comp in gpd.components():
            if len(comp) * gpd.aut_order(comp[0]) != len(group):
                failures.append("round %d: orbit-stabilizer violated" % i)
    return failures


def _cmd_checks(d, args):
    reports = [
        validate_operad(d),
        check_coassoc(d),
        check_counit_laws(d),
        check_multiplicativity(d),
        segal_check(d),
        c2_equivalence_check(d),
        local_finiteness_report(d),
    ]
    spot = _random_groupoid_spotcheck(args.seed)
    ok = all(r.ok for r in reports) and not spot
    if args.out == "json":
        payload = {
            "ok": ok,
            "seed": args.seed,
            "reports": [r.to_json_obj() for r in reports],
            "groupoid_spotcheck_failures": spot,
        }
        _emit(args, json.dumps(payload, indent=2, sort_keys=True))
    else:
        lines = []
        for r in reports:
            lines.append(r.summary() if hasattr(r, "summary")
                         else json.dumps(r.to_json_obj()))
        lines.append("groupoid spot-check (seed %d): %s"
                     % (args.seed, "ok" if not spot else "; ".join(spot)))
        _emit(args, "\n".join(lines))
    return 0 if ok else 1


def main(argv=None):
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "bell":
            return _cmd_bell(args)
        d = _load(args)
        if args.command == "validate":
            return _cmd_validate(d, args)
        if args.command == "delta":
            return _cmd_delta(d, args)
        if args.command == "green":
            return _cmd_green(d, args)
        if args.command == "fdb-check":
            return _cmd_fdb(d, args)
        if args.command == "checks":
            return _cmd_checks(d, args)
        raise OperadError("unknown command %r" % args.command)
    except OperadError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
