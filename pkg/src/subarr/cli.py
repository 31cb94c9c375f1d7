"""Command line interface.

    subarr poincare FILE
    subarr triple FILE [--pivot NAME]
    subarr lattice FILE
    subarr verify FILE
    subarr oracle-compare FILE

Exit status: 0 success, 1 a check failed, 2 bad input.
"""

import argparse
import json
import sys

from .arrangement import ArrangementError
from .checks import separators, verify_arrangement
from .cohomology import betti, euler, poincare
from .deletion_restriction import les_report
from .io import ArrangementFileError, load_arrangement
from .lattice import build_lattice, is_geometric
from .model import DEFAULT_MAX_SIZE, ComplexTooLarge, build_complex
from .oracle import DEFAULT_ORACLE_GATE, OracleTooLarge, gm_poincare

SCHEMA = "subarr.report/1"

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _emit(args, payload: dict, lines):
    if args.json:
        doc = {"schema": SCHEMA, "command": args.command}
        doc.update(payload)
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def cmd_poincare(args, fam) -> int:
    C = build_complex(fam, args.max_size or DEFAULT_MAX_SIZE)
    P = poincare(C)
    b = betti(C)
    chi = euler(P)
    lines = [f"Poin(M(A), t) = {P}", "degree  betti"]
    lines += [f"{q:>6}  {b[q]}" for q in sorted(b)]
    lines.append(f"chi = {chi}")
    _emit(args, {"poincare": str(P), "betti": P.to_dict(), "euler": chi}, lines)
    return EXIT_OK


def _triple_lines(rep):
    yn = {True: "yes", False: "no"}
    lines = [f"pivot: {rep.pivot_name}  (deg = {rep.degree_shift})",
             f"  Poin(A)   = {rep.poincare_A}",
             f"  Poin(A')  = {rep.poincare_Adel}",
             f"  Poin(A'') = {rep.poincare_Ares}",
             f"  separator: {yn[rep.separator]}",
             f"  PP: {yn[rep.pp_holds]}",
             f"  LES: {'exact' if rep.les_exact else 'NOT EXACT'}"]
    if rep.connecting_ranks:
        for p, r in sorted(rep.connecting_ranks.items()):
            lines.append(f"  connecting map H^{p}(A'') -> H^{p + rep.degree_shift + 1}(A'): rank {r}")
    else:
        lines.append("  connecting maps: all zero")
    lines.append(f"  deficit Poin(A') + t^{rep.degree_shift} Poin(A'') - Poin(A) = {rep.deficit}")
    lines.extend(f"  failure: {f}" for f in rep.failures)
    return lines


def cmd_triple(args, fam) -> int:
    if len(fam) < 2:
        raise InputError("triple needs an arrangement with at least two members")
    if args.pivot is None:
        pivots = list(range(len(fam)))
    else:
        try:
            pivots = [fam.index(args.pivot)]
        except KeyError:
            raise InputError(f"unknown pivot {args.pivot!r}; members are {', '.join(fam.names)}")
    reports = [les_report(fam, i, args.max_size or DEFAULT_MAX_SIZE) for i in pivots]
    lines = []
    for rep in reports:
        lines.extend(_triple_lines(rep))
    _emit(args, {"triples": [r.to_dict() for r in reports]}, lines)
    ok = all(r.les_exact and r.quasi_isomorphisms for r in reports)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_lattice(args, fam) -> int:
    lat = build_lattice(fam)
    names = {k: fam.members[j].name for j, k in enumerate(lat.member_index)}

    def label(k):
        if k == 0:
            return "ambient"
        if k in names:
            return names[k]
        return "&".join(fam.members[j].name for j in range(len(fam))
                        if lat.leq[lat.member_index[j]][k]) or f"e{k}"

    geometric = is_geometric(lat)
    seps = separators(fam)
    elements = [{"index": k, "label": label(k), "codim": lat.codim(k), "rank": lat.rank[k],
                 "covers": list(lat.covers[k])} for k in range(len(lat))]
    lines = [f"{len(lat)} elements"]
    for e in elements:
        cov = ", ".join(str(c) for c in e["covers"]) or "-"
        lines.append(f"  [{e['index']}] {e['label']}  codim {e['codim']}  rank {e['rank']}  covers {cov}")
    lines.append(f"geometric: {'yes' if geometric else 'no'}")
    lines.append(f"separators: {', '.join(seps) if seps else 'none'}")
    _emit(args, {"elements": elements, "geometric": geometric, "separators": seps}, lines)
    return EXIT_OK


def cmd_verify(args, fam) -> int:
    results = verify_arrangement(fam, args.max_size or DEFAULT_MAX_SIZE)
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in results]
    passed = all(ok for _, ok in results)
    lines.append("all checks passed" if passed else "SOME CHECKS FAILED")
    _emit(args, {"checks": [{"name": n, "passed": ok} for n, ok in results], "passed": passed},
          lines)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_oracle_compare(args, fam) -> int:
    gate = args.max_size or DEFAULT_ORACLE_GATE
    oracle = gm_poincare(fam, gate)
    model = poincare(fam)
    match = oracle == model
    lines = [f"model : {model}", f"oracle: {oracle}", "MATCH" if match else "MISMATCH"]
    _emit(args, {"model": str(model), "oracle": str(oracle), "match": match}, lines)
    return EXIT_OK if match else EXIT_FAIL


COMMANDS = {
    "poincare": cmd_poincare,
    "triple": cmd_triple,
    "lattice": cmd_lattice,
    "verify": cmd_verify,
    "oracle-compare": cmd_oracle_compare,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="arrangement JSON file")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--family", action="store_true",
                        help="allow members contained in other members")
    common.add_argument("--max-size", type=int, default=None, metavar="N",
                        help=f"member cap (default {DEFAULT_MAX_SIZE}; "
                             f"{DEFAULT_ORACLE_GATE} for oracle-compare)")
    parser = argparse.ArgumentParser(prog="subarr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("poincare", parents=[common], help="Poincare polynomial and Betti numbers")
    p = sub.add_parser("triple", parents=[common], help="deletion-restriction report")
    p.add_argument("--pivot", metavar="NAME", help="member to delete/restrict at (default: all)")
    sub.add_parser("lattice", parents=[common], help="intersection lattice")
    sub.add_parser("verify", parents=[common], help="run every consistency check")
    sub.add_parser("oracle-compare", parents=[common], help="model vs order-complex oracle")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        fam = load_arrangement(args.file, family=args.family)
        return COMMANDS[args.command](args, fam)
    except (ArrangementFileError, ArrangementError, InputError, ComplexTooLarge,
            OracleTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
