"""Command-line front end.

Exit status: 0 on success, 1 when a recomputed value disagrees with the
stored one (``examples``, ``deodhar``, ``pair --oracle``), 2 on input errors.
Errors are reported on stderr as ``{"error": code, "detail": ...}``.
"""
from __future__ import annotations

import argparse
import sys

from . import cases
from .coxeter import canonical_word, demazure_product
from .errors import InputError, NilHeckeError
from .forms import dumps, gram_matrix
from .hecke import deodhar_check
from .nhring import d_coefficient, oracle_delta_d
from .subexpr import EnumerationFilter, Expression, decorate, enumerate_subexpressions, parse_bits
from .sysfile import builtin_names, load_system

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        sys.stderr.write(dumps({"error": "usage", "detail": message}))
        raise SystemExit(EXIT_INPUT)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "text":
        sys.stdout.write(text.rstrip("\n") + "\n")
    else:
        sys.stdout.write(dumps(payload))


def _word(system, text: str) -> Expression:
    return Expression.parse(system, text)


def _x(system, text: str):
    return system.element(system.parse_word(text))


def cmd_demazure(args) -> int:
    system = load_system(args.system)
    w = _word(system, args.word)
    star = demazure_product(system, w.letters)
    word = system.format_word(canonical_word(star))
    payload = {"word": str(w), "demazure_product": word, "length": star.length}
    _emit(args, payload, f"{word or 'id'}\nlength {star.length}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    system = load_system(args.system)
    w = _word(system, args.word)
    x = _x(system, args.x)
    filt = EnumerationFilter(no_d1=args.no_d1, exact_defect=args.defect, max_defect=args.max_defect)
    found = enumerate_subexpressions(w, x, filt)
    rows = [{"bits": d.bitstring, "decorations": list(d.decorations), "defect": d.defect} for d in found]
    payload = {"word": str(w), "x": system.format_word(canonical_word(x)), "count": len(rows),
               "subexpressions": rows}
    text = "\n".join(f"{r['bits']}  {' '.join(r['decorations'])}  defect {r['defect']}" for r in rows)
    _emit(args, payload, text + f"\n{len(rows)} subexpression(s)")
    return EXIT_OK


def cmd_pair(args) -> int:
    system = load_system(args.system)
    w = _word(system, args.word)
    e1, e2 = parse_bits(args.bits1), parse_bits(args.bits2)
    value = d_coefficient(w, e1, e2)
    names = system.generator_names
    d1, d2 = decorate(w, e1), decorate(w, e2)
    payload = {
        "word": str(w),
        "bits1": args.bits1,
        "bits2": args.bits2,
        "x": system.format_word(canonical_word(d1.endpoint)),
        "defects": [d1.defect, d2.defect],
        "value": value.to_str(names),
    }
    text = value.to_str(names)
    status = EXIT_OK
    if args.oracle:
        oracle = oracle_delta_d(w, e1, e2)
        agree = oracle == value
        payload["oracle"] = {"value": oracle.to_str(names), "status": "PASS" if agree else "FAIL"}
        text += f"\noracle {oracle.to_str(names)} {'PASS' if agree else 'FAIL'}"
        if not agree:
            status = EXIT_MISMATCH
    _emit(args, payload, text)
    return status


def cmd_gram(args) -> int:
    system = load_system(args.system)
    w = _word(system, args.word)
    x = _x(system, args.x)
    filt = EnumerationFilter(no_d1=True, exact_defect=args.defect, max_defect=args.max_defect)
    report = gram_matrix(w, x, filt, jobs=args.jobs)
    payload = report.to_dict()
    lines = [f"basis ({len(report.basis)}, no-D1 only):"]
    lines += [f"  {d.bitstring}  {' '.join(d.decorations)}  defect {d.defect}" for d in report.basis]
    width = max([len(e) for e in payload["entries"] for e in e] + [1])
    lines += ["  " + " ".join(e.rjust(width) for e in row) for row in payload["entries"]]
    if report.constant_matrix is not None:
        lines.append(f"determinant {report.determinant}")
        lines.append(f"elementary divisors {report.elementary_divisors}")
        lines.append(f"torsion primes {report.torsion_primes}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_deodhar(args) -> int:
    system = load_system(args.system)
    report = deodhar_check(_word(system, args.word))
    _emit(args, report.to_dict(), ("PASS" if report.passed else "FAIL") + f" ({report.checked} elements)")
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_examples(args) -> int:
    names = args.names or list(cases.CASE_NAMES)
    for name in names:
        if name not in cases.CASE_NAMES:
            raise InputError(f"unknown example {name!r}; choose from {', '.join(cases.CASE_NAMES)}")
    results = [cases.run_case(name) for name in names]
    ok = all(r["status"] == "PASS" for r in results)
    lines = []
    for r in results:
        lines.append(f"{r['name']}: {r['status']}")
        for c in r["checks"]:
            mark = "ok " if c["ok"] else "BAD"
            lines.append(f"  [{mark}] {c['check']}: {c['actual']}")
    _emit(args, {"status": "PASS" if ok else "FAIL", "examples": results}, "\n".join(lines))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_systems(args) -> int:
    names = builtin_names()
    _emit(args, {"systems": names}, "\n".join(names))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = _Parser(prog="nilhecke", description="Intersection forms via the nil Hecke ring.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("demazure", parents=[common], help="Demazure product of a word")
    p.add_argument("system", help="system file or built-in name (see 'systems')")
    p.add_argument("word")
    p.set_defaults(func=cmd_demazure)

    p = sub.add_parser("enumerate", parents=[common], help="subexpressions with a given endpoint")
    p.add_argument("system")
    p.add_argument("word")
    p.add_argument("x", help="a word for the endpoint")
    p.add_argument("--no-d1", action="store_true")
    p.add_argument("--defect", type=int)
    p.add_argument("--max-defect", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("pair", parents=[common], help="the pairing d(e1, e2)")
    p.add_argument("system")
    p.add_argument("word")
    p.add_argument("bits1")
    p.add_argument("bits2")
    p.add_argument("--oracle", action="store_true", help="also evaluate in the delta basis and compare")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("gram", parents=[common], help="Gram matrix of no-D1 pairings at x")
    p.add_argument("system")
    p.add_argument("word")
    p.add_argument("x")
    p.add_argument("--defect", type=int)
    p.add_argument("--max-defect", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("deodhar", parents=[common], help="Hecke product vs. defect counts")
    p.add_argument("system")
    p.add_argument("word")
    p.set_defaults(func=cmd_deodhar)

    p = sub.add_parser("examples", parents=[common], help="recompute the stored reference examples")
    p.add_argument("names", nargs="*", metavar="name", help=", ".join(cases.CASE_NAMES))
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("systems", parents=[common], help="list built-in systems")
    p.set_defaults(func=cmd_systems)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NilHeckeError as exc:
        sys.stderr.write(dumps({"error": exc.code, "detail": str(exc.detail)}))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
