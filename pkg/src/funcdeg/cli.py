"""Command-line front end.

Exit status: 0 on success, 1 for invalid input (including tables of infinite
degree handed to ``interpolate``), 2 when two independent computations
disagree. Output is ``key: value`` lines, or one JSON record with ``--json``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds, calculus, groupring, polyfract, verify
from .errors import FuncDegError, InternalInconsistency
from .groups import parse_group


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _deg(x) -> int | str:
    return "INFINITE" if x == calculus.INFINITE else int(x)


def _emit(args, record: dict):
    if args.json:
        print(json.dumps(record, sort_keys=True))
        return
    for key, value in record.items():
        if key == "command":
            continue
        if isinstance(value, list):
            value = ",".join(map(str, value))
        print(f"{key}: {value}")


def cmd_fdeg(args) -> int:
    f = calculus.parse_table(_read(args.table))
    report = calculus.degree_report(f)
    record = {
        "command": "fdeg",
        "fdeg": _deg(report.fdeg),
        "pdeg": [_deg(x) for x in report.pdeg],
    }
    if report.fdeg == calculus.INFINITE:
        record["witness"] = list(calculus.classify(f).witness)
    _emit(args, record)
    return 0


def cmd_classify(args) -> int:
    f = calculus.parse_table(_read(args.table))
    c = calculus.classify(f)
    record = {"command": "classify", "verdict": "finite" if c.finite else "infinite", "primes": list(c.primes)}
    if c.finite:
        for p, comp in zip(c.primes, c.components):
            record[f"component {p}"] = (
                f"{comp.domain.spec()} -> {comp.codomain.spec()} fdeg {_deg(calculus.fdeg(comp))}"
            )
    else:
        record["witness"] = list(c.witness)
    _emit(args, record)
    return 0


def cmd_interpolate(args) -> int:
    f = calculus.parse_table(_read(args.table))
    pp = polyfract.interpolate_table(f)
    _write(polyfract.format_polyfract(pp.polyfract), args.output)
    return 0


def cmd_eval(args) -> int:
    p = polyfract.parse_polyfract(_read(args.polyfract))
    domain = parse_group(args.domain)
    if not polyfract.is_periodic(p, domain):
        print(f"warning: polyfract is not periodic on {domain.spec()}", file=sys.stderr)
    _write(calculus.format_table(polyfract.evaluate_table(p, domain)), args.output)
    return 0


def cmd_maxdeg(args) -> int:
    a, b = parse_group(args.domain), parse_group(args.codomain)
    v = bounds.max_degree_general(a, b)
    record = {"command": "maxdeg", "verdict": v.kind, "bound": v.cap}
    for pb in v.breakdown:
        record[f"prime {pb.p}"] = (
            f"alphas={','.join(map(str, pb.alphas))} betas={','.join(map(str, pb.betas))} bound={pb.bound}"
        )
    _emit(args, record)
    return 0


def _ints(text: str) -> tuple[int, ...]:
    from .errors import InvalidInput

    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise InvalidInput(f"expected comma-separated integers, got {text!r}") from None


def cmd_nilpotency(args) -> int:
    spec = bounds.PGroupSpec(args.p, _ints(args.alphas), (args.beta,))
    nu = bounds.nilpotency_degree(spec)
    record = {"command": "nilpotency", "nu": nu}
    status = 0
    if args.oracle:
        got = groupring.nilpotency_oracle(args.p**args.beta, spec.domain())
        record["oracle"] = got
        record["consistent"] = got == nu
        status = 0 if got == nu else 2
    _emit(args, record)
    return status


def cmd_verify(args) -> int:
    checks = verify.SUITES[args.suite]()
    failed = 0
    for c in checks:
        failed += not c.passed
        if args.json:
            print(json.dumps({"check": c.name, "passed": c.passed, "detail": c.detail}, sort_keys=True))
        else:
            print(f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}")
    if not args.json:
        print(f"summary: {len(checks) - failed}/{len(checks)} passed")
    return 2 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="funcdeg", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON record per result")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fdeg", parents=[common], help="functional and partial degrees of a table")
    p.add_argument("table")
    p.set_defaults(func=cmd_fdeg)

    p = sub.add_parser("classify", parents=[common], help="finite/infinite verdict and primary components")
    p.add_argument("table")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("interpolate", parents=[common], help="periodic polyfract of a finite-degree table")
    p.add_argument("table")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("eval", parents=[common], help="tabulate a polyfract on a finite domain")
    p.add_argument("polyfract")
    p.add_argument("--domain", required=True, help="periods, e.g. 4,3,5")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("maxdeg", parents=[common], help="largest finite degree of maps A -> B")
    p.add_argument("domain")
    p.add_argument("codomain")
    p.set_defaults(func=cmd_maxdeg)

    p = sub.add_parser("nilpotency", parents=[common], help="nilpotency degree of the augmentation ideal")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--alphas", required=True, help="e.g. 1,2")
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check in the group ring")
    p.set_defaults(func=cmd_nilpotency)

    p = sub.add_parser("verify", parents=[common], help="run a self-check suite")
    p.add_argument("suite", choices=sorted(verify.SUITES))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args)
    except InternalInconsistency as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FuncDegError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
