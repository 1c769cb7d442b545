"""Command-line front end.

    kfsusy verify --k 3 --suite all
    kfsusy spectrum --k 3 --levels 4 --format json
    kfsusy coherent --k 4 --z 0.7,0.4
    kfsusy quon-limit --k 3 --epsilons 1e-2,1e-3,1e-4

Exit codes: 0 when every executed check passes, 1 when any fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .coherent import TailTooLargeError, coherent_suite
from .fracsusy import build_all, spectrum, verify_susy, verify_weyl_heisenberg
from .grassmann import GrassmannAlgebra, integrate, verify_realization
from .kfermion import verify_fk_relations
from .qnum import DEFAULT_TOL
from .quon import DEFAULT_EPSILONS, limit_study
from .reports import CheckReport

K_MIN, K_MAX = 2, 12
K_SWEEP = range(2, 7)
SUITES = ("algebra", "grassmann", "coherent", "susy")


class UsageError(Exception):
    pass


def parse_k(text: str, allow_all: bool) -> list[int]:
    if allow_all and text == "all":
        return list(K_SWEEP)
    try:
        k = int(text)
    except ValueError:
        raise UsageError(f"--k must be an integer{' or all' if allow_all else ''}, got {text!r}")
    if not K_MIN <= k <= K_MAX:
        raise UsageError(f"--k must lie in {K_MIN}..{K_MAX}, got {k}")
    return [k]


def parse_complex(text: str) -> complex:
    try:
        re_, im = (float(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--z expects 're,im', got {text!r}")
    return complex(re_, im)


def parse_epsilons(text: str) -> list[float]:
    try:
        eps = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--epsilons expects comma-separated numbers, got {text!r}")
    if not eps or any(not 0 < e < 0.5 for e in eps):
        raise UsageError("every epsilon must lie in (0, 0.5)")
    return eps


def cutoff_for(k: int, requested: int | None, extra: int = 0) -> int:
    if requested is None:
        return max(24, 2 * k + 2, 2 * k + 2 + extra)
    if requested < k + 3:
        raise UsageError(f"--boson-cutoff must be >= k + 3 = {k + 3}, got {requested}")
    return requested


def grassmann_suite(k: int, tol: float) -> CheckReport:
    rep = verify_realization(k, tol)
    if k == 2:
        alg = GrassmannAlgebra.one_variable(2)
        rep.expect_small("int dth 1 = 0", abs(integrate(alg.one(), "theta").scalar_part()), tol)
        rep.expect_small("int dth th = 1", abs(integrate(alg.gen("theta"), "theta").scalar_part() - 1), tol)
    return rep


def susy_suite(k: int, cutoff: int, tol: float) -> CheckReport:
    ops = build_all(k, cutoff)
    rep = CheckReport(f"susy k={k}")
    rep.extend(verify_weyl_heisenberg(k, tol=tol, ops=ops))
    rep.extend(verify_susy(k, tol=tol, ops=ops))
    return rep


def run_suites(k: int, suites, cutoff: int, tol: float) -> list[CheckReport]:
    out = []
    for suite in suites:
        if suite == "algebra":
            out.append(verify_fk_relations(k, tol))
        elif suite == "grassmann":
            out.append(grassmann_suite(k, tol))
        elif suite == "coherent":
            out.append(coherent_suite(k, cutoff=cutoff, tol=tol))
        elif suite == "susy":
            out.append(susy_suite(k, cutoff, tol))
    return out


def emit(payload: dict, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_verify(args) -> int:
    ks = parse_k(args.k, allow_all=True)
    suites = SUITES if args.suite == "all" else (args.suite,)
    reports = []
    for k in ks:
        reports += run_suites(k, suites, cutoff_for(k, args.boson_cutoff), args.tol)
    passed = all(r.passed for r in reports)
    emit({"passed": passed, "reports": [r.to_dict() for r in reports]},
         "\n".join(r.format_table() for r in reports) + f"\nOVERALL: {'PASS' if passed else 'FAIL'}",
         args.format)
    return 0 if passed else 1


def cmd_spectrum(args) -> int:
    (k,) = parse_k(args.k, allow_all=False)
    if args.levels < 1:
        raise UsageError("--levels must be >= 1")
    cutoff = cutoff_for(k, args.boson_cutoff, extra=args.levels)
    rep = spectrum(k, cutoff)
    if len(rep.levels) < args.levels:
        raise UsageError(f"only {len(rep.levels)} complete levels at cutoff {cutoff}; raise --boson-cutoff")
    rep = rep.head(args.levels)
    emit(rep.to_dict(), rep.format_table(), args.format)
    return 0


def cmd_coherent(args) -> int:
    ks = parse_k(args.k, allow_all=True)
    z = parse_complex(args.z)
    reports = []
    for k in ks:
        cutoff = args.boson_cutoff if args.boson_cutoff is not None else 24
        if cutoff < k + 3:
            raise UsageError(f"--boson-cutoff must be >= k + 3 = {k + 3}, got {cutoff}")
        try:
            reports.append(coherent_suite(k, z, cutoff, args.tol))
        except TailTooLargeError as exc:
            raise UsageError(str(exc))
    passed = all(r.passed for r in reports)
    emit({"passed": passed, "reports": [r.to_dict() for r in reports]},
         "\n".join(r.format_table() for r in reports), args.format)
    return 0 if passed else 1


def cmd_quon_limit(args) -> int:
    ks = parse_k(args.k, allow_all=True)
    eps = parse_epsilons(args.epsilons)
    payload, text, passed = [], [], True
    for k in ks:
        study = limit_study(k, eps, args.boson_cutoff)
        rep = study.to_check_report()
        passed &= rep.passed
        payload.append({"k": k, "boson_cutoff": args.boson_cutoff,
                        "rows": [vars(r) for r in study.rows], "report": rep.to_dict()})
        text.append(study.format_table() + "\n" + rep.format_table())
    emit({"passed": passed, "studies": payload}, "\n".join(text), args.format)
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kfsusy", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, cutoff_default=None):
        sp.add_argument("--k", default="3")
        sp.add_argument("--boson-cutoff", type=int, default=cutoff_default)
        sp.add_argument("--format", choices=("table", "json"), default="table")

    v = sub.add_parser("verify", help="run identity suites")
    common(v)
    v.add_argument("--tol", type=float, default=DEFAULT_TOL)
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("spectrum", help="energy levels of the Z_k-graded oscillator")
    common(s)
    s.add_argument("--levels", type=int, default=4)
    s.set_defaults(func=cmd_spectrum)

    c = sub.add_parser("coherent", help="coherent-state identities")
    common(c)
    c.add_argument("--z", default="0.7,0.4")
    c.add_argument("--tol", type=float, default=DEFAULT_TOL)
    c.set_defaults(func=cmd_coherent)

    q = sub.add_parser("quon-limit", help="Q -> q deviation table")
    common(q, cutoff_default=6)
    q.add_argument("--epsilons", default=",".join(f"{e:g}" for e in DEFAULT_EPSILONS))
    q.set_defaults(func=cmd_quon_limit)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2


if __name__ == "__main__":
    sys.exit(main())
