"""Command-line front end.

Commands: decide, scan {intervals|kozlov|pl|sweep}, construct {sn|comb|ladder},
oracle, calibrate, selftest.  Global flags mirror STEPDILATION_* environment
variables.  Exit codes: 0 Complete / success, 1 Incomplete, 2 Undetermined,
64 bad input, 70 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

EXIT_COMPLETE = 0
EXIT_INCOMPLETE = 1
EXIT_UNDETERMINED = 2
EXIT_USAGE = 64
EXIT_INTERNAL = 70

_ENV_PREFIX = "STEPDILATION_"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _env_default(name: str, fallback):
    raw = os.environ.get(_ENV_PREFIX + name.upper())
    if raw is None:
        return fallback
    if isinstance(fallback, int):
        return int(raw)
    return raw


def _add_global_options(p: argparse.ArgumentParser, root: bool):
    sup = argparse.SUPPRESS

    def dflt(name, fallback):
        return _env_default(name, fallback) if root else sup

    p.add_argument("--mode", choices=["fast", "certify"], default=dflt("mode", "certify"))
    p.add_argument("--precision", type=int, default=dflt("precision", 60))
    p.add_argument(
        "--margin",
        type=Fraction,
        default=Fraction(_env_default("margin", "1/10")) if root else sup,
    )
    p.add_argument("--jobs", type=int, default=dflt("jobs", 1))
    p.add_argument(
        "--format", dest="fmt", choices=["json", "csv", "table"],
        default=dflt("format", "table"),
    )
    p.add_argument("--out", default=dflt("out", None))
    p.add_argument("--seed", type=int, default=dflt("seed", 0))


def _build_parser() -> _Parser:
    p = _Parser(prog="stepdilation", description=__doc__)
    _add_global_options(p, root=True)
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decide", help="decide completeness of a step-function file")
    d.add_argument("file")
    _add_global_options(d, root=False)

    s = sub.add_parser("scan", help="batch decisions over a family")
    ssub = s.add_subparsers(dest="scan_kind", required=True)
    si = ssub.add_parser("intervals")
    si.add_argument("--max-denominator", type=int, required=True)
    _add_global_options(si, root=False)
    sk = ssub.add_parser("kozlov")
    sk.add_argument("--max-denominator", type=int, required=True)
    _add_global_options(sk, root=False)
    sp = ssub.add_parser("pl")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--l", type=int, default=1)
    _add_global_options(sp, root=False)
    sw = ssub.add_parser("sweep")
    sw.add_argument("--family", choices=["half", "thirds"], required=True)
    sw.add_argument("--grid-lo", type=int, default=-3)
    sw.add_argument("--grid-hi", type=int, default=3)
    _add_global_options(sw, root=False)

    c = sub.add_parser("construct", help="build catalog step functions")
    csub = c.add_subparsers(dest="construct_kind", required=True)
    cs = csub.add_parser("sn")
    cs.add_argument("--modulus", type=int, required=True)
    cs.add_argument(
        "--character",
        required=True,
        help="'legendre', a primitive-character index, or assignments like '3=-1,5=-1'",
    )
    cs.add_argument("--n", type=int, required=True)
    cs.add_argument("--decide", action="store_true")
    _add_global_options(cs, root=False)
    cc = csub.add_parser("comb")
    cc.add_argument("--t", type=int, required=True)
    cc.add_argument("--variant", choices=["V", "complement", "even"], default=None)
    cc.add_argument("--decide", action="store_true")
    _add_global_options(cc, root=False)
    cl = csub.add_parser("ladder")
    cl.add_argument("--t", type=int, required=True)
    cl.add_argument("--decide", action="store_true")
    _add_global_options(cl, root=False)

    o = sub.add_parser("oracle", help="residual curve for a step-function file")
    o.add_argument("file")
    o.add_argument("--K", type=int, default=64)
    o.add_argument("--N", type=int, default=512)
    o.add_argument("--k-list", default=None, help="comma-separated K values")
    _add_global_options(o, root=False)

    cal = sub.add_parser("calibrate", help="calibrate oracle thresholds on the interval corpus")
    cal.add_argument("--K", type=int, default=64)
    cal.add_argument("--N", type=int, default=512)
    cal.add_argument("--max-denominator", type=int, default=6)
    cal.add_argument("--thresholds", default="oracle-thresholds.json")
    _add_global_options(cal, root=False)

    st = sub.add_parser("selftest", help="run the embedded exact identity suites")
    _add_global_options(st, root=False)
    return p


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _verdict_exit(status: str) -> int:
    return {"Complete": EXIT_COMPLETE, "Incomplete": EXIT_INCOMPLETE}.get(
        status, EXIT_UNDETERMINED
    )


def _json_dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def _cmd_decide(args) -> int:
    from .stepfn import load_file
    from .decide import decide_completeness

    phi = load_file(args.file)
    verdict = decide_completeness(
        phi, mode=args.mode, margin=args.margin, precision=args.precision, seed=args.seed
    )
    if args.fmt == "json":
        _emit(_json_dumps(verdict.to_json_dict()), args.out)
    else:
        doc = verdict.to_json_dict()
        lines = [f"status: {verdict.status}", f"t: {verdict.t_used}"]
        if verdict.character:
            q0, psi = verdict.character
            lines.append(f"character: conductor {q0}, index {psi.index}")
        if verdict.theorem_polynomial is not None:
            lines.append(f"polynomial: {verdict.theorem_polynomial!r}")
        if verdict.zero_verdict is not None:
            lines.append(f"certificate: {verdict.zero_verdict.certificate.kind}")
        if verdict.incompleteness_reason:
            lines.append(f"reason: {verdict.incompleteness_reason}")
        _emit("\n".join(lines), args.out)
    return _verdict_exit(verdict.status)


def _cmd_scan(args) -> int:
    from . import catalog

    opts = {
        "mode": args.mode,
        "jobs": args.jobs,
        "margin": args.margin,
        "precision": args.precision,
        "seed": args.seed,
    }
    if args.scan_kind == "intervals":
        rep = catalog.scan_intervals(args.max_denominator, **opts)
    elif args.scan_kind == "kozlov":
        rep = catalog.kozlov_scan(args.max_denominator, **opts)
    elif args.scan_kind == "pl":
        rep = catalog.enumerate_pl(args.p, args.l, **opts)
    else:
        grid = catalog.default_sweep_grid(args.grid_lo, args.grid_hi)
        rep = catalog.coefficient_family_sweep(args.family, grid, **opts)
    if args.fmt == "json":
        _emit(_json_dumps(rep.to_json_dict()), args.out)
    elif args.fmt == "csv":
        _emit(rep.to_csv(), args.out)
    else:
        _emit(rep.to_table(), args.out)
    s = rep.summary()
    print(
        f"examined={s['examined']} complete={s['complete']} "
        f"incomplete={s['incomplete']} undetermined={s['undetermined']}",
        file=sys.stderr,
    )
    return 0 if not rep.undetermined else EXIT_UNDETERMINED


def _character_from_spec(modulus: int, spec: str):
    from .characters import legendre_character, primitive_characters, character_from_assignments
    from .exactnum import parse_cyclo
    from .arith import euler_phi

    if spec == "legendre":
        return legendre_character(modulus)
    if spec.isdigit():
        prim = primitive_characters(modulus)
        idx = int(spec)
        if idx >= len(prim):
            raise ValueError(f"only {len(prim)} primitive characters mod {modulus}")
        return prim[idx]
    assignments = {}
    from .characters import enumerate_characters

    order = enumerate_characters(modulus)[0].value_order
    for part in spec.split(","):
        k, _, v = part.partition("=")
        assignments[int(k)] = parse_cyclo(v, order)
    chi = character_from_assignments(modulus, assignments)
    if not chi.is_primitive:
        raise ValueError("assignments select a non-primitive character")
    return chi


def _cmd_construct(args) -> int:
    from . import catalog
    from .stepfn import dumps

    if args.construct_kind == "sn":
        psi = _character_from_spec(args.modulus, args.character)
        phi = catalog.build_sn(psi, args.n)
    elif args.construct_kind == "comb":
        variant = args.variant
        if variant is None:
            variant = "even" if args.t % 2 == 0 else "V"
        variant = {"V": "V", "complement": "V_complement", "even": "even_t"}[variant]
        phi = catalog.build_comb(args.t, variant)
    else:
        phi = catalog.build_ladder(args.t)
    _emit(dumps(phi), args.out)
    if args.decide:
        from .decide import decide_completeness

        verdict = decide_completeness(phi, mode=args.mode)
        print(f"status: {verdict.status}", file=sys.stderr)
        return _verdict_exit(verdict.status)
    return 0


def _cmd_oracle(args) -> int:
    from .numoracle import residual_curve
    from .stepfn import load_file

    phi = load_file(args.file)
    if args.k_list:
        ks = [int(x) for x in args.k_list.split(",")]
    else:
        ks = [k for k in (1, 2, 4, 8, 16, 32, 64, 128) if k <= args.K]
    curve = residual_curve(phi, ks, args.N, descriptor=args.file)
    _emit(curve.to_csv(), args.out)
    return 0


def _cmd_calibrate(args) -> int:
    from . import catalog
    from .numoracle import calibrate
    from .stepfn import indicator

    rep = catalog.scan_intervals(args.max_denominator, mode=args.mode, jobs=args.jobs)
    complete, incomplete = [], []
    for e in rep.entries:
        a, b = e.descriptor.strip("()").split(",")
        phi = indicator(Fraction(a), Fraction(b))
        (complete if e.verdict.status == "Complete" else incomplete).append(
            (e.descriptor, phi)
        )
    th, csv_text = calibrate(complete, incomplete, K=args.K, N=args.N, seed=args.seed)
    with open(args.thresholds, "w", encoding="utf-8") as fh:
        fh.write(th.to_json() + "\n")
    _emit(csv_text, args.out)
    print(
        f"ceiling={th.complete_ceiling:.6f} floor={th.incomplete_floor:.6f} "
        f"separated={th.separated}",
        file=sys.stderr,
    )
    return 0 if th.separated else 1


def _cmd_selftest(args) -> int:
    from math import gcd

    from .arith import divisors, euler_phi, mobius
    from .characters import enumerate_characters, gauss_sum_direct, gauss_sum_formula
    from .decide import decide_completeness
    from .exactnum import CycloNumber
    from .periodic import PeriodicFn, fourier_transform, inverse_fourier_transform
    from .stepfn import indicator

    passed = failed = 0

    def check(name, ok):
        nonlocal passed, failed
        if ok:
            passed += 1
        else:
            failed += 1
            print(f"FAIL {name}", file=sys.stderr)

    for q in range(1, 13):
        chars = enumerate_characters(q)
        for chi in chars:
            s = CycloNumber.from_rational(0)
            for n in range(1, q + 1):
                s = s + chi(n)
            expect = euler_phi(q) if chi.is_principal else 0
            check(f"orthogonality-sum q={q}", s == expect)
        for chi in chars:
            for n in range(1, q + 1):
                check(
                    f"gauss q={q}",
                    gauss_sum_direct(n, chi) == gauss_sum_formula(n, chi),
                )
    for n in range(1, 2001):
        total = Fraction(0)
        for d in divisors(n):
            m = mobius(d)
            if m:
                total += Fraction(m * m, euler_phi(d))
        check(f"totient-identity n={n}", euler_phi(n) * total == n)
    import random

    rng = random.Random(args.seed)
    for q in (3, 4, 6, 8, 10):
        f = PeriodicFn.from_values([rng.randint(-3, 3) for _ in range(q)])
        check(f"fourier-roundtrip q={q}", inverse_fourier_transform(fourier_transform(f)) == f)
    check("pipeline-half", decide_completeness(indicator(0, Fraction(1, 2))).status == "Complete")
    check("pipeline-third", decide_completeness(indicator(0, Fraction(1, 3))).status == "Incomplete")
    print(f"selftest: {passed} passed, {failed} failed")
    return 0 if failed == 0 else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "decide": _cmd_decide,
        "scan": _cmd_scan,
        "construct": _cmd_construct,
        "oracle": _cmd_oracle,
        "calibrate": _cmd_calibrate,
        "selftest": _cmd_selftest,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ArithmeticError, RuntimeError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
