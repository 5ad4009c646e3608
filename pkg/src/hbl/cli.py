"""Command-line front end: verification suites, monad sampling, reports.

Subcommands:

    cohomology   closed-form vs Cech-engine grids, duality and Euler checks
    sample       draw monad points, classify them, persist as JSON
    verify       run the named verification suites, write a report
    dims         dimension formulas and group audits

Reports are schema-versioned JSON (optionally flattened to CSV); with a
fixed seed the payload is byte-identical across runs except for runtime
fields.  Exit codes: 0 pass, 1 verification failure, 2 usage error,
3 internal error.  HBL_WORKERS caps the worker pool.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import __version__, cech, cox, dimensions, monads, pic
from .fields import PrimeField, QQ
from .pic import ChernData, DivisorClass, Surface

REPORT_SCHEMA_VERSION = 1
SUITE_NAMES = (
    "cohomology",
    "monads",
    "dimensions",
    "lemma-monads",
    "rationality",
    "euler-chi",
)


class UsageError(ValueError):
    pass


def _workers() -> int:
    env = os.environ.get("HBL_WORKERS")
    if env:
        n = int(env)
        if n < 1:
            raise UsageError("HBL_WORKERS must be a positive integer")
        return n
    return min(4, os.cpu_count() or 1)


def _parse_e_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        values = list(range(int(lo), int(hi) + 1))
    else:
        values = [int(text)]
    if not values or values[0] < 0 or values[-1] > 8:
        raise UsageError(f"--e range {text!r} outside [0, 8]")
    return values


def _parse_divisor(text: str) -> DivisorClass:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--divisor expects 'a,b', got {text!r}") from exc
    return DivisorClass(a, b)


class Suite:
    def __init__(self, name: str):
        self.name = name
        self.checks = []
        self.started = time.perf_counter()

    def add(self, name: str, expected, computed, info: bool = False):
        self.checks.append(
            {
                "name": name,
                "expected": "info" if info else expected,
                "computed": computed,
                "pass": True if info else expected == computed,
            }
        )

    def result(self) -> dict:
        return {
            "name": self.name,
            "checks": self.checks,
            "pass": all(c["pass"] for c in self.checks),
            "runtime_s": round(time.perf_counter() - self.started, 3),
        }


def build_report(command: str, config: dict, suites: list[dict]) -> dict:
    total = sum(len(s["checks"]) for s in suites)
    passed = sum(sum(1 for c in s["checks"] if c["pass"]) for s in suites)
    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "tool": "hbl",
        "version": __version__,
        "command": command,
        "config": config,
        "suites": suites,
        "summary": {"checks": total, "passed": passed, "failed": total - passed},
        "pass": total == passed,
    }


def _write_report(report: dict, out: str | None, fmt: str) -> None:
    if fmt == "json":
        text = monads.dumps_canonical(report)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["suite", "check", "expected", "computed", "pass"])
        for suite in report["suites"]:
            for c in suite["checks"]:
                writer.writerow(
                    [suite["name"], c["name"], c["expected"], c["computed"], c["pass"]]
                )
        text = buf.getvalue()
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------------ suites


def suite_cohomology(e_values, grid_range: int) -> dict:
    suite = Suite("cohomology")

    def grid_cell(args):
        s, a, b = args
        D = DivisorClass(a, b)
        closed = cox.hq_dims(s, D)
        engine = cech.cech_line_cohomology(s, D)
        K = pic.canonical_class(s)
        serre = tuple(
            cox.hq_dims(s, K - D)[2 - q] == closed[q] for q in range(3)
        )
        chi = pic.euler_char(s, ChernData(1, D, 0))
        euler_ok = chi == closed[0] - closed[1] + closed[2]
        return engine == closed and all(serre) and euler_ok

    with ThreadPoolExecutor(max_workers=_workers()) as pool:
        for e in e_values:
            s = Surface(e)
            cells = [
                (s, a, b)
                for a in range(-grid_range, grid_range + 1)
                for b in range(-grid_range, grid_range + 1)
            ]
            failures = sum(1 for ok in pool.map(grid_cell, cells) if not ok)
            suite.add(
                f"e={e}: engine==closed-form, duality, Euler on "
                f"[-{grid_range},{grid_range}]^2 (failures)",
                0,
                failures,
            )
    for e in range(1, 7):
        s = Surface(e)
        suite.add(
            f"e={e}: h0(C0+eF)", e + 2, cox.h0_dim(s, DivisorClass(1, e))
        )
        suite.add(
            f"e={e}: h0(C0+(e+1)F)", e + 4, cox.h0_dim(s, DivisorClass(1, e + 1))
        )
        suite.add(
            f"e={e}: h1(C0+(e-1)F)", 0, cox.h1_dim(s, DivisorClass(1, e - 1))
        )
    return suite.result()


def classify_sample(e: int, prime: int | None, seed: int, n_fibres: int):
    field = QQ if prime is None else PrimeField(prime)
    point = monads.sample_monad(e, field, seed=seed)
    check = monads.is_monad(point)
    inv = monads.classify(point, n_fibres=n_fibres)
    page = monads.beilinson_page(point)
    jac = monads.jacobian_rank_mu(point)
    return point, check, inv, page, jac


def suite_monads(e_values, samples: int, seed: int, prime: int | None, n_fibres: int) -> dict:
    suite = Suite("monads")
    e_values = [e for e in e_values if e >= 1]
    with ThreadPoolExecutor(max_workers=_workers()) as pool:
        for e in e_values:
            expected_table = {
                "0": (0, 2, 0),
                "-F": (0, 2, 0),
                "-C0": (0, e + 2, 0),
                "-C0-F": (0, e, 0),
            }
            jobs = [(e, prime, seed + i, n_fibres) for i in range(samples)]
            results = list(pool.map(lambda a: classify_sample(*a), jobs))
            bad_valid = sum(1 for _p, chk, *_r in results if not chk.ok)
            bad_table = sum(
                1
                for _p, _c, inv, *_r in results
                if any(inv.h_table[k] != v for k, v in expected_table.items())
            )
            bad_vanishing = sum(1 for _p, _c, inv, *_r in results if not inv.vanishing)
            bad_prior = sum(
                1
                for _p, _c, inv, *_r in results
                if not (inv.d == -1 or inv.r <= -1)
                or inv.r > -2
                or not inv.prioritary
                or inv.ell_zeta < 0
            )
            bad_rows = sum(
                1
                for *_r, page, _j in results
                if not (page.row_is_zero(0) and page.row_is_zero(2))
            )
            bad_mult = sum(
                1
                for *_r, page, _j in results
                if page.multiplicity(-2, 1) != e
                or page.multiplicity(-1, 1) != (2, e + 2)
            )
            bad_jac = sum(1 for *_r, jac in results if jac != 2 * e * e + 8 * e)
            n = samples
            suite.add(f"e={e}: {n} samples valid (failures)", 0, bad_valid)
            suite.add(f"e={e}: cohomology tables match (failures)", 0, bad_table)
            suite.add(f"e={e}: h0(V(C0+F)) = 0 (failures)", 0, bad_vanishing)
            suite.add(f"e={e}: priority invariants (failures)", 0, bad_prior)
            suite.add(f"e={e}: page rows q=0,2 vanish (failures)", 0, bad_rows)
            suite.add(f"e={e}: page multiplicities (failures)", 0, bad_mult)
            suite.add(f"e={e}: Jacobian rank == 2e^2+8e (failures)", 0, bad_jac)
    return suite.result()


def suite_dimensions(e_values) -> dict:
    suite = Suite("dimensions")
    for e in [e for e in e_values if e >= 1] or [1]:
        m1, m2, m3 = dimensions.m_dims(e)
        suite.add(
            f"e={e}: (m1, m2, m3) closed forms",
            (4 * e * e + 8 * e - 1, 2 * e * e + 8 * e + 15, 2 * e * e + 8 * e - 1),
            (m1, m2, m3),
        )
        suite.add(
            f"e={e}: dim of parameter space",
            4 * (e * e + 2 * e + 4),
            dimensions.dim_parameter_space(e),
        )
        audit = dimensions.group_dim_audit(e)
        suite.add(f"e={e}: group-dimension audit", None, audit.to_json(), info=True)
    return suite.result()


def suite_lemma_monads(e_values) -> dict:
    suite = Suite("lemma-monads")
    for e in [e for e in e_values if e >= 1] or [1]:
        conditions = monads.hom_vanishing_conditions(monads.monad_shape(e))
        suite.add(
            f"e={e}: six morphism-correspondence vanishings",
            {k: 0 for k in conditions},
            conditions,
        )
    return suite.result()


def suite_rationality(e_values, primes=(10007, 10009)) -> dict:
    suite = Suite("rationality")
    for e in [e for e in e_values if 1 <= e <= 2] or [1]:
        m1, m2, m3 = dimensions.m_dims(e)
        for p in primes:
            bk = dimensions.bilinear_kernel(e, PrimeField(p))
            suite.add(
                f"e={e}, p={p}: tensor-map rank == m3+1", m3 + 1, bk.rank
            )
            suite.add(
                f"e={e}, p={p}: dim K == (m1+1)(m2+1)-(m3+1)",
                (m1 + 1) * (m2 + 1) - (m3 + 1),
                bk.dim_kernel,
            )
            suite.add(
                f"e={e}, p={p}: explicit preimages verified", True, bk.preimages_verified
            )
        report = dimensions.inequality_audit(e)
        for check in report.checks:
            suite.add(f"e={e}: {check['name']}", check["expected"], check["computed"])
            suite.checks[-1]["pass"] = check["pass"]
        field = PrimeField(primes[0])
        dims = [
            dimensions.fiber_solution_dim(e, field, dimensions.random_a_blocks(e, field, i))
            for i in range(10)
        ]
        suite.add(
            f"e={e}: generic solution-space dimension == 16 (10 draws)",
            [16] * 10,
            dims,
        )
    return suite.result()


def suite_euler_chi(e_values) -> dict:
    suite = Suite("euler-chi")
    for e in e_values:
        s = Surface(e)
        K = pic.canonical_class(s)
        omalous_dual = ChernData(2, K, 4)
        endo = pic.chern_endo(s, omalous_dual)
        suite.add(f"e={e}: c2 of endomorphism bundle", 8, endo.c2)
        suite.add(f"e={e}: chi of endomorphism bundle", -4, pic.euler_char(s, endo))
        fixture = monads.euler_cotangent_fixture(s)
        suite.add(
            f"e={e}: cotangent fixture h at twist 0",
            (0, 2, 0),
            cech.monad_bundle_h(s, fixture, DivisorClass(0, 0)),
        )
        suite.add(
            f"e={e}: h0 of cotangent(C0+F)",
            0,
            cech.monad_bundle_h(s, fixture, DivisorClass(1, 1))[0],
        )
        cdata = monads.chern_of_complex(s, fixture)
        suite.add(
            f"e={e}: cotangent fixture Chern data",
            [2, [K.a, K.b], 4],
            [cdata.rank, [cdata.c1.a, cdata.c1.b], cdata.c2],
        )
    return suite.result()


# ---------------------------------------------------------------- commands


def cmd_cohomology(args) -> int:
    e_values = _parse_e_range(args.e)
    suites = []
    config = {
        "e": args.e,
        "range": args.range,
        "divisor": args.divisor,
        "q": args.q,
    }
    if args.divisor:
        D = _parse_divisor(args.divisor)
        suite = Suite("cohomology-query")
        for e in e_values:
            s = Surface(e)
            dims = cox.hq_dims(s, D)
            if args.q is None:
                suite.add(f"e={e}: h(O({D.a},{D.b}))", None, list(dims), info=True)
                print(f"e={e}: h^q(O({D.a}C0+{D.b}F)) = {dims}")
            else:
                suite.add(
                    f"e={e}: h^{args.q}(O({D.a},{D.b}))",
                    None,
                    dims[args.q],
                    info=True,
                )
                print(f"e={e}: h^{args.q}(O({D.a}C0+{D.b}F)) = {dims[args.q]}")
        suites.append(suite.result())
    else:
        suites.append(suite_cohomology(e_values, args.range))
    report = build_report("cohomology", config, suites)
    _write_report(report, args.out, args.format)
    return 0 if report["pass"] else 1


def cmd_sample(args) -> int:
    e_values = _parse_e_range(args.e)
    if any(e < 1 for e in e_values):
        raise UsageError(
            "sampling needs e >= 1: the monad parameter space is empty on "
            "the product quadric (e = 0)"
        )
    prime = None if args.rational else args.prime
    field = QQ if prime is None else PrimeField(prime)
    payload = {
        "schema_version": monads.MONAD_SCHEMA_VERSION,
        "config": {
            "e": args.e,
            "count": args.count,
            "seed": args.seed,
            "field": monads.field_to_json(field),
            "fibers": args.fibers,
        },
        "monads": [],
        "summary": [],
    }
    ok = True
    for e in e_values:
        for i in range(args.count):
            point = monads.sample_monad(e, field, seed=args.seed + i)
            inv = monads.classify(point, n_fibres=args.fibers)
            check = monads.is_monad(point)
            ok = ok and check.ok and inv.vanishing and inv.prioritary
            payload["monads"].append(monads.monad_to_json(point))
            payload["summary"].append({"e": e, "seed": args.seed + i, **inv.to_json()})
    text = monads.dumps_canonical(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    e_values = _parse_e_range(args.e)
    prime = None if args.rational else args.prime
    wanted = args.suite or list(SUITE_NAMES)
    unknown = [name for name in wanted if name not in SUITE_NAMES]
    if unknown:
        raise UsageError(f"unknown suite(s) {unknown}; choose from {SUITE_NAMES}")
    suites = []
    for name in wanted:
        if name == "cohomology":
            suites.append(suite_cohomology(e_values, args.range))
        elif name == "monads":
            suites.append(
                suite_monads(e_values, args.samples, args.seed, prime, args.fibers)
            )
        elif name == "dimensions":
            suites.append(suite_dimensions(e_values))
        elif name == "lemma-monads":
            suites.append(suite_lemma_monads(e_values))
        elif name == "rationality":
            suites.append(suite_rationality(e_values))
        elif name == "euler-chi":
            suites.append(suite_euler_chi(e_values))
    config = {
        "e": args.e,
        "samples": args.samples,
        "seed": args.seed,
        "field": {"type": "rational"} if prime is None else {"type": "prime", "p": prime},
        "fibers": args.fibers,
        "range": args.range,
        "suites": wanted,
    }
    report = build_report("verify", config, suites)
    _write_report(report, args.out, args.format)
    return 0 if report["pass"] else 1


def cmd_dims(args) -> int:
    e_values = [e for e in _parse_e_range(args.e) if e >= 1]
    suites = [suite_dimensions(e_values)]
    report = build_report("dims", {"e": args.e}, suites)
    _write_report(report, args.out, args.format)
    return 0 if report["pass"] else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hbl",
        description="Exact cohomology and monad verification on Hirzebruch surfaces",
    )
    parser.add_argument("--version", action="version", version=f"hbl {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, sampling=False):
        p.add_argument("--e", default="1", help="parameter e, single value or range 'lo..hi'")
        p.add_argument("--out", default=None, help="output path (stdout if omitted)")
        p.add_argument(
            "--format", choices=("json", "csv"), default="json", help="report format"
        )
        if sampling:
            p.add_argument("--prime", type=int, default=monads.DEFAULT_PRIME)
            p.add_argument(
                "--rational", action="store_true", help="sample over the rationals"
            )
            p.add_argument("--seed", type=int, default=1)
            p.add_argument("--samples", type=int, default=20)
            p.add_argument("--count", type=int, default=20)
            p.add_argument(
                "--fibers", type=int, default=7, help="ruling fibres per splitting scan"
            )

    p_coh = sub.add_parser("cohomology", help="line-bundle cohomology grids and queries")
    common(p_coh)
    p_coh.add_argument("--range", type=int, default=6, help="grid half-width")
    p_coh.add_argument("--divisor", default=None, help="single divisor query 'a,b'")
    p_coh.add_argument("--q", type=int, default=None, choices=(0, 1, 2))
    p_coh.set_defaults(func=cmd_cohomology)

    p_sample = sub.add_parser("sample", help="draw and persist monad points")
    common(p_sample, sampling=True)
    p_sample.set_defaults(func=cmd_sample)

    p_verify = sub.add_parser("verify", help="run verification suites")
    common(p_verify, sampling=True)
    p_verify.add_argument("--range", type=int, default=6, help="cohomology grid half-width")
    p_verify.add_argument(
        "--suite",
        action="append",
        default=None,
        help=f"suite name, repeatable; default all of {', '.join(SUITE_NAMES)}",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_dims = sub.add_parser("dims", help="dimension formulas and group audit")
    common(p_dims)
    p_dims.set_defaults(func=cmd_dims)

    return parser


def _glue_value_flags(argv):
    """Let '--divisor -2,-1' work: argparse would read the value as a flag,
    so glue it on with '='."""
    out = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg == "--divisor" and i + 1 < len(argv):
            out.append(f"{arg}={argv[i + 1]}")
            i += 2
        else:
            out.append(arg)
            i += 1
    return out


def main(argv=None) -> int:
    parser = make_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _glue_value_flags(argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep its code
        return int(exc.code or 0)
    try:
        code = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal failure
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    return code


if __name__ == "__main__":
    sys.exit(main())
