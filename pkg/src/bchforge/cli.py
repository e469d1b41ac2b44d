"""Command-line front end.

Exit codes: 0 success, 1 usage/runtime error, 2 prediction-measurement
mismatch (so CI can gate on theorem agreement).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import bch, catalog, theorems
from ._kernel import KERNEL_NAME
from .cosets import coset
from .distance import SearchBudget, min_distance
from .errors import BchForgeError
from .field import make_field, primitive_element


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


def _budget(args) -> SearchBudget:
    return SearchBudget(
        message_enum=args.budget_message,
        support_enum=args.budget_support,
        mitm_half=args.budget_mitm,
    )


def _add_budget_flags(p):
    p.add_argument("--budget-message", type=int, default=10**7,
                   help="max q^k for message-enum")
    p.add_argument("--budget-support", type=int, default=10**9,
                   help="max supports x patterns per weight for support-enum")
    p.add_argument("--budget-mitm", type=int, default=10**8,
                   help="max per-half table entries for mitm-syndrome")


def _fmt_element(field, packed: int) -> str:
    return ",".join(str(c) for c in field.digits(packed))


def _print_code(code) -> None:
    print(f"n = {code.n}")
    print(f"k = {code.dimension}")
    print(f"delta = {code.delta}")
    print(f"h = {code.h}")
    print("defining leaders:", ", ".join(str(c.leader) for c in code.cosets))
    gen = " ".join(_fmt_element(code.base, c) for c in code.generator.coeffs)
    print(f"generator = {gen}")


def _print_report(code, report) -> None:
    if report.exact:
        print(f"d = {report.d}")
    else:
        print(f"d > {report.w_explored}")
    if report.witness is not None:
        support = [i for i, c in enumerate(report.witness) if c]
        coeffs = " ".join(_fmt_element(code.base, report.witness[i]) for i in support)
        print("witness support:", ", ".join(map(str, support)))
        print("witness coeffs:", coeffs)
    print(f"elapsed = {report.elapsed:.3f}s ({report.method}, kernel {KERNEL_NAME})")


def _cmd_field_info(args) -> int:
    f = make_field(args.p, args.k)
    print(f"order = {f.order}")
    print(f"modulus = {','.join(map(str, f.modulus))}")
    print(f"primitive = {_fmt_element(f, primitive_element(f).packed)}")
    print(f"tables = {'yes' if f.has_tables else 'no'}")
    return 0


def _cmd_coset(args) -> int:
    c = coset(args.q, args.n, args.s)
    body = ",".join(map(str, c.orbit))
    print(f"C_{args.s % args.n} = {{{body}}} (size {c.size})")
    return 0


def _cmd_bch_build(args) -> int:
    _print_code(bch.build(args.q, args.m, args.delta, args.h))
    return 0


def _cmd_bch_mindist(args) -> int:
    code = bch.build(args.q, args.m, args.delta, args.h)
    report = min_distance(code, args.wmax, args.method, _budget(args))
    _print_report(code, report)
    return 0


def _verdict_lines(res) -> list[str]:
    lines = [
        f"C({res.q}, {res.n}, 3, {res.h}): [{res.n}, {res.k}]  "
        f"predicted {res.predicted.label()}  measured {res.measured_label()}  "
        f"-> {res.agrees}"
    ]
    for v in res.verdicts:
        pred = v.prediction.label() if v.prediction else "(info)"
        note = f"  # {v.note}" if v.note else ""
        lines.append(f"  {v.rule_id:<22} {pred:<6} {v.agrees}{note}")
    return lines


def _cmd_verify(args) -> int:
    res = theorems.verify(
        args.q, args.m, args.h,
        w_max=args.wmax,
        method=args.method,
        budget=_budget(args),
        quadruple_cap=args.quad_cap,
    )
    print("\n".join(_verdict_lines(res)))
    return 2 if res.agrees == "mismatch" else 0


def _sweep_jobs(qs, m_max):
    for q in qs:
        for m in range(1, m_max + 1):
            for h in range(q**m + 1):
                yield q, m, h


def _cmd_sweep(args) -> int:
    qs = [int(v) for v in args.q_list.split(",") if v]
    jobs = list(_sweep_jobs(qs, args.m_max))
    threads = args.threads or int(os.environ.get("BCHFORGE_THREADS", "1"))

    def run(job):
        q, m, h = job
        return theorems.verify(
            q, m, h,
            w_max=args.wmax,
            budget=_budget(args),
            quadruple_cap=args.quad_cap,
        )

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(job) for job in jobs]
    results.sort(key=lambda r: (r.q, r.m, r.h))

    out = Path(args.out)
    with out.open("w") as fh:
        for r in results:
            fh.write(json.dumps({
                "q": r.q,
                "m": r.m,
                "h": r.h,
                "n": r.n,
                "k": r.k,
                "theorem_ids": r.theorem_ids,
                "predicted": r.predicted.label(),
                "measured": r.report.d if r.report.exact else f">{r.report.d - 1}",
                "agrees": r.agrees,
                "witness_support": (
                    [i for i, c in enumerate(r.report.witness) if c]
                    if r.report.witness is not None
                    else None
                ),
                "elapsed_ms": round(r.elapsed_ms, 3),
            }, sort_keys=True) + "\n")
    csv_path = out.with_suffix(".csv")
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["q", "m", "h", "n", "k", "d_pred", "d_meas", "agree"])
        for r in results:
            writer.writerow([
                r.q, r.m, r.h, r.n, r.k,
                r.predicted.label(), r.measured_label(), r.agrees,
            ])
    bad = sum(1 for r in results if r.agrees == "mismatch")
    print(f"swept {len(results)} codes -> {out} ({bad} mismatches), summary {csv_path}")
    return 2 if bad else 0


def _cmd_catalog(args) -> int:
    path = Path(args.path)
    if args.action == "add":
        code = bch.build(args.q, args.m, args.delta, args.h)
        report = min_distance(code, args.wmax, args.method, _budget(args))
        rec = catalog.record_from_measurement(code, report)
        records = catalog.merge(catalog.load(path), rec)
        catalog.save(path, records)
        print(f"stored {rec.key} d{'=' if rec.d_exact else '>='}{rec.d} -> {path}")
        return 0
    if args.action == "list":
        for rec in catalog.load(path):
            rel = "=" if rec.d_exact else ">="
            flags = []
            if rec.optimality_flag:
                flags.append("distance-optimal")
            flags.append(rec.singleton_class)
            print(
                f"C({rec.q}, {rec.n}, {rec.delta}, {rec.h}): "
                f"[{rec.n}, {rec.k}, d{rel}{rec.d}] via {rec.method} "
                f"({', '.join(flags)}; {rec.timestamp})"
            )
        return 0
    failures = catalog.check(
        path, remeasure=args.remeasure, time_budget=args.time_budget,
    )
    for f in failures:
        print(f"FAIL {f}", file=sys.stderr)
    print(f"checked {path}: {'clean' if not failures else f'{len(failures)} failures'}")
    return 2 if failures else 0


def build_parser() -> _Parser:
    top = _Parser(prog="bchforge", description=__doc__)
    sub = top.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("field-info", help="construct GF(p^k) and show its shape")
    p.add_argument("p", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(fn=_cmd_field_info)

    p = sub.add_parser("coset", help="q-cyclotomic coset of s mod n")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("s", type=int)
    p.set_defaults(fn=_cmd_coset)

    p = sub.add_parser("bch", help="code construction and distance search")
    bsub = p.add_subparsers(dest="bch_cmd", required=True)

    b = bsub.add_parser("build", help="construct C(q, q^m+1, delta, h)")
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--m", type=int, required=True)
    b.add_argument("--delta", type=int, default=3)
    b.add_argument("--h", type=int, required=True)
    b.set_defaults(fn=_cmd_bch_build)

    b = bsub.add_parser("mindist", help="exact minimum distance search")
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--m", type=int, required=True)
    b.add_argument("--delta", type=int, default=3)
    b.add_argument("--h", type=int, required=True)
    b.add_argument("--wmax", type=int, required=True)
    b.add_argument("--method", default="mitm-syndrome",
                   choices=("message-enum", "support-enum", "mitm-syndrome"))
    _add_budget_flags(b)
    b.set_defaults(fn=_cmd_bch_mindist)

    p = sub.add_parser("verify", help="evaluate every applicable distance rule")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--wmax", type=int, default=None)
    p.add_argument("--method", default="mitm-syndrome",
                   choices=("message-enum", "support-enum", "mitm-syndrome"))
    p.add_argument("--quad-cap", type=int, default=theorems.DEFAULT_QUADRUPLE_CAP)
    _add_budget_flags(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("sweep", help="verify every h for given q, m ranges")
    p.add_argument("--q-list", required=True, help="comma-separated base orders")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--out", required=True, help="JSONL output path")
    p.add_argument("--wmax", type=int, default=None)
    p.add_argument("--quad-cap", type=int, default=0,
                   help="unit-group cap for quadruple rules (0 = skip)")
    p.add_argument("--threads", type=int, default=0,
                   help="worker threads (default: BCHFORGE_THREADS or 1)")
    _add_budget_flags(p)
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("catalog", help="persisted parameter records")
    p.add_argument("action", choices=("add", "list", "check"))
    p.add_argument("--path", required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--delta", type=int, default=3)
    p.add_argument("--h", type=int)
    p.add_argument("--wmax", type=int, default=12)
    p.add_argument("--method", default="mitm-syndrome",
                   choices=("message-enum", "support-enum", "mitm-syndrome"))
    p.add_argument("--remeasure", action="store_true")
    p.add_argument("--time-budget", type=float, default=60.0)
    _add_budget_flags(p)
    p.set_defaults(fn=_cmd_catalog)

    return top


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "cmd", None) == "catalog" and args.action == "add":
        if args.q is None or args.m is None or args.h is None:
            print("catalog add needs --q, --m and --h", file=sys.stderr)
            return 1
    try:
        return args.fn(args)
    except BchForgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
