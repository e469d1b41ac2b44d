"""JSON-lines catalog of measured codes.

One record per line keyed by (q, m, delta, h). Re-adding a key only
succeeds with an identical or strictly more exact distance claim, so a
catalog never silently loses precision.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from . import bch
from .distance import DEFAULT_BUDGET, classify_singleton, min_distance, sphere_packing_check
from .errors import CorruptRecord, InvalidParams

_FIELDS = (
    "q", "m", "delta", "h", "n", "k", "d", "d_exact", "method",
    "optimality_flag", "singleton_class", "timestamp",
)


@dataclass(frozen=True)
class CatalogRecord:
    q: int
    m: int
    delta: int
    h: int
    n: int
    k: int
    d: int
    d_exact: bool
    method: str
    optimality_flag: bool
    singleton_class: str
    timestamp: str

    @property
    def key(self):
        return (self.q, self.m, self.delta, self.h)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def record_from_measurement(code, report) -> CatalogRecord:
    if report.exact:
        opt = sphere_packing_check(code.n, code.dimension, report.d, code.q).distance_optimal
        singleton = classify_singleton(code.n, code.dimension, report.d)
    else:
        opt = False
        singleton = "unsettled"
    return CatalogRecord(
        q=code.q,
        m=code.m,
        delta=code.delta,
        h=code.h,
        n=code.n,
        k=code.dimension,
        d=report.d,
        d_exact=report.exact,
        method=report.method,
        optimality_flag=opt,
        singleton_class=singleton,
        timestamp=time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
    )


def load(path) -> list[CatalogRecord]:
    path = Path(path)
    if not path.exists():
        return []
    out = []
    with path.open() as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                raw = json.loads(line)
                out.append(CatalogRecord(**{f: raw[f] for f in _FIELDS}))
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise CorruptRecord(lineno, str(exc)) from exc
    return out


def save(path, records) -> None:
    path = Path(path)
    with path.open("w") as fh:
        for rec in records:
            fh.write(rec.to_json() + "\n")


def merge(records: list[CatalogRecord], new: CatalogRecord) -> list[CatalogRecord]:
    """Append-or-overwrite under the monotone-exactness rule."""
    out = []
    replaced = False
    for rec in records:
        if rec.key != new.key:
            out.append(rec)
            continue
        replaced = True
        if rec.d_exact and not new.d_exact:
            raise InvalidParams(
                f"catalog already holds exact d={rec.d} for {rec.key}; "
                f"refusing the weaker claim d>={new.d}"
            )
        if rec.d_exact and new.d_exact and rec.d != new.d:
            raise InvalidParams(
                f"catalog holds exact d={rec.d} for {rec.key}, got d={new.d}"
            )
        if not rec.d_exact and not new.d_exact and new.d < rec.d:
            raise InvalidParams(
                f"catalog already rules out d < {rec.d} for {rec.key}; "
                f"a smaller bound {new.d} adds nothing"
            )
        out.append(new)
    if not replaced:
        out.append(new)
    return out


def check(
    path,
    remeasure: bool = False,
    time_budget: float = 60.0,
    budget=DEFAULT_BUDGET,
) -> list[str]:
    """Re-validate every stored record against a fresh build.

    Dimensions are always recomputed; distances only when remeasure is set,
    stopping once the time budget is spent. Returns a list of failure
    descriptions (empty = catalog is clean).
    """
    failures = []
    start = time.perf_counter()
    for rec in load(path):
        code = bch.build(rec.q, rec.m, rec.delta, rec.h)
        if (code.n, code.dimension) != (rec.n, rec.k):
            failures.append(
                f"{rec.key}: stored [{rec.n},{rec.k}], rebuilt "
                f"[{code.n},{code.dimension}]"
            )
            continue
        if remeasure and time.perf_counter() - start < time_budget:
            report = min_distance(code, rec.d, rec.method, budget)
            ok = (report.d == rec.d and report.exact) if rec.d_exact else (
                report.d >= rec.d or not report.exact
            )
            if not ok:
                failures.append(
                    f"{rec.key}: stored d{'=' if rec.d_exact else '>='}{rec.d}, "
                    f"measured d{'=' if report.exact else '>='}{report.d}"
                )
    return failures
