"""Exact minimum distance at desk scale, plus bound classifications.

Three cross-validating strategies:

- message-enum: every nonzero message is encoded; exact by construction.
- support-enum: weight-by-weight scan of supports and normalized coefficient
  patterns against the two-row syndrome.
- mitm-syndrome: weight w split into ceil(w/2)+floor(w/2); side-A
  half-syndromes are hashed, side B probes with the negated syndrome, and a
  match with disjoint supports is a weight-w codeword.

The weight loop starts at the designed distance (the BCH bound makes lower
weights impossible) and the scalar normalization of the leading coefficient
is sound because the code is linear.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import bch
from ._kernel import get_kernel
from ._kernel_common import SearchContext, resolve_matches
from .errors import BudgetExceeded, InvalidParams, OrderMismatch, UnsupportedDelta

METHODS = ("message-enum", "support-enum", "mitm-syndrome")


@dataclass(frozen=True)
class SearchBudget:
    """Desk-scale guardrails; override per call or from the CLI."""

    message_enum: int = 10**7  # max number of messages q^k
    support_enum: int = 10**9  # max supports x patterns per weight
    mitm_half: int = 10**8  # max per-half table entries


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class DistanceReport:
    q: int
    m: int
    delta: int
    h: int
    method: str
    w_explored: int  # highest weight exhaustively settled
    d: int  # exact distance, or w_explored + 1 as a lower bound
    exact: bool
    witness: tuple[int, ...] | None  # packed codeword when found
    elapsed: float

    def __str__(self):
        rel = "=" if self.exact else ">="
        return f"d {rel} {self.d} ({self.method}, w<={self.w_explored})"


@dataclass(frozen=True)
class BoundVerdict:
    n: int
    k: int
    d: int
    q: int
    sphere_packing_lhs: int  # Hamming-ball count when testing d+1
    rhs: int  # q^(n-k)
    distance_optimal: bool
    singleton_defect: int


def _base_tables(code: bch.BchCode):
    q = code.base.order
    if q > 512:
        raise BudgetExceeded("message-enum", 0, q * q, 512 * 512)
    add_t = [[code.base.add(a, b) for b in range(q)] for a in range(q)]
    mul_t = [[code.base.mul(a, b) for b in range(q)] for a in range(q)]
    return np.array(add_t, dtype=np.int64), np.array(mul_t, dtype=np.int64)


def search_context(code: bch.BchCode) -> SearchContext:
    """Log-domain tables the syndrome kernels run on (cached per code)."""
    ctx = getattr(code, "_search_ctx", None)
    if ctx is not None:
        return ctx
    if code.delta != 3:
        raise UnsupportedDelta(code.delta)
    amb = code.ambient
    if not amb.has_tables:
        raise OrderMismatch(
            f"ambient field {amb} is too large for table-backed search"
        )
    N = amb.order - 1
    logbeta = amb.log(code.beta.packed)
    n = code.n
    t0 = np.array([(code.h * i * logbeta) % N for i in range(n)], dtype=np.int64)
    t1 = np.array([((code.h + 1) * i * logbeta) % N for i in range(n)], dtype=np.int64)
    q = code.base.order
    up = code.embedding.up
    clogs = np.array([amb.log(up(c)) for c in range(1, q)], dtype=np.int64)
    ctx = SearchContext(
        n=n,
        q=q,
        N=N,
        neg_shift=0 if amb.p == 2 else N // 2,
        zech=np.ascontiguousarray(amb._zech, dtype=np.int64),
        t0=t0,
        t1=t1,
        clogs=clogs,
        pack=np.ascontiguousarray(amb._antilog, dtype=np.int64),
        base=code.base,
    )
    code._search_ctx = ctx
    return ctx


def _witness_vector(code: bch.BchCode, support, coeffs) -> tuple[int, ...]:
    v = [0] * code.n
    for p, c in zip(support, coeffs):
        v[p] = c
    word = tuple(v)
    if not bch.is_codeword(code, word):
        raise AssertionError("search produced a non-codeword witness")
    return word


def min_distance(
    code: bch.BchCode,
    w_max: int,
    method: str = "mitm-syndrome",
    budget: SearchBudget = DEFAULT_BUDGET,
    kernel_name: str | None = None,
) -> DistanceReport:
    """Exact minimum distance if it is at most w_max, else the lower bound
    d > w_max. message-enum ignores w_max and is always exact."""
    if method not in METHODS:
        raise InvalidParams(f"unknown method {method!r}")
    if w_max < code.delta - 1:
        raise InvalidParams(f"w_max={w_max} below delta-1={code.delta - 1}")
    kern = get_kernel(kernel_name)
    t_start = time.perf_counter()
    q = code.base.order
    k = code.dimension

    if method == "message-enum":
        size = q**k
        if size > budget.message_enum:
            raise BudgetExceeded(method, 0, size, budget.message_enum)
        if k == 0:
            return DistanceReport(
                code.q, code.m, code.delta, code.h, method, code.n,
                code.n + 1, False, None, time.perf_counter() - t_start,
            )
        add_t, mul_t = _base_tables(code)
        d, word = kern.message_scan(
            list(code.generator.coeffs), k, code.n, q, add_t, mul_t
        )
        if not bch.is_codeword(code, word):
            raise AssertionError("message scan produced a non-codeword")
        return DistanceReport(
            code.q, code.m, code.delta, code.h, method, code.n,
            d, True, word, time.perf_counter() - t_start,
        )

    if code.delta != 3:
        raise UnsupportedDelta(code.delta)
    ctx = search_context(code)
    for w in range(code.delta, w_max + 1):
        if method == "support-enum":
            size = comb(code.n, w) * (q - 1) ** (w - 1)
            if size > budget.support_enum:
                raise BudgetExceeded(method, w, size, budget.support_enum)
            hit = kern.support_search(ctx, w)
        else:
            ka = (w + 1) // 2
            kb = w // 2
            size = max(
                comb(code.n, ka) * (q - 1) ** (ka - 1),
                comb(code.n, kb) * (q - 1) ** kb,
            )
            if size > budget.mitm_half:
                raise BudgetExceeded(method, w, size, budget.mitm_half)
            hit = resolve_matches(ctx, w, kern.mitm_collect(ctx, w))
        if hit is not None:
            word = _witness_vector(code, hit[0], hit[1])
            return DistanceReport(
                code.q, code.m, code.delta, code.h, method, w,
                w, True, word, time.perf_counter() - t_start,
            )
    return DistanceReport(
        code.q, code.m, code.delta, code.h, method, w_max,
        w_max + 1, False, None, time.perf_counter() - t_start,
    )


def sphere_packing_lhs(n: int, d: int, q: int) -> int:
    """Exact Hamming-ball volume sum for an [n, ., d] code over GF(q)."""
    return sum(comb(n, i) * (q - 1) ** i for i in range((d - 1) // 2 + 1))


def sphere_packing_check(n: int, k: int, d: int, q: int) -> BoundVerdict:
    """Distance optimality certified by violation at d+1.

    This is a sufficient certificate only: a code can be distance-optimal
    without the bound ruling out d+1.
    """
    if not (1 <= d <= n and 1 <= k <= n):
        raise InvalidParams(f"bad parameters [{n},{k},{d}]")
    rhs = q ** (n - k)
    if sphere_packing_lhs(n, d, q) > rhs:
        raise InvalidParams(f"[{n},{k},{d}] over GF({q}) already violates the bound")
    lhs_next = sphere_packing_lhs(n, d + 1, q)
    return BoundVerdict(
        n=n,
        k=k,
        d=d,
        q=q,
        sphere_packing_lhs=lhs_next,
        rhs=rhs,
        distance_optimal=lhs_next > rhs,
        singleton_defect=n - k + 1 - d,
    )


def classify_singleton(n: int, k: int, d: int) -> str:
    """MDS / AMDS / defect>=2 by the Singleton defect."""
    defect = n - k + 1 - d
    if defect < 0:
        raise InvalidParams(f"[{n},{k},{d}] violates the Singleton bound")
    if defect == 0:
        return "MDS"
    if defect == 1:
        return "AMDS"
    return f"defect {defect}"
