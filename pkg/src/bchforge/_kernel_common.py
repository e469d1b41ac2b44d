"""Shared plumbing for the low-weight-codeword search kernels.

Both kernel implementations (compiled and pure Python) consume a
SearchContext and speak the same raw-match protocol, so the surrounding
driver and the witness canonicalization are identical for both.

Syndromes live in the discrete-log domain of the ambient field: an element
is its log in [0, N), with -1 standing for the zero element. Sums use the
Zech table, and a syndrome pair is hashed through the canonical packed
encodings of its two components (fixed-width little-endian coefficient
dumps, which is exactly what the packed integers are).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

KEY_SHIFT = 21  # packed values stay below 2^20, so 21 bits per component


@dataclass
class SearchContext:
    """Per-code tables the weight-w searches need (designed distance 3)."""

    n: int  # code length
    q: int  # base field order
    N: int  # ambient multiplicative order
    neg_shift: int  # discrete log of -1 (0 in characteristic 2)
    zech: np.ndarray  # int64[N], zech[j] = log(1 + alpha^j), -1 if zero
    t0: np.ndarray  # int64[n], log of beta^(h*i)
    t1: np.ndarray  # int64[n], log of beta^((h+1)*i)
    clogs: np.ndarray  # int64[q-1], ambient log of embedded base value c+1
    pack: np.ndarray  # int64[N], packed encoding of alpha^j
    base: object  # base FiniteField, for witness normalization

    def npatterns(self, k: int, normalized: bool) -> int:
        free = k - 1 if normalized else k
        return (self.q - 1) ** free


def zadd(zech, N: int, a: int, b: int) -> int:
    """Log-domain addition via Zech logs; -1 encodes the zero element."""
    if a < 0:
        return b
    if b < 0:
        return a
    d = a - b
    if d < 0:
        d += N
    z = zech[d]
    if z < 0:
        return -1
    r = b + z
    if r >= N:
        r -= N
    return r


def pair_key(pack, l0: int, l1: int) -> int:
    p0 = 0 if l0 < 0 else pack[l0]
    p1 = 0 if l1 < 0 else pack[l1]
    return (int(p0) << KEY_SHIFT) | int(p1)


def unrank_combination(n: int, k: int, rank: int) -> list[int]:
    """Positions of the rank-th k-subset of [0, n) in lexicographic order."""
    pos = []
    x = 0
    for j in range(k):
        v = x
        while True:
            c = comb(n - 1 - v, k - 1 - j)
            if rank < c:
                break
            rank -= c
            v += 1
        pos.append(v)
        x = v + 1
    return pos


def pattern_digits(rank: int, ndigits: int, radix: int) -> list[int]:
    """Big-endian digits of rank (first digit varies slowest)."""
    out = [0] * ndigits
    for j in range(ndigits - 1, -1, -1):
        out[j] = rank % radix
        rank //= radix
    return out


def half_coeffs(ctx: SearchContext, k: int, pat_rank: int, normalized: bool):
    """Packed base-field coefficients of one half-support pattern."""
    if normalized:
        digits = pattern_digits(pat_rank, k - 1, ctx.q - 1)
        return [1] + [d + 1 for d in digits]
    digits = pattern_digits(pat_rank, k, ctx.q - 1)
    return [d + 1 for d in digits]


def resolve_matches(ctx: SearchContext, w: int, raw_matches) -> tuple | None:
    """Turn raw MITM matches into the canonical minimum witness.

    Each raw match is (a_id, b_comb_rank, b_pat_rank) with
    a_id = a_comb_rank * npatterns_A + a_pat_rank. Matches already satisfy
    max(support A) < min(support B), so every scalar class of weight-w
    codewords shows up exactly once (its prefix split); supports are
    disjoint by construction. The lexicographically smallest
    (support, coeffs) wins — deterministic no matter how matches were
    produced.
    """
    ka = (w + 1) // 2
    kb = w // 2
    npat_a = ctx.npatterns(ka, True)
    base = ctx.base
    best = None
    for a_id, b_comb, b_pat in raw_matches:
        a_comb, a_pat = divmod(a_id, npat_a)
        pos_a = unrank_combination(ctx.n, ka, a_comb)
        pos_b = unrank_combination(ctx.n, kb, b_comb)
        if pos_a[-1] >= pos_b[0]:
            continue  # kernels pre-filter; keep the guard for safety
        coeff_a = half_coeffs(ctx, ka, a_pat, True)
        coeff_b = half_coeffs(ctx, kb, b_pat, False)
        support = tuple(pos_a + pos_b)
        coeffs = tuple(coeff_a + coeff_b)
        if coeffs[0] != 1:
            inv = base.inv(coeffs[0])
            coeffs = tuple(base.mul(c, inv) for c in coeffs)
        cand = (support, coeffs)
        if best is None or cand < best:
            best = cand
    return best
