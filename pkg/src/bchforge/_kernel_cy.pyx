# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels: same contract as _kernel_py, loops in C."""

from math import comb

import numpy as np

from ._kernel_common import half_coeffs, unrank_combination

NAME = "compiled"


cdef inline long long zadd(const long long[:] zech, long long N,
                           long long a, long long b) noexcept nogil:
    cdef long long d, z, r
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


cdef inline bint _next_combination(long long[:] pos, int k, int n) noexcept nogil:
    cdef int i = k - 1
    while i >= 0 and pos[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    pos[i] += 1
    cdef int j
    for j in range(i + 1, k):
        pos[j] = pos[j - 1] + 1
    return True


cdef inline bint _next_pattern(long long[:] digits, int lo, int hi, int radix) noexcept nogil:
    # digits[lo:hi] as an odometer, last digit varying fastest
    cdef int i = hi - 1
    while i >= lo and digits[i] == radix - 1:
        digits[i] = 0
        i -= 1
    if i < lo:
        return False
    digits[i] += 1
    return True


def support_search(ctx, int w, long long start=0, stop=None):
    """First zero-syndrome weight-w vector in canonical order, or None."""
    cdef const long long[:] zech = ctx.zech
    cdef const long long[:] t0 = ctx.t0
    cdef const long long[:] t1 = ctx.t1
    cdef const long long[:] clogs = ctx.clogs
    cdef long long N = ctx.N
    cdef int n = ctx.n
    cdef int q = ctx.q
    cdef int radix = q - 1
    cdef long long count = -1
    if stop is not None:
        count = stop - start
    pos_arr = np.asarray(unrank_combination(n, w, start), dtype=np.int64)
    cdef long long[:] pos = pos_arr
    digits_arr = np.zeros(w, dtype=np.int64)
    cdef long long[:] digits = digits_arr
    cdef long long[:] cl = np.zeros(w, dtype=np.int64)
    cdef long long s0, s1, t, done = 0
    cdef long long pat_rank
    cdef int j
    cdef bint more
    while True:
        if count >= 0 and done >= count:
            return None
        # patterns: coefficient 0 pinned to the field's one, rest free
        for j in range(w):
            digits[j] = 0
            cl[j] = clogs[0]
        pat_rank = 0
        while True:
            s0 = -1
            for j in range(w):
                t = t0[pos[j]] + cl[j]
                if t >= N:
                    t -= N
                s0 = zadd(zech, N, s0, t)
            if s0 < 0:
                s1 = -1
                for j in range(w):
                    t = t1[pos[j]] + cl[j]
                    if t >= N:
                        t -= N
                    s1 = zadd(zech, N, s1, t)
                if s1 < 0:
                    return (
                        tuple(pos_arr.tolist()),
                        tuple(half_coeffs(ctx, w, int(pat_rank), True)),
                    )
            if radix > 1 and w > 1:
                more = _next_pattern(digits, 1, w, radix)
                if not more:
                    break
                pat_rank += 1
                for j in range(1, w):
                    cl[j] = clogs[digits[j]]
            else:
                break
        done += 1
        if not _next_combination(pos, w, n):
            return None


def _fill_keys(ctx, int k, bint normalized):
    cdef const long long[:] zech = ctx.zech
    cdef const long long[:] t0 = ctx.t0
    cdef const long long[:] t1 = ctx.t1
    cdef const long long[:] clogs = ctx.clogs
    cdef const long long[:] pack = ctx.pack
    cdef long long N = ctx.N
    cdef int n = ctx.n
    cdef int q = ctx.q
    cdef int radix = q - 1
    cdef int lo_digit = 1 if normalized else 0
    cdef long long npat = ctx.npatterns(k, normalized)
    cdef long long total = comb(n, k) * npat
    out_arr = np.empty(total, dtype=np.int64)
    amax_arr = np.empty(total, dtype=np.int64)
    cdef long long[:] out = out_arr
    cdef long long[:] amax = amax_arr
    pos_arr = np.arange(k, dtype=np.int64)
    cdef long long[:] pos = pos_arr
    cdef long long[:] digits = np.zeros(k, dtype=np.int64)
    cdef long long[:] cl = np.zeros(k, dtype=np.int64)
    cdef long long idx = 0, s0, s1, t, p0, p1
    cdef int j
    cdef bint more
    with nogil:
        while True:
            for j in range(k):
                digits[j] = 0
                cl[j] = clogs[0]
            while True:
                s0 = -1
                s1 = -1
                for j in range(k):
                    t = t0[pos[j]] + cl[j]
                    if t >= N:
                        t -= N
                    s0 = zadd(zech, N, s0, t)
                    t = t1[pos[j]] + cl[j]
                    if t >= N:
                        t -= N
                    s1 = zadd(zech, N, s1, t)
                p0 = 0 if s0 < 0 else pack[s0]
                p1 = 0 if s1 < 0 else pack[s1]
                out[idx] = (p0 << 21) | p1
                amax[idx] = pos[k - 1]
                idx += 1
                if radix > 1 and lo_digit < k:
                    more = _next_pattern(digits, lo_digit, k, radix)
                    if not more:
                        break
                    for j in range(k):
                        cl[j] = clogs[digits[j]]
                else:
                    break
            if not _next_combination(pos, k, n):
                break
    return out_arr, amax_arr


def _probe(ctx, sorted_keys_arr, order_arr, amax_sorted_arr, int kb):
    cdef const long long[:] zech = ctx.zech
    cdef const long long[:] t0 = ctx.t0
    cdef const long long[:] t1 = ctx.t1
    cdef const long long[:] clogs = ctx.clogs
    cdef const long long[:] pack = ctx.pack
    cdef const long long[:] sorted_keys = sorted_keys_arr
    cdef const long long[:] order = order_arr
    cdef const long long[:] amax_sorted = amax_sorted_arr
    cdef long long N = ctx.N
    cdef long long neg = ctx.neg_shift
    cdef long long nkeys = sorted_keys.shape[0]
    cdef int n = ctx.n
    cdef int q = ctx.q
    cdef int radix = q - 1
    cdef long long[:] pos = np.arange(kb, dtype=np.int64)
    cdef long long[:] digits = np.zeros(kb, dtype=np.int64)
    cdef long long[:] cl = np.zeros(kb, dtype=np.int64)
    cdef long long comb_rank = 0, pat_rank, s0, s1, t, key, lo, hi, mid, p0, p1, bmin
    cdef int j
    cdef bint more
    raw = []
    while True:
        bmin = pos[0]
        for j in range(kb):
            digits[j] = 0
            cl[j] = clogs[0]
        pat_rank = 0
        while True:
            s0 = -1
            s1 = -1
            for j in range(kb):
                t = t0[pos[j]] + cl[j]
                if t >= N:
                    t -= N
                s0 = zadd(zech, N, s0, t)
                t = t1[pos[j]] + cl[j]
                if t >= N:
                    t -= N
                s1 = zadd(zech, N, s1, t)
            if s0 >= 0:
                s0 = (s0 + neg) % N
            if s1 >= 0:
                s1 = (s1 + neg) % N
            p0 = 0 if s0 < 0 else pack[s0]
            p1 = 0 if s1 < 0 else pack[s1]
            key = (p0 << 21) | p1
            # lower bound
            lo = 0
            hi = nkeys
            while lo < hi:
                mid = (lo + hi) >> 1
                if sorted_keys[mid] < key:
                    lo = mid + 1
                else:
                    hi = mid
            while lo < nkeys and sorted_keys[lo] == key:
                if amax_sorted[lo] < bmin:
                    raw.append((int(order[lo]), int(comb_rank), int(pat_rank)))
                lo += 1
            if radix > 1 and kb > 0:
                more = _next_pattern(digits, 0, kb, radix)
                if not more:
                    break
                pat_rank += 1
                for j in range(kb):
                    cl[j] = clogs[digits[j]]
            else:
                break
        comb_rank += 1
        if not _next_combination(pos, kb, n):
            break
    return raw


def mitm_collect(ctx, int w):
    """Raw (a_id, b_comb_rank, b_pat_rank) triples whose half-syndromes
    cancel and whose side-A support sits strictly left of side B, i.e. one
    canonical prefix split per scalar class of weight-w codewords."""
    cdef int ka = (w + 1) // 2
    cdef int kb = w // 2
    keys, amax = _fill_keys(ctx, ka, True)
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]
    return _probe(ctx, sorted_keys, order.astype(np.int64), amax[order], kb)


def message_scan(gen, int k, int n, int q, add_table, mul_table):
    """Exact minimum weight over all nonzero messages (see _kernel_py)."""
    gen_arr = np.asarray(gen, dtype=np.int64)
    cdef const long long[:] g = gen_arr
    cdef const long long[:, :] addt = np.ascontiguousarray(add_table, dtype=np.int64)
    cdef const long long[:, :] mult = np.ascontiguousarray(mul_table, dtype=np.int64)
    cdef int dg = gen_arr.shape[0] - 1
    cdef long long[:] msg = np.zeros(k, dtype=np.int64)
    word_arr = np.zeros(k + dg, dtype=np.int64)
    cdef long long[:] word = word_arr
    cdef long long best_w = n + 1
    best = None
    cdef long long total = q**k
    cdef long long it, weight, mi, gj
    cdef int i, j
    for it in range(1, total):
        i = 0
        while msg[i] == q - 1:
            msg[i] = 0
            i += 1
        msg[i] += 1
        with nogil:
            for j in range(k + dg):
                word[j] = 0
            for i in range(k):
                mi = msg[i]
                if mi:
                    for j in range(dg + 1):
                        gj = g[j]
                        if gj:
                            word[i + j] = addt[word[i + j], mult[mi, gj]]
            weight = 0
            for j in range(k + dg):
                if word[j]:
                    weight += 1
        if weight < best_w:
            best_w = weight
            best = tuple(word_arr.tolist()) + (0,) * (n - (k + dg))
    return int(best_w), best
