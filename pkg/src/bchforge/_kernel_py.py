"""Pure-Python search kernels.

Reference implementation of the hot loops; the compiled module in
_kernel_cy.pyx mirrors these semantics exactly. Selection happens in
_kernel.py. Keep this file boring and obviously correct.
"""

from __future__ import annotations

from itertools import combinations, product

from ._kernel_common import SearchContext, pair_key, unrank_combination, zadd

NAME = "python"


def _syndrome(ctx: SearchContext, positions, coeff_logs):
    zech, N = ctx.zech, ctx.N
    t0, t1 = ctx.t0, ctx.t1
    s0 = s1 = -1
    for i, lc in zip(positions, coeff_logs):
        t = int(t0[i]) + lc
        if t >= N:
            t -= N
        s0 = zadd(zech, N, s0, t)
        u = int(t1[i]) + lc
        if u >= N:
            u -= N
        s1 = zadd(zech, N, s1, u)
    return s0, s1


def _coeff_log_patterns(ctx: SearchContext, k, normalized):
    """Yield (pattern_rank, coeff_logs) in canonical order."""
    clogs = [int(c) for c in ctx.clogs]
    free = k - 1 if normalized else k
    head = [clogs[0]] if normalized else []
    for rank, digits in enumerate(product(range(ctx.q - 1), repeat=free)):
        yield rank, head + [clogs[d] for d in digits]


def support_search(ctx: SearchContext, w: int, start: int = 0, stop: int | None = None):
    """First weight-w vector (support lex order, then coefficient order,
    first coefficient normalized to 1) with zero syndrome, or None."""
    n = ctx.n
    combos = combinations(range(n), w)
    if start or stop is not None:
        first = unrank_combination(n, w, start)
        combos = _combos_from(n, w, first, (stop - start) if stop is not None else None)
    patterns = list(_coeff_log_patterns(ctx, w, True))
    for pos in combos:
        for rank, logs in patterns:
            s0, s1 = _syndrome(ctx, pos, logs)
            if s0 < 0 and s1 < 0:
                coeffs = _pattern_coeffs(ctx, w, rank)
                return tuple(pos), tuple(coeffs)
    return None


def _pattern_coeffs(ctx, k, rank):
    from ._kernel_common import half_coeffs

    return half_coeffs(ctx, k, rank, True)


def _combos_from(n, k, first, count):
    pos = list(first)
    emitted = 0
    while True:
        if count is not None and emitted >= count:
            return
        yield tuple(pos)
        emitted += 1
        i = k - 1
        while i >= 0 and pos[i] == n - k + i:
            i -= 1
        if i < 0:
            return
        pos[i] += 1
        for j in range(i + 1, k):
            pos[j] = pos[j - 1] + 1


def mitm_collect(ctx: SearchContext, w: int):
    """Meet-in-the-middle over a weight split ceil(w/2) + floor(w/2).

    Side A (normalized first coefficient) is hashed by syndrome key; side B
    (arbitrary nonzero coefficients) probes with the negated key. Both sides
    range over every position, but a match is only kept when all of side A
    sits strictly left of side B: that selects the one canonical prefix
    split of each weight-w codeword (disjointness for free, no duplicate
    splits) without ever constraining which positions a half may use.
    Returns raw (a_id, b_comb_rank, b_pat_rank) triples.
    """
    ka = (w + 1) // 2
    kb = w // 2
    pack, zech, N = ctx.pack, ctx.zech, ctx.N
    table: dict[int, list[tuple[int, int]]] = {}
    patterns_a = list(_coeff_log_patterns(ctx, ka, True))
    npat_a = len(patterns_a)
    for comb_rank, pos in enumerate(combinations(range(ctx.n), ka)):
        amax = pos[-1]
        for pat_rank, logs in patterns_a:
            s0, s1 = _syndrome(ctx, pos, logs)
            key = pair_key(pack, s0, s1)
            table.setdefault(key, []).append((comb_rank * npat_a + pat_rank, amax))
    raw = []
    neg = ctx.neg_shift
    patterns_b = list(_coeff_log_patterns(ctx, kb, False))
    for comb_rank, pos in enumerate(combinations(range(ctx.n), kb)):
        bmin = pos[0]
        for pat_rank, logs in patterns_b:
            s0, s1 = _syndrome(ctx, pos, logs)
            if s0 >= 0:
                s0 = (s0 + neg) % N
            if s1 >= 0:
                s1 = (s1 + neg) % N
            hits = table.get(pair_key(pack, s0, s1))
            if hits:
                for a_id, amax in hits:
                    if amax < bmin:
                        raw.append((a_id, comb_rank, pat_rank))
    return raw


def message_scan(gen, k: int, n: int, q: int, add_table, mul_table):
    """Exact minimum weight by enumerating all q^k - 1 nonzero messages.

    gen holds the packed generator coefficients; add/mul tables are q x q.
    Returns (weight, codeword tuple) for the first message attaining the
    minimum, messages enumerated with digit 0 varying fastest.
    """
    dg = len(gen) - 1
    best_w = n + 1
    best = None
    msg = [0] * k
    total = q**k
    word = [0] * (k + dg)
    for _ in range(1, total):
        i = 0
        while msg[i] == q - 1:
            msg[i] = 0
            i += 1
        msg[i] += 1
        for j in range(k + dg):
            word[j] = 0
        for i, mi in enumerate(msg):
            if mi:
                row = mul_table[mi]
                for j, gj in enumerate(gen):
                    if gj:
                        word[i + j] = add_table[word[i + j]][row[gj]]
        weight = sum(1 for c in word if c)
        if weight < best_w:
            best_w = weight
            best = tuple(word) + (0,) * (n - len(word))
    return best_w, best
