"""Antiprimitive BCH code assembly: defining set, generator, encoding,
membership, and the LCD/reversibility checks."""

from __future__ import annotations

import random

from .cosets import CyclotomicCoset, coset
from .errors import FieldMismatch, InvalidParams, LengthMismatch, UnsupportedDelta
from .field import FieldElement, FiniteField, embed, make_field, prime_power, root_of_unity
from .poly import Polynomial, is_self_reciprocal, minimal_polynomial


class BchCode:
    """C(q, q^m+1, delta, h): immutable after build()."""

    def __init__(self, q, m, delta, h, base, ambient, beta, cosets, generator):
        self.q = q
        self.m = m
        self.n = q**m + 1
        self.delta = delta
        self.h = h
        self.base: FiniteField = base
        self.ambient: FiniteField = ambient
        self.beta: FieldElement = beta
        self.cosets: tuple[CyclotomicCoset, ...] = cosets
        self.generator: Polynomial = generator
        self.defining_set: tuple[int, ...] = tuple(
            sorted(x for c in cosets for x in c.orbit)
        )
        self.dimension = self.n - generator.degree
        self.embedding = embed(base, ambient)

    @property
    def params(self) -> tuple[int, int]:
        return self.n, self.dimension

    def __repr__(self):
        return f"BchCode(q={self.q}, n={self.n}, delta={self.delta}, h={self.h}, k={self.dimension})"


def build(q: int, m: int, delta: int, h: int) -> BchCode:
    """Construct C(q, q^m+1, delta, h) from first principles.

    The splitting field GF(q^2m) is built, beta = alpha^(q^m-1) taken as the
    primitive n-th root of unity, and the generator assembled as the product
    of the distinct minimal polynomials g_s for s in [h, h+delta-2] (their
    lcm, since they are irreducible and pairwise coprime across cosets).
    """
    p, s_ext = prime_power(q)
    if m < 1:
        raise InvalidParams(f"m must be positive, got {m}")
    n = q**m + 1
    if not 2 <= delta <= n:
        raise InvalidParams(f"designed distance {delta} outside [2, {n}]")
    h %= n
    base = make_field(p, s_ext)
    ambient = make_field(p, 2 * m * s_ext)
    beta = root_of_unity(ambient, q, m)
    seen_leaders = set()
    cs = []
    for s in range(h, h + delta - 1):
        c = coset(q, n, s % n)
        if c.leader not in seen_leaders:
            seen_leaders.add(c.leader)
            cs.append(c)
    gen = Polynomial.one(base)
    for c in cs:
        gen = gen * minimal_polynomial(ambient, beta, c.leader, q, n)
    code = BchCode(q, m, delta, h, base, ambient, beta, tuple(cs), gen)
    # two independent dimension computations must agree
    if code.dimension != n - len(code.defining_set):
        raise AssertionError("dimension from coset sizes disagrees with deg(generator)")
    if not (Polynomial.x_pow_minus_one(base, n) % gen).is_zero():
        raise AssertionError("generator does not divide x^n - 1")
    if not is_self_reciprocal(gen):
        raise AssertionError("antiprimitive generator must be self-reciprocal")
    return code


def parity_check_rows(code: BchCode) -> tuple[tuple[FieldElement, ...], tuple[FieldElement, ...]]:
    """The two syndrome rows (beta^(h i))_i and (beta^((h+1) i))_i over the
    ambient field; only meaningful for designed distance 3."""
    if code.delta != 3:
        raise UnsupportedDelta(code.delta)
    amb = code.ambient
    b = code.beta.packed
    rows = []
    for e in (code.h, code.h + 1):
        be = amb.pow(b, e)
        acc = 1
        row = []
        for _ in range(code.n):
            row.append(amb.element(acc))
            acc = amb.mul(acc, be)
        rows.append(tuple(row))
    return rows[0], rows[1]


def syndrome(code: BchCode, v) -> tuple[FieldElement, FieldElement]:
    """(v(beta^h), v(beta^(h+1))) with v lifted through the subfield embedding."""
    if code.delta != 3:
        raise UnsupportedDelta(code.delta)
    if len(v) != code.n:
        raise LengthMismatch(f"vector length {len(v)} != n={code.n}")
    amb = code.ambient
    up = code.embedding.up
    b = code.beta.packed
    out = []
    for e in (code.h, code.h + 1):
        be = amb.pow(b, e)
        acc = 0
        power = 1
        for c in v:
            if c:
                acc = amb.add(acc, amb.mul(up(c), power))
            power = amb.mul(power, be)
        out.append(amb.element(acc))
    return out[0], out[1]


def encode(code: BchCode, message) -> tuple[int, ...]:
    """Non-systematic encoding: message(x) * g(x), padded to length n.

    Message symbols are packed base-field values.
    """
    msg = tuple(message)
    if len(msg) != code.dimension:
        raise LengthMismatch(
            f"message length {len(msg)} != dimension {code.dimension}"
        )
    word = Polynomial(code.base, msg) * code.generator
    out = list(word.coeffs) + [0] * (code.n - len(word.coeffs))
    return tuple(out)


def is_codeword(code: BchCode, v) -> bool:
    """Membership by g(x) | v(x); cross-checked against the two-row syndrome
    whenever the designed distance is 3."""
    v = tuple(v)
    if len(v) != code.n:
        raise LengthMismatch(f"vector length {len(v)} != n={code.n}")
    by_division = (Polynomial(code.base, v) % code.generator).is_zero()
    if code.delta == 3:
        s0, s1 = syndrome(code, v)
        by_syndrome = not s0 and not s1
        if by_syndrome != by_division:
            raise AssertionError("syndrome and divisibility membership disagree")
    return by_division


def reverse_closed_check(code: BchCode, trials: int, seed: int = 0) -> bool:
    """Coordinate reversal of random codewords stays inside the code
    (reversibility, equivalent to the generator being self-reciprocal)."""
    rng = random.Random(seed)
    q = code.base.order
    for _ in range(trials):
        msg = [rng.randrange(q) for _ in range(code.dimension)]
        word = encode(code, msg)
        if not is_codeword(code, tuple(reversed(word))):
            return False
    return True
