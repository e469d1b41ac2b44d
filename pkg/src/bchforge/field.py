"""Finite fields GF(p^k) with exact element arithmetic.

Elements are stored as packed integers: the coefficient vector
(c_0, ..., c_{k-1}) of the polynomial-basis representation, constant term
first, packs to sum(c_i * p**i). Packing is a bijection onto [0, p^k), so
packed values double as canonical element encodings.

Fields of order at most 2^20 carry discrete-log tables (log, antilog and a
Zech table for addition in the log domain); larger fields fall back to
polynomial-basis arithmetic everywhere. Both multiplication routes exist on
every tabled field so they can be cross-checked.
"""

from __future__ import annotations

import functools
import itertools

from .errors import (
    DegreeZero,
    DivisionByZero,
    FieldMismatch,
    NotDivisor,
    NotPrime,
    NotPrimePower,
    OrderMismatch,
)

TABLE_LIMIT = 1 << 20

# Witness set makes Miller-Rabin deterministic for every n < 3.3e24, far
# beyond any order this package constructs.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (inputs stay below 2^40)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p^s; raises NotPrimePower otherwise."""
    if q < 2:
        raise NotPrimePower(q)
    fac = factorize(q)
    if len(fac) != 1:
        raise NotPrimePower(q)
    (p, s), = fac.items()
    return p, s


class FiniteField:
    """Immutable GF(p^k) context. Construct through make_field()."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = modulus  # length k+1, constant first, monic
        self._log: list[int] | None = None
        self._antilog: list[int] | None = None
        self._zech: list[int] | None = None
        self._primitive: int | None = None
        if self.order <= TABLE_LIMIT:
            self._build_tables()

    # -- packed-integer helpers ------------------------------------------

    def digits(self, a: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(a % p)
            a //= p
        return tuple(out)

    def from_digits(self, digs) -> int:
        p = self.p
        a = 0
        for c in reversed(list(digs)):
            a = a * p + (c % p)
        return a

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        out = 0
        mult = 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        out = 0
        mult = 1
        while a:
            out += (-a % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_basis(self, a: int, b: int) -> int:
        """Polynomial-basis product, reduced by the modulus."""
        p, k = self.p, self.k
        da = self.digits(a)
        prod = [0] * (2 * k - 1)
        bb = b
        i = 0
        while bb:
            cb = bb % p
            if cb:
                for j, ca in enumerate(da):
                    if ca:
                        prod[i + j] = (prod[i + j] + ca * cb) % p
            bb //= p
            i += 1
        # reduce: x^k = -(modulus without leading term)
        red = self.modulus[:k]
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for j, mj in enumerate(red):
                    if mj:
                        idx = deg - k + j
                        prod[idx] = (prod[idx] - c * mj) % p
        return self.from_digits(prod[:k])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        log = self._log
        if log is not None:
            return self._antilog[(log[a] + log[b]) % (self.order - 1)]
        return self._mul_basis(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        log = self._log
        if log is not None:
            return self._antilog[-log[a] % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("inverse of zero")
            return 0 if e else 1
        n = self.order - 1
        e %= n
        log = self._log
        if log is not None:
            return self._antilog[log[a] * e % n]
        out = 1
        base = a
        while e:
            if e & 1:
                out = self._mul_basis(out, base)
            base = self._mul_basis(base, base)
            e >>= 1
        return out

    # -- tables -----------------------------------------------------------

    def _mul_by_x(self, a: int) -> int:
        """Multiply by the basis element x in O(k), used to roll out tables."""
        p, k = self.p, self.k
        digs = list(self.digits(a))
        lead = digs[-1]
        digs = [0] + digs[:-1]
        if lead:
            for j in range(k):
                mj = self.modulus[j]
                if mj:
                    digs[j] = (digs[j] - lead * mj) % p
        return self.from_digits(digs)

    def _build_tables(self) -> None:
        q = self.order
        n = q - 1
        alpha = self._find_primitive()
        antilog = [0] * n
        log = [-1] * q
        acc = 1
        if self.p == 2:
            # multiplication by a fixed element is GF(2)-linear: one XOR per
            # set bit keeps the table roll-out cheap for GF(2^16)
            cols = [self._mul_basis(alpha, 1 << i) for i in range(self.k)]
            for j in range(n):
                antilog[j] = acc
                log[acc] = j
                v = acc
                nxt = 0
                i = 0
                while v:
                    if v & 1:
                        nxt ^= cols[i]
                    v >>= 1
                    i += 1
                acc = nxt
        else:
            for j in range(n):
                antilog[j] = acc
                log[acc] = j
                acc = self._mul_basis(acc, alpha)
        if acc != 1:
            raise AssertionError("antilog table does not close with period q-1")
        # Zech logs: zech[j] = log(1 + alpha^j), -1 when the sum is zero.
        p = self.p
        zech = [0] * n
        for j in range(n):
            v = antilog[j]
            c0 = v % p
            s = v - c0 + (c0 + 1) % p
            zech[j] = log[s] if s else -1
        self._antilog = antilog
        self._log = log
        self._zech = zech
        self._primitive = alpha

    def _find_primitive(self) -> int:
        if self._primitive is not None:
            return self._primitive
        n = self.order - 1
        if n == 1:
            self._primitive = 1
            return 1
        primes = list(factorize(n))
        for a in range(2, self.order):
            if all(self._pow_basis(a, n // r) != 1 for r in primes):
                self._primitive = a
                return a
        raise AssertionError("no primitive element found")

    def _pow_basis(self, a: int, e: int) -> int:
        out = 1
        base = a
        while e:
            if e & 1:
                out = self._mul_basis(out, base)
            base = self._mul_basis(base, base)
            e >>= 1
        return out

    @property
    def has_tables(self) -> bool:
        return self._log is not None

    def log(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("discrete log of zero")
        if self._log is None:
            raise OrderMismatch("field has no discrete-log tables")
        return self._log[a]

    def exp(self, j: int) -> int:
        if self._antilog is not None:
            return self._antilog[j % (self.order - 1)]
        return self.pow(self._find_primitive(), j)

    # -- element façade ----------------------------------------------------

    def element(self, packed: int) -> "FieldElement":
        if not 0 <= packed < self.order:
            raise ValueError(f"packed value {packed} out of range for order {self.order}")
        return FieldElement(self, packed)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        return (FieldElement(self, v) for v in range(self.order))

    def __eq__(self, other):
        return self is other or (
            isinstance(other, FiniteField)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"


class FieldElement:
    """Value-type element of a FiniteField; mixed-field arithmetic is a hard error."""

    __slots__ = ("field", "packed")

    def __init__(self, field: FiniteField, packed: int):
        self.field = field
        self.packed = packed

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.digits(self.packed)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.packed
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.packed, self._other(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.packed, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.packed))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.packed, self._other(other)))

    def __truediv__(self, other):
        b = self._other(other)
        if b == 0:
            raise DivisionByZero("division by zero element")
        return FieldElement(self.field, self.field.div(self.packed, b))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.packed, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.packed))

    def __bool__(self):
        return self.packed != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.packed == other.packed
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.packed))

    def __repr__(self):
        return f"{self.field}:{','.join(map(str, self.coeffs))}"

    def multiplicative_order(self) -> int:
        if self.packed == 0:
            raise DivisionByZero("order of zero")
        n = self.field.order - 1
        o = n
        for r in factorize(n):
            while o % r == 0 and self.field.pow(self.packed, o // r) == 1:
                o //= r
        return o


# -- construction ----------------------------------------------------------


def _gf_p_polymul(p, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = (out[i + j] + ca * cb) % p
    return out


def _gf_p_polymod(p, a, m):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    for deg in range(len(a) - 1, dm - 1, -1):
        c = a[deg]
        if c:
            f = c * inv_lead % p
            for j in range(dm + 1):
                a[deg - dm + j] = (a[deg - dm + j] - f * m[j]) % p
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _gf_p_polygcd(p, a, b):
    a, b = list(a), list(b)
    while b != [0]:
        a, b = b, _gf_p_polymod(p, a, b)
    return a


def _is_irreducible(p: int, coeffs: tuple[int, ...]) -> bool:
    """Degree-k monic poly is irreducible iff it shares no factor with
    x^(p^j) - x for 1 <= j <= k/2."""
    k = len(coeffs) - 1
    if k == 1:
        return True
    m = list(coeffs)
    t = [0, 1]  # x
    for j in range(1, k // 2 + 1):
        # t <- t^p mod m
        acc = [1]
        base = t
        e = p
        while e:
            if e & 1:
                acc = _gf_p_polymod(p, _gf_p_polymul(p, acc, base), m)
            base = _gf_p_polymod(p, _gf_p_polymul(p, base, base), m)
            e >>= 1
        t = acc
        diff = list(t)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        while len(diff) > 1 and diff[-1] == 0:
            diff.pop()
        if diff == [0]:
            return False  # every root of m has degree dividing j
        g = _gf_p_polygcd(p, m, diff)
        if len(g) - 1 > 0:
            return False
    return True


@functools.lru_cache(maxsize=None)
def make_field(p: int, k: int) -> FiniteField:
    """GF(p^k) with the lexicographically first monic irreducible modulus
    (coefficient order: constant term first). Deterministic across runs."""
    if k <= 0:
        raise DegreeZero(f"extension degree must be positive, got {k}")
    if not is_prime(p):
        raise NotPrime(p)
    for coeffs in itertools.product(range(p), repeat=k):
        if k > 1 and coeffs[0] == 0:
            continue
        cand = coeffs + (1,)
        if _is_irreducible(p, cand):
            return FiniteField(p, k, cand)
    raise AssertionError("no irreducible modulus found")  # unreachable


def primitive_element(field: FiniteField) -> FieldElement:
    """First element in packed (coefficient-vector) order whose multiplicative
    order is the full group order; verified through the factorization of q-1."""
    return field.element(field._find_primitive())


def root_of_unity(field: FiniteField, q: int, m: int) -> FieldElement:
    """Primitive (q^m+1)-th root of unity in GF(q^2m): alpha^(q^m - 1)."""
    if field.order != q ** (2 * m):
        raise OrderMismatch(
            f"field order {field.order} is not {q}^{2 * m}"
        )
    alpha = field._find_primitive()
    return field.element(field.pow(alpha, q**m - 1))


def unit_group(field: FiniteField, l: int) -> list[FieldElement]:
    """All l-th roots of unity, sorted by discrete log."""
    n = field.order - 1
    if l <= 0 or n % l:
        raise NotDivisor(l, n)
    step = n // l
    alpha = field._find_primitive()
    out = []
    acc = 1
    g = field.pow(alpha, step)
    for _ in range(l):
        out.append(field.element(acc))
        acc = field.mul(acc, g)
    return out


class SubfieldEmbedding:
    """Field embedding GF(q) -> GF(q^2m) used to move generator-polynomial
    coefficients between the two representations.

    Built by locating a root of the small field's modulus inside the big
    field (smallest packed root, so the map is deterministic). up/down work
    on packed values; down requires the element to be Frobenius-fixed.
    """

    def __init__(self, base: FiniteField, ambient: FiniteField):
        if base.p != ambient.p or ambient.k % base.k:
            raise OrderMismatch(f"{base} does not embed in {ambient}")
        self.base = base
        self.ambient = ambient
        q = base.order
        step = (ambient.order - 1) // (q - 1) if q > 1 else 0
        alpha = ambient._find_primitive()
        gen = ambient.pow(alpha, step)
        candidates = [0]
        acc = 1
        for _ in range(q - 1):
            candidates.append(acc)
            acc = ambient.mul(acc, gen)
        root = None
        for cand in sorted(candidates):
            # evaluate base.modulus at cand, Horner from the leading term
            val = 0
            for c in reversed(base.modulus):
                val = ambient.add(ambient.mul(val, cand), c % ambient.p)
            if val == 0:
                root = cand
                break
        if root is None:
            raise AssertionError("modulus has no root in the ambient field")
        self.root = root
        up = [0] * q
        for v in range(q):
            acc = 0
            for c in reversed(base.digits(v)):
                acc = ambient.add(ambient.mul(acc, root), c)
            up[v] = acc
        self._up = up
        self._down = {amb: v for v, amb in enumerate(up)}

    def up(self, packed: int) -> int:
        return self._up[packed]

    def down(self, packed: int) -> int:
        return self._down[packed]

    def contains(self, packed: int) -> bool:
        return packed in self._down


@functools.lru_cache(maxsize=None)
def embed(base: FiniteField, ambient: FiniteField) -> SubfieldEmbedding:
    return SubfieldEmbedding(base, ambient)
