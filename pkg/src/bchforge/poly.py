"""Dense polynomials over a finite field.

Coefficients are stored as a tuple of packed field values, index = exponent,
with the leading coefficient nonzero (the zero polynomial is the empty
tuple). All gcd/lcm/minimal-polynomial results are returned monic so that
equality tests need no extra normalization.
"""

from __future__ import annotations

from .cosets import coset
from .errors import (
    BothZero,
    CoefficientNotInBaseField,
    DivisionByZero,
    FieldMismatch,
    ZeroConstantTerm,
)
from .field import FieldElement, FiniteField, embed, make_field, prime_power


class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def x_pow_minus_one(cls, field, n: int):
        """x^n - 1."""
        cs = [0] * (n + 1)
        cs[0] = field.neg(1)
        cs[n] = 1
        return cls(field, cs)

    @classmethod
    def from_elements(cls, elems):
        elems = list(elems)
        if not elems:
            raise ValueError("need at least one element to infer the field")
        field = elems[0].field
        for e in elems:
            if e.field != field:
                raise FieldMismatch("coefficients from different fields")
        return cls(field, [e.packed for e in elems])

    # -- basics ------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def element(self, i: int) -> FieldElement:
        return self.field.element(self.coeff(i))

    def elements(self) -> tuple[FieldElement, ...]:
        return tuple(self.field.element(c) for c in self.coeffs)

    def _check(self, other: "Polynomial"):
        if self.field != other.field:
            raise FieldMismatch("polynomials over different fields")

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "Poly[0]"
        return "Poly[" + " ".join(",".join(map(str, self.field.digits(c))) for c in self.coeffs) + "]"

    # -- ring arithmetic ----------------------------------------------------

    def __add__(self, other):
        self._check(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(f, [f.add(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __sub__(self, other):
        self._check(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(f, [f.sub(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __neg__(self):
        f = self.field
        return Polynomial(f, [f.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        self._check(other)
        f = self.field
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(f)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Polynomial(f, out)

    def scale(self, c: int) -> "Polynomial":
        f = self.field
        return Polynomial(f, [f.mul(a, c) for a in self.coeffs])

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dg = other.degree
        inv_lead = f.inv(other.coeffs[-1])
        if len(rem) <= dg:
            return Polynomial.zero(f), Polynomial(f, rem)
        quo = [0] * (len(rem) - dg)
        for deg in range(len(rem) - 1, dg - 1, -1):
            c = rem[deg]
            if c:
                q = f.mul(c, inv_lead)
                quo[deg - dg] = q
                for j, b in enumerate(other.coeffs):
                    if b:
                        rem[deg - dg + j] = f.sub(rem[deg - dg + j], f.mul(q, b))
        return Polynomial(f, quo), Polynomial(f, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return self.scale(self.field.inv(lead))

    def evaluate(self, x: FieldElement) -> FieldElement:
        if x.field != self.field:
            raise FieldMismatch("evaluation point from another field")
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x.packed), c)
        return f.element(acc)

    def pow_mod(self, e: int, modulus: "Polynomial") -> "Polynomial":
        out = Polynomial.one(self.field)
        base = self % modulus
        while e:
            if e & 1:
                out = (out * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return out


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd; gcd(f, 0) is monic(f)."""
    f._check(g)
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    if f.is_zero() and g.is_zero():
        raise BothZero("lcm(0, 0) is undefined")
    if f.is_zero() or g.is_zero():
        return Polynomial.zero(f.field)
    return ((f * g) // poly_gcd(f, g)).monic()


def reciprocal(f: Polynomial) -> Polynomial:
    """f*(x) = f0^-1 x^deg(f) f(1/x); needs nonzero constant and lead terms."""
    if f.is_zero() or f.coeffs[0] == 0:
        raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
    inv0 = f.field.inv(f.coeffs[0])
    return Polynomial(f.field, [f.field.mul(c, inv0) for c in reversed(f.coeffs)])


def is_self_reciprocal(f: Polynomial) -> bool:
    return reciprocal(f) == f


def is_irreducible(f: Polynomial) -> bool:
    """Shares-no-factor test against x^(q^j) - x for 1 <= j <= deg/2."""
    k = f.degree
    if k <= 0:
        return False
    if k == 1:
        return True
    q = f.field.order
    x = Polynomial.x(f.field)
    t = x
    for _ in range(k // 2):
        t = t.pow_mod(q, f)
        diff = t - x
        if diff.is_zero():
            return False
        if poly_gcd(f, diff).degree > 0:
            return False
    return True


def minimal_polynomial(
    ambient: FiniteField, beta: FieldElement, s: int, q: int, n: int
) -> Polynomial:
    """Minimal polynomial of beta^s over GF(q): the product of (x - beta^i)
    over the q-cyclotomic coset of s mod n, re-expressed over GF(q).

    Every coefficient of the expanded product must be fixed by the q-power
    Frobenius; anything else means the field tower or beta is wrong.
    """
    if beta.field != ambient:
        raise FieldMismatch("beta must live in the ambient field")
    p, es = prime_power(q)
    if p != ambient.p:
        raise FieldMismatch("base and ambient characteristics differ")
    base = make_field(p, es)
    emb = embed(base, ambient)
    orbit = coset(q, n, s).elements
    prod = Polynomial.one(ambient)
    for i in orbit:
        root = ambient.pow(beta.packed, i)
        prod = prod * Polynomial(ambient, [ambient.neg(root), 1])
    down = []
    for c in prod.coeffs:
        if ambient.pow(c, q) != c or not emb.contains(c):
            raise CoefficientNotInBaseField(
                f"coefficient {c} of g_{s} is not fixed by the {q}-power Frobenius"
            )
        down.append(emb.down(c))
    out = Polynomial(base, down)
    if out.degree != len(orbit) or out.coeffs[-1] != 1:
        raise AssertionError("minimal polynomial has wrong shape")
    if not is_irreducible(out):
        raise AssertionError(f"g_{s} is not irreducible over GF({q})")
    if not (Polynomial.x_pow_minus_one(base, n) % out).is_zero():
        raise AssertionError(f"g_{s} does not divide x^{n} - 1")
    return out
