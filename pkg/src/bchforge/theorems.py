"""Distance predictions for C(q, q^m+1, 3, h) as executable rules.

Every closed-form result about these codes is a predicate or parameter
formula here, each returning an honest Prediction (exact value, bounded
range, or lower bound — "5 or 6" stays a range). verify() evaluates every
applicable rule against a measured distance; rules that both apply must be
mutually consistent, and an empty intersection is a build-failing error.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from . import bch
from .distance import DEFAULT_BUDGET, DistanceReport, SearchBudget, min_distance
from .errors import (
    CapExceeded,
    EqualArguments,
    GcdViolation,
    NotInvertible,
    RegimeMismatch,
    TheoremInconsistency,
)
from .field import FieldElement, make_field, prime_power, unit_group

DEFAULT_QUADRUPLE_CAP = 50


# -- predictions -------------------------------------------------------------


@dataclass(frozen=True)
class Prediction:
    """Closed interval [lo, hi] of possible distances; hi=None means open."""

    lo: int
    hi: int | None

    @classmethod
    def exact(cls, v: int) -> "Prediction":
        return cls(v, v)

    @classmethod
    def at_least(cls, v: int) -> "Prediction":
        return cls(v, None)

    @classmethod
    def between(cls, lo: int, hi: int) -> "Prediction":
        return cls(lo, hi)

    @property
    def is_exact(self) -> bool:
        return self.hi == self.lo

    def contains(self, d: int) -> bool:
        return self.lo <= d and (self.hi is None or d <= self.hi)

    def intersect(self, other: "Prediction") -> "Prediction":
        lo = max(self.lo, other.lo)
        if self.hi is None:
            hi = other.hi
        elif other.hi is None:
            hi = self.hi
        else:
            hi = min(self.hi, other.hi)
        if hi is not None and lo > hi:
            raise TheoremInconsistency(f"{self.label()} excludes {other.label()}")
        return Prediction(lo, hi)

    def label(self) -> str:
        if self.hi is None:
            return f">={self.lo}"
        if self.hi == self.lo:
            return str(self.lo)
        return f"{self.lo}..{self.hi}"


@dataclass
class TheoremVerdict:
    """One rule's claim about one code, later bound to a measurement."""

    rule_id: str
    q: int
    m: int
    h: int
    prediction: Prediction | None  # None = informational only, no claim
    dimension_claim: int | None = None
    note: str = ""
    agrees: str = "untested"  # match | mismatch | untested


# -- number-theoretic closed forms -------------------------------------------


def gcd_plus_plus(p: int, i: int, s: int) -> int:
    """gcd(p^i + 1, p^s + 1) in closed form, checked against the direct gcd."""
    g = math.gcd(i, s)
    if (i // g) % 2 == 1 and (s // g) % 2 == 1:
        out = p**g + 1
    else:
        out = 1 if p % 2 == 0 else 2
    if out != math.gcd(p**i + 1, p**s + 1):
        raise AssertionError(f"closed form gcd(p^i+1, p^s+1) wrong at {(p, i, s)}")
    return out


def gcd_minus_plus(p: int, i: int, s: int) -> int:
    """gcd(p^i - 1, p^s + 1) in closed form, checked against the direct gcd."""
    g = math.gcd(i, s)
    if (i // g) % 2 == 0:
        out = p**g + 1
    else:
        out = 1 if p % 2 == 0 else 2
    if out != math.gcd(p**i - 1, p**s + 1):
        raise AssertionError(f"closed form gcd(p^i-1, p^s+1) wrong at {(p, i, s)}")
    return out


# -- distance predicates ------------------------------------------------------


def d3_criterion(q: int, m: int, h: int) -> bool:
    """d == 3 iff gcd(2h+1, q+1, q^m+1) != 1.

    The equivalent parity form (m odd and gcd(2h+1, q+1) != 1) is computed
    alongside and the two must agree.
    """
    n = q**m + 1
    h %= n
    joint = math.gcd(math.gcd(2 * h + 1, q + 1), n) != 1
    parity = (m % 2 == 1) and math.gcd(2 * h + 1, q + 1) != 1
    if joint != parity:
        raise AssertionError(f"d=3 criterion forms disagree at {(q, m, h)}")
    return joint


def odd_odd_distance(q: int, m: int, h: int) -> int:
    """Exact distance for odd q, odd m: 3 iff gcd(2h+1, q+1) != 1, else 4."""
    if q % 2 == 0 or m % 2 == 0:
        raise RegimeMismatch(f"needs odd q and odd m, got q={q}, m={m}")
    h %= q**m + 1
    return 3 if math.gcd(2 * h + 1, q + 1) != 1 else 4


def d4_sufficient_q_odd_m_even(q: int, m: int, h: int) -> str:
    """"certified-4" when gcd(h, n) >= 3 or gcd(h+1, n) >= 3; else "unknown".

    Sufficient only: (q,m,h)=(5,2,2) has d=4 with neither gcd condition.
    """
    if q % 2 == 0 or m % 2 == 1:
        raise RegimeMismatch(f"needs odd q and even m, got q={q}, m={m}")
    n = q**m + 1
    h %= n
    if math.gcd(h, n) >= 3 or math.gcd(h + 1, n) >= 3:
        return "certified-4"
    return "unknown"


def ternary_d6_certificate(m: int, h: int) -> bool:
    """For q=3, m = 0 mod 4 and both gcd(h,n), gcd(h+1,n) <= 2: d >= 6 when
    (h+1)*3^i = 2h (mod 3^m+1) for some 0 <= i < 2m."""
    n = 3**m + 1
    h %= n
    if m % 4 != 0 or math.gcd(h, n) > 2 or math.gcd(h + 1, n) > 2:
        return False
    target = 2 * h % n
    v = (h + 1) % n
    for _ in range(2 * m):
        if v == target:
            return True
        v = v * 3 % n
    return False


def ternary_distance(m: int, h: int) -> Prediction:
    """Distance of C(3, 3^m+1, 3, h): the four-way case split, with the
    d >= 6 certificate applied on the m = 0 mod 4 branch.

    For q=3 the d=3 case never fires (2h+1 is odd, so gcd(2h+1, 4) = 1),
    which is exactly what the odd/odd characterization forces.
    """
    n = 3**m + 1
    h %= n
    if m % 2 == 1:
        return Prediction.exact(odd_odd_distance(3, m, h))
    if math.gcd(h, n) >= 3 or math.gcd(h + 1, n) >= 3:
        return Prediction.exact(4)
    if m % 4 == 2:
        return Prediction.exact(5)
    if ternary_d6_certificate(m, h):
        return Prediction.at_least(6)
    return Prediction.at_least(5)


def even_q_inverse_family(q: int, m: int, i: int):
    """Parameters of the family h = (q^i - 1)^(-1) mod n for even q.

    Returns (h, n, k, d) with d a Prediction; k = q^m + 1 - 2m because
    C_h = C_{h+1} collapses to a single 2m-coset.
    """
    if q % 2 or q < 2:
        raise RegimeMismatch(f"needs even q, got {q}")
    if not 1 <= i <= 2 * m - 1:
        raise RegimeMismatch(f"i={i} outside [1, {2 * m - 1}]")
    n = q**m + 1
    if math.gcd(q**i - 1, n) != 1:
        raise NotInvertible(f"q^{i} - 1 is not invertible mod {n}")
    h = pow(q**i - 1, -1, n)
    k = n - 2 * m
    if m % 2 == 1:
        d = Prediction.exact(3)
    elif q > 2:
        d = Prediction.exact(4)
    elif m % 4 == 2:
        d = Prediction.exact(5)
    else:
        d = Prediction.between(5, 6)
    return h, n, k, d


def binary_refined_distance(m: int) -> Prediction:
    """C(2, 2^m+1, 3, 1) with m = 0 mod 4: exactly 5 unless 16 | m, where
    only the range 5..6 is proven."""
    if m % 4 != 0 or m <= 0:
        raise RegimeMismatch(f"needs m = 0 mod 4, got {m}")
    return Prediction.exact(5) if m % 16 else Prediction.between(5, 6)


@dataclass(frozen=True)
class HalfFamilyCode:
    """The subfield subcode family h = (q^m - 2^i)/2, q = 2^s."""

    s: int
    m: int
    i: int
    h: int
    n: int
    k: int
    d: Prediction
    mds_parent: tuple[int, int, int]  # parameters of the MDS code upstairs
    subcode_dimension_floor: int  # n - m*(n - k_parent)


def half_family_params(s: int, m: int, i: int) -> HalfFamilyCode:
    if s < 1 or m <= 1:
        raise RegimeMismatch(f"needs s >= 1 and m > 1, got s={s}, m={m}")
    if not 0 < i < s * m or math.gcd(i, s * m) != 1:
        raise GcdViolation(f"need 0 < i < sm and gcd(i, sm) = 1, got i={i}, sm={s * m}")
    q = 2**s
    n = q**m + 1
    h = (q**m - 2**i) // 2
    floor = n - 4 * m  # subfield-subcode dimension bound with t = m
    if (s, m, i) in ((1, 2, 1), (1, 3, 1), (1, 3, 2)):
        k, d = 1, Prediction.exact(n)
    elif (s * m) % 4 == 2:
        k, d = n - 4 * m, Prediction.exact(5)
    else:
        k, d = n - 4 * m, Prediction.at_least(5)
    if k < floor and k != 1:
        raise AssertionError("subcode dimension fell below the subfield bound")
    return HalfFamilyCode(s, m, i, h, n, k, d, (n, q**m - 3, 5), floor)


# -- determinant / difference-quotient helpers --------------------------------


def pair_determinant(x: FieldElement, y: FieldElement, h: int) -> FieldElement:
    """det[[x^h, y^h], [x^(h+1), y^(h+1)]] = x^h y^h (y - x)."""
    return x**h * y**h * (y - x)


def odd_power_quotient(x: FieldElement, y: FieldElement, h: int) -> FieldElement:
    """(x^(2h+1) - y^(2h+1)) / (x - y) for x != y."""
    if x == y:
        raise EqualArguments("difference quotient needs x != y")
    return (x ** (2 * h + 1) - y ** (2 * h + 1)) / (x - y)


def quadruple_search(
    q: int,
    m: int,
    h: int,
    group: str = "full",
    cap: int = DEFAULT_QUADRUPLE_CAP,
):
    """Four pairwise distinct unit-group elements x, y, z, w with
    E(x,z)/E(x,w) = E(y,z)/E(y,w), or None.

    group="full" searches U_{q^m+1} (the d=4 necessary condition; requires
    gcd(2h+1, q^m+1) = 1), group="subfield" searches U_{q+1} (the d=4
    sufficient condition for odd m; requires gcd(2h+1, q+1) = 1). For odd q
    the known witness shape (x, 1/x, 1, -1) is tried first.
    """
    p, s = prime_power(q)
    n = q**m + 1
    h %= n
    if group == "full":
        if math.gcd(2 * h + 1, n) != 1:
            raise RegimeMismatch("full-group search needs gcd(2h+1, q^m+1) = 1")
        l = n
    elif group == "subfield":
        if m % 2 == 0:
            raise RegimeMismatch("subfield-group search needs odd m")
        if math.gcd(2 * h + 1, q + 1) != 1:
            raise RegimeMismatch("subfield-group search needs gcd(2h+1, q+1) = 1")
        l = q + 1
    else:
        raise ValueError(f"unknown group {group!r}")
    if l > cap:
        raise CapExceeded(l, cap)
    ambient = make_field(p, 2 * m * s)
    units = unit_group(ambient, l)
    one = ambient.one()
    e = 2 * h + 1

    powers = [u**e for u in units]

    def quot(xi, zi):
        num = powers[xi] - powers[zi]
        den = units[xi] - units[zi]
        out = num / den
        if not out:
            raise AssertionError("difference quotient vanished under the gcd premise")
        return out

    if q % 2 == 1:
        minus_one = -one
        zi = units.index(one)
        wi = units.index(minus_one)
        for xi, x in enumerate(units):
            if x in (one, minus_one):
                continue
            y = x.inverse()
            if y in (x, one, minus_one):
                continue
            yi = units.index(y)
            if quot(xi, zi) / quot(xi, wi) == quot(yi, zi) / quot(yi, wi):
                return units[xi], y, one, minus_one
    for zi in range(l):
        for wi in range(l):
            if wi == zi:
                continue
            seen: dict[int, int] = {}
            for xi in range(l):
                if xi in (zi, wi):
                    continue
                r = (quot(xi, zi) / quot(xi, wi)).packed
                if r in seen:
                    return units[seen[r]], units[xi], units[zi], units[wi]
                seen[r] = xi
    return None


# -- rule evaluation -----------------------------------------------------------


def applicable_verdicts(
    q: int, m: int, h: int, quadruple_cap: int = DEFAULT_QUADRUPLE_CAP
) -> list[TheoremVerdict]:
    """Every rule that applies to (q, m, h), with its prediction."""
    n = q**m + 1
    h %= n
    out = []

    if d3_criterion(q, m, h):
        out.append(TheoremVerdict("d3-gcd", q, m, h, Prediction.exact(3)))
    else:
        out.append(TheoremVerdict("d3-gcd", q, m, h, Prediction.at_least(4)))

    if q % 2 == 1 and m % 2 == 1:
        out.append(
            TheoremVerdict(
                "odd-q-odd-m", q, m, h, Prediction.exact(odd_odd_distance(q, m, h))
            )
        )

    if q % 2 == 1 and m % 2 == 0 and d4_sufficient_q_odd_m_even(q, m, h) == "certified-4":
        out.append(TheoremVerdict("shared-factor-d4", q, m, h, Prediction.exact(4)))

    if q == 3:
        out.append(TheoremVerdict("ternary", q, m, h, ternary_distance(m, h)))
        if ternary_d6_certificate(m, h):
            out.append(
                TheoremVerdict("ternary-d6", q, m, h, Prediction.at_least(6))
            )

    if q % 2 == 1 and h in (0, n // 2):
        out.append(
            TheoremVerdict(
                "h-zero-or-half", q, m, h, Prediction.exact(4),
                dimension_claim=q**m - 2 * m,
            )
        )

    if q % 2 == 0:
        for i in range(1, 2 * m):
            if math.gcd(q**i - 1, n) == 1 and (q**i - 1) * h % n == 1:
                hh, _, k, d = even_q_inverse_family(q, m, i)
                out.append(
                    TheoremVerdict(
                        "inverse-power-h", q, m, h, d,
                        dimension_claim=k, note=f"i={i}",
                    )
                )
                break

    if q == 2 and h == 1 and m > 0 and m % 4 == 0:
        out.append(
            TheoremVerdict(
                "binary-h1", q, m, h, binary_refined_distance(m),
                dimension_claim=n - 2 * m,
            )
        )

    if q % 2 == 0 and m > 1:
        p, s = prime_power(q)
        for i in range(1, s * m):
            if math.gcd(i, s * m) == 1 and h == (q**m - 2**i) // 2:
                fam = half_family_params(s, m, i)
                out.append(
                    TheoremVerdict(
                        "mds-subcode-family", q, m, h, fam.d,
                        dimension_claim=fam.k,
                        note=f"i={i}, parent MDS {list(fam.mds_parent)}",
                    )
                )
                break

    if quadruple_cap > 0 and math.gcd(2 * h + 1, n) == 1 and n <= quadruple_cap:
        quad = quadruple_search(q, m, h, "full", quadruple_cap)
        if quad is None:
            out.append(
                TheoremVerdict(
                    "quadruple-necessary", q, m, h, Prediction.at_least(5),
                    note="no unit-group quadruple",
                )
            )
        else:
            out.append(
                TheoremVerdict(
                    "quadruple-necessary", q, m, h, None,
                    note="quadruple exists; d=4 stays possible",
                )
            )

    if (
        quadruple_cap > 0
        and m % 2 == 1
        and q + 1 <= quadruple_cap
        and math.gcd(2 * h + 1, q + 1) == 1
    ):
        quad = quadruple_search(q, m, h, "subfield", quadruple_cap)
        if quad is not None:
            out.append(
                TheoremVerdict("quadruple-sufficient", q, m, h, Prediction.exact(4))
            )

    return out


def combine_predictions(verdicts) -> Prediction:
    """Intersection of every claimed prediction plus the designed-distance
    floor; an empty intersection raises (build-failing)."""
    combined = Prediction.at_least(3)
    for v in verdicts:
        if v.prediction is not None:
            combined = combined.intersect(v.prediction)
    return combined


@dataclass
class VerificationResult:
    q: int
    m: int
    h: int
    n: int
    k: int
    verdicts: list[TheoremVerdict]
    predicted: Prediction
    report: DistanceReport | None
    agrees: str  # match | mismatch | untested
    elapsed_ms: float = 0.0

    @property
    def theorem_ids(self) -> list[str]:
        return [v.rule_id for v in self.verdicts]

    def measured_label(self) -> str:
        if self.report is None:
            return "untested"
        return str(self.report.d) if self.report.exact else f">{self.report.d - 1}"


def _judge(prediction: Prediction, report: DistanceReport) -> str:
    if report.exact:
        return "match" if prediction.contains(report.d) else "mismatch"
    # only d >= report.d is known: that settles open-ended predictions,
    # refutes a bounded one when the bound is exceeded, else proves nothing
    if prediction.hi is not None:
        return "mismatch" if report.d > prediction.hi else "untested"
    return "match" if report.d >= prediction.lo else "untested"


def verify(
    q: int,
    m: int,
    h: int,
    w_max: int | None = None,
    method: str = "mitm-syndrome",
    budget: SearchBudget = DEFAULT_BUDGET,
    quadruple_cap: int = DEFAULT_QUADRUPLE_CAP,
    kernel_name: str | None = None,
) -> VerificationResult:
    """Build the code, evaluate every applicable rule, measure the distance,
    and record agreement. A range prediction agrees iff the measured value
    lies inside it; it is never collapsed optimistically."""
    t0 = time.perf_counter()
    code = bch.build(q, m, 3, h)
    h = code.h
    verdicts = applicable_verdicts(q, m, h, quadruple_cap)
    predicted = combine_predictions(verdicts)
    if w_max is None:
        w_max = predicted.hi if predicted.hi is not None else predicted.lo
    report = min_distance(code, w_max, method, budget, kernel_name)
    for v in verdicts:
        if v.dimension_claim is not None and v.dimension_claim != code.dimension:
            v.agrees = "mismatch"
            v.note = (v.note + " " if v.note else "") + (
                f"dimension claim {v.dimension_claim} != built {code.dimension}"
            )
            continue
        if v.prediction is None:
            v.agrees = "untested"
            continue
        v.agrees = _judge(v.prediction, report)
    if any(v.agrees == "mismatch" for v in verdicts):
        overall = "mismatch"
    else:
        overall = _judge(predicted, report)
    return VerificationResult(
        q=q,
        m=m,
        h=h,
        n=code.n,
        k=code.dimension,
        verdicts=verdicts,
        predicted=predicted,
        report=report,
        agrees=overall,
        elapsed_ms=(time.perf_counter() - t0) * 1e3,
    )
