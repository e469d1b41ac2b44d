"""q-cyclotomic cosets modulo n."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NotCoprime


@dataclass(frozen=True)
class CyclotomicCoset:
    q: int
    n: int
    leader: int
    orbit: tuple[int, ...]  # generation order, starting from the leader

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.orbit))

    @property
    def size(self) -> int:
        return len(self.orbit)


def coset(q: int, n: int, s: int) -> CyclotomicCoset:
    """Orbit of s under multiplication by q mod n."""
    if gcd(n, q) != 1:
        raise NotCoprime(n, q)
    s %= n
    orbit = [s]
    v = s * q % n
    while v != s:
        orbit.append(v)
        v = v * q % n
    leader = min(orbit)
    i = orbit.index(leader)
    return CyclotomicCoset(q, n, leader, tuple(orbit[i:] + orbit[:i]))


def all_leaders(q: int, n: int) -> list[CyclotomicCoset]:
    """Partition of Z_n into cosets, one record per leader, leaders ascending.

    Uses a visited sweep so each element is touched once.
    """
    if gcd(n, q) != 1:
        raise NotCoprime(n, q)
    seen = bytearray(n)
    out = []
    for s in range(n):
        if seen[s]:
            continue
        orbit = [s]
        seen[s] = 1
        v = s * q % n
        while v != s:
            orbit.append(v)
            seen[v] = 1
            v = v * q % n
        out.append(CyclotomicCoset(q, n, s, tuple(orbit)))
    return out
