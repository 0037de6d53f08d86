"""Decide, for a support I, in which characteristics every polynomial with support I is reducible."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd

from .field import prime_factors
from .support import Exponent, Support, unit_exponent

GOOD_ALL = "good_all_fields"
GOOD_IN_CHARS = "good_exactly_in_chars"
NEVER_GOOD = "never_good"


@dataclass(frozen=True)
class CondI:
    t: int  # 1-based variable index

    def to_json(self):
        return {"type": "cond_i", "t": self.t}


@dataclass(frozen=True)
class CondII:
    i: Exponent
    j: Exponent
    d: int

    def to_json(self):
        return {"type": "cond_ii", "i": list(self.i), "j": list(self.j), "d": self.d}


@dataclass(frozen=True)
class CondIII:
    primes: frozenset

    def to_json(self):
        return {"type": "cond_iii", "primes": sorted(self.primes)}


@dataclass(frozen=True)
class Classification:
    verdict: str
    certificate: CondI | CondII | CondIII | None

    @property
    def primes(self) -> list[int]:
        return sorted(self.certificate.primes) if isinstance(self.certificate, CondIII) else []

    def good_in_char(self, p: int) -> bool:
        if self.verdict == GOOD_ALL:
            return True
        return self.verdict == GOOD_IN_CHARS and p in self.certificate.primes

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "certificate": None if self.certificate is None else self.certificate.to_json(),
            "primes": self.primes,
        }


def check_condition_i(I: Support) -> int | None:
    for t in range(1, I.n + 1):
        if all(e[t - 1] >= 1 for e in I) and I.points != (unit_exponent(I.n, t),):
            return t
    return None


def _cross_zero(u, v) -> bool:
    n = len(u)
    return all(u[s] * v[t] == u[t] * v[s] for s in range(n) for t in range(s + 1, n))


def check_condition_ii(I: Support) -> tuple[Exponent, Exponent, int] | None:
    pts = I.points
    if len(pts) < 2:
        return None
    a, b = pts[0], pts[1]
    u = tuple(y - x for x, y in zip(a, b))
    for c in pts[2:]:
        if not _cross_zero(u, tuple(y - x for x, y in zip(a, c))):
            return None
    # orient the direction so that its last nonzero coordinate is positive
    last = max(s for s in range(I.n) if u[s])
    if u[last] < 0:
        u = tuple(-x for x in u)
    key = lambda e: e[last] * (1 if u[last] > 0 else -1)
    i = min(pts, key=key)
    j = max(pts, key=key)
    if any(x * y for x, y in zip(i, j)):
        return None
    d = reduce(gcd, i + j, 0)
    if d <= 1:
        return None
    return i, j, d


def check_condition_iii(I: Support) -> set[int]:
    g = reduce(gcd, (c for e in I for c in e), 0)
    if g <= 1:
        return set()
    return set(prime_factors(g))


def classify(I: Support) -> Classification:
    t = check_condition_i(I)
    if t is not None:
        return Classification(GOOD_ALL, CondI(t))
    ii = check_condition_ii(I)
    if ii is not None:
        return Classification(GOOD_ALL, CondII(*ii))
    primes = check_condition_iii(I)
    if primes:
        return Classification(GOOD_IN_CHARS, CondIII(frozenset(primes)))
    return Classification(NEVER_GOOD, None)
