"""Exponents, supports and sparse polynomials over a finite field context."""
from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping

from .field import FieldCtx, FieldElement, FieldError, embed_value, make_field

Exponent = tuple[int, ...]

# exponents model unsigned 32-bit machine integers
MAX_COORD = 2**32 - 1


def check_exponent(e: Iterable[int], n: int | None = None) -> Exponent:
    e = tuple(e)
    if not e:
        raise ValueError("exponent must have at least one coordinate")
    if n is not None and len(e) != n:
        raise ValueError(f"exponent {e} has dimension {len(e)}, expected {n}")
    for c in e:
        if not isinstance(c, int) or isinstance(c, bool):
            raise TypeError(f"exponent coordinates must be integers, got {c!r}")
        if c < 0:
            raise ValueError(f"negative exponent coordinate in {e}")
        if c > MAX_COORD:
            raise OverflowError(f"exponent coordinate {c} exceeds {MAX_COORD}")
    return e


def add_exponents(a: Exponent, b: Exponent) -> Exponent:
    s = tuple(x + y for x, y in zip(a, b))
    if any(c > MAX_COORD for c in s):
        raise OverflowError(f"exponent sum {s} exceeds {MAX_COORD}")
    return s


def unit_exponent(n: int, t: int) -> Exponent:
    """``e_t`` with ``t`` 1-based."""
    return tuple(1 if i == t - 1 else 0 for i in range(n))


class Support:
    """A finite nonempty set of exponents of a common dimension, stored sorted."""

    __slots__ = ("n", "points", "_set")

    def __init__(self, points: Iterable[Iterable[int]], n: int | None = None):
        pts = [tuple(p) for p in points]
        if not pts:
            raise ValueError("empty support")
        if n is None:
            n = len(pts[0])
        pts = sorted({check_exponent(p, n) for p in pts})
        self.n = n
        self.points: tuple[Exponent, ...] = tuple(pts)
        self._set = frozenset(pts)

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, e) -> bool:
        return tuple(e) in self._set

    def __eq__(self, other) -> bool:
        return isinstance(other, Support) and self.n == other.n and self.points == other.points

    def __hash__(self) -> int:
        return hash((self.n, self.points))

    def __le__(self, other: Support) -> bool:
        return self._set <= other._set

    def __repr__(self) -> str:
        if self.n == 1:
            return "Support{" + ", ".join(str(p[0]) for p in self.points) + "}"
        return f"Support{set(self.points)!r}"

    def shift(self, v: Exponent) -> Support:
        return Support((add_exponents(p, v) for p in self.points), self.n)

    def to_json(self) -> dict:
        return {"n": self.n, "points": [list(p) for p in self.points]}

    @classmethod
    def from_json(cls, data: Mapping) -> Support:
        return cls(data["points"], data["n"])


def inf_point(S: Iterable[Exponent]) -> Exponent:
    pts = list(S)
    if not pts:
        raise ValueError("empty support")
    return tuple(min(c) for c in zip(*pts))


def normalize(S: Support) -> tuple[Support, Exponent]:
    lo = inf_point(S)
    return Support((tuple(a - b for a, b in zip(p, lo)) for p in S), S.n), lo


def minkowski_sum(S1: Support, S2: Support) -> Support:
    if S1.n != S2.n:
        raise ValueError(f"dimension mismatch: {S1.n} vs {S2.n}")
    return Support((add_exponents(a, b) for a in S1 for b in S2), S1.n)


def total_degree(S: Iterable[Exponent]) -> int:
    return max(sum(p) for p in S)


def segment_lattice_points(i: Exponent, j: Exponent) -> list[Exponent]:
    """Lattice points of the segment [i, j], from i to j."""
    if tuple(i) == tuple(j):
        raise ValueError("degenerate segment")
    diff = [b - a for a, b in zip(i, j)]
    d = 0
    for c in diff:
        d = gcd(d, c)
    step = [c // d for c in diff]
    return [tuple(a + s * t for a, s in zip(i, step)) for t in range(d + 1)]


class Polynomial:
    """Sparse polynomial: exponent -> nonzero coefficient (stored as field encodings)."""

    __slots__ = ("ctx", "n", "terms")

    def __init__(self, ctx: FieldCtx, n: int, terms: Mapping | Iterable = ()):
        self.ctx = ctx
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Exponent, int] = {}
        for e, c in items:
            e = check_exponent(e, n)
            if isinstance(c, FieldElement):
                if c.ctx is not ctx:
                    raise FieldError("coefficient from a different field; embed it first")
                v = c.value
            else:
                v = ctx(c).value
            if e in out:
                v = ctx.add(out[e], v)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        self.terms = out

    @classmethod
    def _raw(cls, ctx: FieldCtx, n: int, terms: dict[Exponent, int]) -> Polynomial:
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def monomial(cls, ctx: FieldCtx, e: Exponent, c=1) -> Polynomial:
        return cls(ctx, len(e), {tuple(e): c})

    @classmethod
    def constant(cls, ctx: FieldCtx, n: int, c=1) -> Polynomial:
        return cls(ctx, n, {(0,) * n: c})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, e) -> FieldElement:
        return self.ctx.element(self.terms.get(tuple(e), 0))

    def support(self) -> Support:
        return support_of(self)

    def total_degree(self) -> int:
        return total_degree(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def _check(self, other: Polynomial):
        if not isinstance(other, Polynomial):
            raise TypeError("expected a Polynomial")
        if other.ctx is not self.ctx:
            raise FieldError(
                f"field mismatch: {self.ctx.spec()} vs {other.ctx.spec()}; embed explicitly"
            )
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return poly_mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        ctx = self.ctx
        out = dict(self.terms)
        for e, v in other.terms.items():
            s = ctx.add(out.get(e, 0), v)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(ctx, self.n, out)

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.ctx, self.n, {e: self.ctx.neg(v) for e, v in self.terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __pow__(self, k: int) -> Polynomial:
        out = Polynomial.constant(self.ctx, self.n)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c) -> Polynomial:
        v = self.ctx(c).value
        if v == 0:
            return Polynomial._raw(self.ctx, self.n, {})
        return Polynomial._raw(self.ctx, self.n, {e: self.ctx.mul(x, v) for e, x in self.terms.items()})

    def shift(self, v: Exponent) -> Polynomial:
        """Multiply by the monomial X^v."""
        return Polynomial._raw(self.ctx, self.n, {add_exponents(e, v): c for e, c in self.terms.items()})

    def unshift(self, v: Exponent) -> Polynomial:
        """Divide by X^v; every exponent must dominate v."""
        out = {}
        for e, c in self.terms.items():
            d = tuple(a - b for a, b in zip(e, v))
            if min(d) < 0:
                raise ValueError(f"X^{v} does not divide the term X^{e}")
            out[d] = c
        return Polynomial._raw(self.ctx, self.n, out)

    def embed(self, target: FieldCtx) -> Polynomial:
        if target is self.ctx:
            return self
        if target.p != self.ctx.p or target.k % self.ctx.k:
            raise FieldError(f"F_{self.ctx.spec()} does not embed in F_{target.spec()}")
        return Polynomial._raw(
            target, self.n, {e: embed_value(self.ctx, c, target) for e, c in self.terms.items()}
        )

    def map_exponents(self, f) -> Polynomial:
        out = {}
        for e, c in self.terms.items():
            e2 = tuple(f(e))
            if e2 in out:
                raise ValueError("exponent map is not injective on the support")
            out[e2] = c
        return Polynomial._raw(self.ctx, len(next(iter(out))) if out else self.n, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ctx is other.ctx
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.ctx.k, self.n, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Exponent, FieldElement]]:
        return [(e, self.ctx.element(self.terms[e])) for e in sorted(self.terms)]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = "XYZ" if self.n <= 3 else None
        parts = []
        for e, c in self.sorted_terms():
            mono = []
            for t, a in enumerate(e):
                if a:
                    v = names[t] if names else f"X{t + 1}"
                    mono.append(v if a == 1 else f"{v}^{a}")
            cs = repr(c)
            if mono:
                body = "*".join(mono)
                parts.append(body if cs == "1" else f"({cs})*{body}")
            else:
                parts.append(cs)
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "p": self.ctx.p,
            "k": self.ctx.k,
            "n": self.n,
            "terms": [{"exp": list(e), "coeff": c.coords} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Polynomial:
        ctx = make_field(data["p"], data.get("k", 1))
        n = data["n"]
        terms = []
        for t in data["terms"]:
            coeff = t["coeff"]
            terms.append((t["exp"], coeff if isinstance(coeff, int) else list(coeff)))
        return cls(ctx, n, terms)


def support_of(P: Polynomial) -> Support:
    if not P.terms:
        raise ValueError("empty support")
    return Support(P.terms.keys(), P.n)


def poly_mul(P: Polynomial, Q: Polynomial) -> Polynomial:
    P._check(Q)
    ctx = P.ctx
    out: dict[Exponent, int] = {}
    add, mul = ctx.add, ctx.mul
    for e1, c1 in P.terms.items():
        for e2, c2 in Q.terms.items():
            e = add_exponents(e1, e2)
            out[e] = add(out.get(e, 0), mul(c1, c2))
    return Polynomial._raw(ctx, P.n, {e: c for e, c in out.items() if c})


def polynomial_from_support(ctx: FieldCtx, S: Support, coeffs: Iterable) -> Polynomial:
    """Polynomial with the given coefficients on the (sorted) points of S."""
    return Polynomial(ctx, S.n, zip(S.points, coeffs))
