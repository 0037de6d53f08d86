"""Dense univariate polynomials over a finite field context (coefficients lowest first).

Only what the factor search needs: factorization into irreducibles
(squarefree, distinct-degree and equal-degree splitting) and the list of
monic divisors of a given degree.
"""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import product

from .field import FieldCtx

Poly = tuple[int, ...]


def trim(f) -> Poly:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def add(F: FieldCtx, f, g) -> Poly:
    n = max(len(f), len(g))
    return trim(F.add(f[i] if i < len(f) else 0, g[i] if i < len(g) else 0) for i in range(n))


def sub(F: FieldCtx, f, g) -> Poly:
    return add(F, f, tuple(F.neg(c) for c in g))


def mul(F: FieldCtx, f, g) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out)


def divmod_(F: FieldCtx, f, g) -> tuple[Poly, Poly]:
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(trim(f))
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return (), tuple(r)
    inv = F.inv(g[-1])
    q = [0] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c == 0:
            continue
        c = F.mul(c, inv)
        q[i - dg] = c
        for j in range(dg + 1):
            r[i - dg + j] = F.sub(r[i - dg + j], F.mul(c, g[j]))
    return trim(q), trim(r[:dg])


def monic(F: FieldCtx, f) -> Poly:
    f = trim(f)
    if not f or f[-1] == 1:
        return f
    inv = F.inv(f[-1])
    return tuple(F.mul(c, inv) for c in f)


def gcd(F: FieldCtx, f, g) -> Poly:
    f, g = trim(f), trim(g)
    while g:
        f, g = g, divmod_(F, f, g)[1]
    return monic(F, f)


def deriv(F: FieldCtx, f) -> Poly:
    return trim(F.mul(c, i % F.p) if i % F.p else 0 for i, c in enumerate(f) if i)


def powmod(F: FieldCtx, f, e: int, m) -> Poly:
    result: Poly = (1,)
    base = divmod_(F, f, m)[1]
    while e:
        if e & 1:
            result = divmod_(F, mul(F, result, base), m)[1]
        e >>= 1
        if e:
            base = divmod_(F, mul(F, base, base), m)[1]
    return result


def _pth_root(F: FieldCtx, f) -> Poly:
    # f(t) = g(t^p); coefficients are p-th powers of their own p-th roots
    e = F.p ** (F.k - 1)
    return trim(F.pow(f[i], e) for i in range(0, len(f), F.p))


def squarefree(F: FieldCtx, f) -> list[tuple[Poly, int]]:
    f = monic(F, f)
    out: list[tuple[Poly, int]] = []
    if len(f) <= 1:
        return out
    c = gcd(F, f, deriv(F, f))
    w = divmod_(F, f, c)[0]
    i = 1
    while len(w) > 1:
        y = gcd(F, w, c)
        fac = divmod_(F, w, y)[0]
        if len(fac) > 1:
            out.append((monic(F, fac), i))
        w = y
        c = divmod_(F, c, y)[0]
        i += 1
    if len(c) > 1:
        for g, m in squarefree(F, _pth_root(F, c)):
            out.append((g, m * F.p))
    return out


def distinct_degree(F: FieldCtx, f) -> list[tuple[Poly, int]]:
    out = []
    x: Poly = (0, 1)
    h = x
    i = 1
    while len(f) - 1 >= 2 * i:
        h = powmod(F, h, F.q, f)
        g = gcd(F, f, sub(F, h, x))
        if len(g) > 1:
            out.append((g, i))
            f = divmod_(F, f, g)[0]
            h = divmod_(F, h, f)[1]
        i += 1
    if len(f) > 1:
        out.append((monic(F, f), len(f) - 1))
    return out


def equal_degree(F: FieldCtx, f, i: int, rng: random.Random) -> list[Poly]:
    n = len(f) - 1
    if n == i:
        return [f]
    while True:
        u = trim([rng.randrange(F.q) for _ in range(n)])
        if len(u) <= 1:
            continue
        if F.p == 2:
            # trace map u + u^2 + ... + u^(2^(k*i - 1))
            t, cur = u, u
            for _ in range(F.k * i - 1):
                cur = divmod_(F, mul(F, cur, cur), f)[1]
                t = add(F, t, cur)
            g = gcd(F, f, t)
        else:
            g = gcd(F, f, sub(F, powmod(F, u, (F.q**i - 1) // 2, f), (1,)))
        if 1 < len(g) < len(f):
            h = divmod_(F, f, g)[0]
            return equal_degree(F, g, i, rng) + equal_degree(F, monic(F, h), i, rng)


@lru_cache(maxsize=65536)
def factor(F: FieldCtx, f: Poly) -> tuple[tuple[Poly, int], ...]:
    """Monic irreducible factors with multiplicities, sorted."""
    rng = random.Random(0)
    out = []
    for g, m in squarefree(F, f):
        for h, i in distinct_degree(F, g):
            for irr in equal_degree(F, h, i, rng):
                out.append((irr, m))
    return tuple(sorted(out))


@lru_cache(maxsize=65536)
def monic_divisors(F: FieldCtx, f: Poly, degree: int) -> tuple[Poly, ...]:
    """All monic divisors of ``f`` of the given degree, sorted."""
    facs = factor(F, trim(f))
    out = set()
    for exps in product(*(range(m + 1) for _, m in facs)):
        if sum(e * (len(g) - 1) for (g, _), e in zip(facs, exps)) != degree:
            continue
        d: Poly = (1,)
        for (g, _), e in zip(facs, exps):
            for _ in range(e):
                d = mul(F, d, g)
        out.add(d)
    return tuple(sorted(out))
