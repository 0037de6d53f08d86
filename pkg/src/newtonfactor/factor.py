"""Constructive factorizations for supports on which every polynomial is reducible."""
from __future__ import annotations

from .classify import NEVER_GOOD, Classification, CondI, CondII, CondIII
from .errors import FactorizationError
from .field import FieldElement, _synthetic_div, embed, frobenius_inverse, univariate_roots
from .support import Exponent, Polynomial, poly_mul, segment_lattice_points, support_of, unit_exponent


def normalize_pair(Q: Polynomial, R: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Scale so that Q has coefficient 1 at its lex-smallest exponent."""
    c = Q.coeff(min(Q.terms))
    if c.value == 1:
        return Q, R
    return Q.scale(c.inverse()), R.scale(c)


def _nonconstant(P: Polynomial) -> bool:
    return any(any(e) for e in P.terms)


def _checked(P: Polynomial, Q: Polynomial, R: Polynomial) -> tuple[Polynomial, Polynomial]:
    Q, R = normalize_pair(Q, R)
    if poly_mul(Q, R) != P.embed(Q.ctx):
        raise AssertionError("factor product does not reproduce the input")
    if not (_nonconstant(Q) and _nonconstant(R)):
        raise AssertionError("constant factor produced")
    return Q, R


def factor_cond_i(P: Polynomial, t: int) -> tuple[Polynomial, Polynomial]:
    if P.is_zero():
        raise FactorizationError("zero polynomial")
    if not 1 <= t <= P.n:
        raise FactorizationError(f"variable index {t} out of range")
    et = unit_exponent(P.n, t)
    if any(e[t - 1] < 1 for e in P.terms):
        raise FactorizationError(f"X_{t} does not divide the polynomial")
    if list(P.terms) == [et]:
        raise FactorizationError(f"a*X_{t} is irreducible")
    return _checked(P, Polynomial.monomial(P.ctx, et), P.unshift(et))


def factor_cond_ii(
    P: Polynomial, i: Exponent, j: Exponent, d: int, max_ext: int | None = None
) -> tuple[Polynomial, Polynomial]:
    """Split along the segment [i, j] through a root of the dehomogenized form."""
    i, j = tuple(i), tuple(j)
    if i not in P.terms or j not in P.terms:
        raise FactorizationError("both segment endpoints must lie in the support")
    if d < 2 or any(c % d for c in i + j):
        raise FactorizationError(f"d={d} must be >= 2 and divide every endpoint coordinate")
    seg = segment_lattice_points(i, j)
    if len(seg) != d + 1:
        raise FactorizationError("d does not match the lattice length of the segment")
    pos = {e: a for a, e in enumerate(seg)}
    if any(e not in pos for e in P.terms):
        raise FactorizationError("support is not contained in the segment")
    ctx = P.ctx
    f = [P.coeff(e) for e in seg]
    bound = d if max_ext is None else max_ext
    roots = univariate_roots(f, bound, ctx)
    if not roots:
        need = next(m for m in range(1, d + 1) if univariate_roots(f, m, ctx))
        raise FactorizationError(f"no root within extension degree {bound}; degree {need} required")
    r = roots[0][0]
    L = r.ctx
    fl = [embed(x, L) for x in f]
    g, rem = _synthetic_div(fl, r)
    assert not rem
    yi = tuple(c // d for c in i)
    zj = tuple(c // d for c in j)
    Q = Polynomial(L, P.n, [(zj, 1), (yi, -r)])
    R = Polynomial(
        L,
        P.n,
        [(tuple((d - 1 - b) * y + b * z for y, z in zip(yi, zj)), gb) for b, gb in enumerate(g)],
    )
    return _checked(P, Q, R)


def pth_root(P: Polynomial, p: int) -> Polynomial:
    """The Q with Q**p == P, for P whose exponents are all divisible by p = char."""
    if P.ctx.p != p:
        raise FactorizationError(f"characteristic {P.ctx.p} is not {p}")
    if any(c % p for e in P.terms for c in e):
        raise FactorizationError(f"not every exponent is divisible by {p}")
    return Polynomial(
        P.ctx,
        P.n,
        [(tuple(c // p for c in e), frobenius_inverse(P.coeff(e))) for e in P.terms],
    )


def factor_cond_iii(P: Polynomial, p: int) -> tuple[Polynomial, Polynomial]:
    if P.is_zero() or list(P.terms) == [(0,) * P.n]:
        raise FactorizationError("support must differ from {0}")
    Q = pth_root(P, p)
    return _checked(P, Q, Q ** (p - 1))


def factor_by_certificate(P: Polynomial, c: Classification, max_ext: int | None = None):
    cert = c.certificate
    if c.verdict == NEVER_GOOD or cert is None:
        raise FactorizationError("support is never good; no constructive factorization")
    if isinstance(cert, CondI):
        return factor_cond_i(P, cert.t)
    if isinstance(cert, CondII):
        return factor_cond_ii(P, cert.i, cert.j, cert.d, max_ext)
    if isinstance(cert, CondIII):
        if P.ctx.p not in cert.primes:
            raise FactorizationError(f"characteristic not covered: {P.ctx.p} not in {sorted(cert.primes)}")
        return factor_cond_iii(P, P.ctx.p)
    raise FactorizationError(f"unknown certificate {cert!r}")
