"""Finite fields F_{p^k} as concrete stand-ins for an algebraically closed field.

Elements are encoded as integers ``sum(c_i * p**i)`` where ``c_i`` are the
coordinates in the power basis of the defining modulus (lowest degree first).
Every context also carries a primitive element and log/antilog/Zech tables.

Primitive elements are chosen compatibly across the whole tower: for every
proper divisor ``j`` of ``k`` the element ``g_k ** ((p**k - 1) // (p**j - 1))``
is a root of the minimal polynomial of ``g_j``.  The subfield embedding
``g_j -> g_k ** N`` is therefore a ring homomorphism and embeddings compose.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

MAX_FIELD_SIZE = 1 << 16


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# --- raw polynomial arithmetic over F_p (coefficient lists, lowest first) ---

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(m) - 1
    inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, m, p)


def _ppowmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def is_irreducible_mod_p(f: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic ``f`` (lowest degree first)."""
    f = list(f)
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p**k, f, p), x, p):
        return False
    for r in prime_factors(k):
        h = _psub(_ppowmod(x, p ** (k // r), f, p), x, p)
        if len(_pgcd(f, h, p)) > 1:
            return False
    return True


def _int_to_coords(v: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        v, c = divmod(v, p)
        out.append(c)
    return out


def _coords_to_int(c: Sequence[int], p: int) -> int:
    v = 0
    for x in reversed(c):
        v = v * p + x
    return v


def _first_irreducible(p: int, k: int) -> tuple[int, ...]:
    # monic polynomials enumerated by the integer encoding of their lower coefficients
    for v in range(p**k):
        f = _int_to_coords(v, p, k) + [1]
        if f[0] == 0:
            continue
        if is_irreducible_mod_p(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")


class FieldCtx:
    """The field F_{p^k}.  Use :func:`make_field`; contexts are cached singletons."""

    def __init__(self, p: int, k: int):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = _first_irreducible(p, k) if k > 1 else (0, 1)
        self.gen = self._choose_generator()
        q1 = self.q - 1
        exp = [0] * q1
        log = [-1] * self.q
        cur = 1
        for e in range(q1):
            exp[e] = cur
            log[cur] = e
            cur = self._raw_mul(cur, self.gen)
        self.exp = exp
        self.log = log
        zech = [-1] * q1
        for e in range(q1):
            s = self._add_one(exp[e])
            zech[e] = log[s] if s else -1
        self.zech = zech
        self.neg_one = p - 1 if p > 2 else 1

    # raw helpers used while the tables are being built
    def _raw_mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        ca = _int_to_coords(a, self.p, self.k)
        cb = _int_to_coords(b, self.p, self.k)
        r = _pmulmod(_trim(ca), _trim(cb), list(self.modulus), self.p)
        return _coords_to_int(r, self.p)

    def _raw_pow(self, a: int, e: int) -> int:
        if self.k == 1:
            return pow(a, e, self.p)
        r = _ppowmod(_trim(_int_to_coords(a, self.p, self.k)), e, list(self.modulus), self.p)
        return _coords_to_int(r, self.p)

    def _add_one(self, a: int) -> int:
        c0 = a % self.p
        return a - c0 + (c0 + 1) % self.p

    def _is_primitive(self, a: int) -> bool:
        q1 = self.q - 1
        if a == 0:
            return False
        return all(self._raw_pow(a, q1 // r) != 1 for r in prime_factors(q1)) if q1 > 1 else a == 1

    def _choose_generator(self) -> int:
        p, k = self.p, self.k
        if k == 1:
            for a in range(1, p):
                if self._is_primitive(a):
                    return a
            raise AssertionError
        sub = []
        for j in divisors(k)[:-1]:
            ctx = make_field(p, j)
            sub.append(((self.q - 1) // (ctx.q - 1), ctx.minimal_polynomial(ctx.gen_element)))
        for a in range(2, self.q):
            if not self._is_primitive(a):
                continue
            if all(self._raw_eval(mu, self._raw_pow(a, n)) == 0 for n, mu in sub):
                return a
        raise AssertionError("no compatible primitive element")

    def _raw_eval(self, coeffs: Sequence[int], x: int) -> int:
        # coeffs lie in the prime field, encoded as 0..p-1
        acc = 0
        for c in reversed(coeffs):
            acc = self._raw_mul(acc, x)
            c0 = acc % self.p
            acc = acc - c0 + (c0 + c) % self.p
        return acc

    # ---- table-driven arithmetic on encoded ints ----
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        la = self.log[a]
        z = self.zech[(self.log[b] - la) % (self.q - 1)]
        if z < 0:
            return 0
        return self.exp[(la + z) % (self.q - 1)]

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        if self.k == 1:
            return self.p - a
        return self.mul(a, self.neg_one)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        if a == 0:
            return 0
        return self.exp[(self.log[a] - self.log[b]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if e == 0 else 0
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    # ---- element-level API ----
    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.ctx is not self:
                raise FieldError("element belongs to another field; use embed()")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        coords = list(value)
        if len(coords) > self.k:
            raise FieldError(f"too many coordinates for F_{self.p}^{self.k}")
        coords += [0] * (self.k - len(coords))
        return FieldElement(self, _coords_to_int([c % self.p for c in coords], self.p))

    def element(self, encoded: int) -> FieldElement:
        if not 0 <= encoded < self.q:
            raise FieldError(f"encoding {encoded} out of range")
        return FieldElement(self, encoded)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen_element(self) -> FieldElement:
        return FieldElement(self, self.gen)

    def elements(self) -> Iterator[FieldElement]:
        for v in range(self.q):
            yield FieldElement(self, v)

    def units(self) -> Iterator[FieldElement]:
        for v in range(1, self.q):
            yield FieldElement(self, v)

    def coords(self, encoded: int) -> list[int]:
        return _int_to_coords(encoded, self.p, self.k)

    def minimal_polynomial(self, x: FieldElement) -> list[int]:
        """Minimal polynomial of ``x`` over F_p, monic, lowest degree first."""
        conj = [x.value]
        y = self.pow(x.value, self.p)
        while y != x.value:
            conj.append(y)
            y = self.pow(y, self.p)
        poly = [1]
        for r in conj:
            nr = self.neg(r)
            out = [0] * (len(poly) + 1)
            for i, c in enumerate(poly):
                out[i + 1] = self.add(out[i + 1], c)
                out[i] = self.add(out[i], self.mul(c, nr))
            poly = out
        # coefficients lie in the prime subfield, whose encodings are 0..p-1
        assert all(c < self.p for c in poly)
        return poly

    def spec(self) -> str:
        return f"{self.p}^{self.k}"

    def __repr__(self) -> str:
        return f"FieldCtx(F_{self.p}^{self.k})"

    def __reduce__(self):
        return (make_field, (self.p, self.k))


class FieldElement:
    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldCtx, value: int):
        self.ctx = ctx
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise FieldError("elements of different fields do not mix; use embed()")
            return other.value
        if isinstance(other, int):
            return other % self.ctx.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.sub(o, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.div(o, self.value))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.ctx is other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.ctx.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.ctx.k, self.value))

    @property
    def coords(self) -> list[int]:
        return self.ctx.coords(self.value)

    def order(self) -> int:
        if self.value == 0:
            raise FieldError("zero has no multiplicative order")
        q1 = self.ctx.q - 1
        from math import gcd

        return q1 // gcd(q1, self.ctx.log[self.value])

    def __repr__(self) -> str:
        if self.ctx.k == 1:
            return f"{self.value}"
        terms = []
        for i, c in enumerate(self.coords):
            if c:
                g = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
                terms.append(f"{c}{'*' if g and c != 1 else ''}{g}" if g else str(c))
                if g and c == 1:
                    terms[-1] = g
        return "+".join(terms) or "0"


def make_field(p: int, k: int = 1) -> FieldCtx:
    """The canonical context for F_{p^k}; equal arguments give the identical object."""
    return _make_field(int(p), int(k))


@lru_cache(maxsize=None)
def _make_field(p: int, k: int) -> FieldCtx:
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if k < 1:
        raise FieldError("extension degree must be >= 1")
    if p**k > MAX_FIELD_SIZE:
        raise FieldError(f"F_{p}^{k} exceeds the desk-scale bound of {MAX_FIELD_SIZE} elements")
    return FieldCtx(p, k)


def parse_field(spec: str) -> FieldCtx:
    """Parse ``"p^k"`` (or just ``"p"``)."""
    try:
        if "^" in spec:
            p, k = spec.split("^")
            return make_field(int(p), int(k))
        return make_field(int(spec), 1)
    except ValueError as exc:
        if isinstance(exc, FieldError):
            raise
        raise FieldError(f"bad field spec {spec!r}; expected p^k") from exc


def embed(x: FieldElement, target: FieldCtx) -> FieldElement:
    src = x.ctx
    if src.p != target.p:
        raise FieldError("fields of different characteristic")
    if target.k % src.k:
        raise FieldError(f"F_{src.p}^{src.k} does not embed in F_{target.p}^{target.k}")
    if src is target or x.value == 0:
        return FieldElement(target, x.value)
    n = (target.q - 1) // (src.q - 1)
    return FieldElement(target, target.exp[(src.log[x.value] * n) % (target.q - 1)])


def embed_value(src: FieldCtx, value: int, target: FieldCtx) -> int:
    if value == 0 or src is target:
        return value
    n = (target.q - 1) // (src.q - 1)
    return target.exp[(src.log[value] * n) % (target.q - 1)]


def frobenius_inverse(x: FieldElement) -> FieldElement:
    """The unique ``y`` with ``y**p == x``, namely ``x**(p**(k-1))``."""
    ctx = x.ctx
    return FieldElement(ctx, ctx.pow(x.value, ctx.p ** (ctx.k - 1)))


def multiplicative_order_mod(p: int, d: int) -> int:
    if d == 1:
        return 1
    k, r = 1, p % d
    while r != 1:
        r = r * p % d
        k += 1
    return k


def primitive_root_of_unity(p: int, d: int) -> tuple[FieldCtx, FieldElement]:
    if d < 1:
        raise FieldError("order must be positive")
    if d % p == 0:
        raise FieldError(f"no primitive root in characteristic {p}: {p} divides {d}")
    ctx = make_field(p, multiplicative_order_mod(p, d))
    return ctx, FieldElement(ctx, ctx.exp[(ctx.q - 1) // d])


def poly_eval(coeffs: Sequence[FieldElement], x: FieldElement) -> FieldElement:
    acc = x.ctx.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _synthetic_div(coeffs: list[FieldElement], r: FieldElement) -> tuple[list[FieldElement], FieldElement]:
    """Divide by (x - r); returns (quotient, remainder)."""
    n = len(coeffs) - 1
    out = [r.ctx.zero] * n
    acc = r.ctx.zero
    for i in range(n, 0, -1):
        acc = acc * r + coeffs[i]
        out[i - 1] = acc
    rem = acc * r + coeffs[0]
    return out, rem


def univariate_roots(f: Sequence, max_ext: int, ctx: FieldCtx | None = None) -> list[tuple[FieldElement, int]]:
    """Roots of ``f`` (coefficients lowest first) in F_{q^m}, m = 1..max_ext.

    Each root is reported once, in the smallest extension of the coefficient
    field that contains it, together with its multiplicity.
    """
    if ctx is None:
        ctx = next(c.ctx for c in f if isinstance(c, FieldElement))
    coeffs = [ctx(c) for c in f]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if not coeffs:
        raise FieldError("zero polynomial")
    if len(coeffs) < 2:
        raise FieldError("constant polynomial has no roots")
    found: list[tuple[FieldElement, int]] = []
    remaining = len(coeffs) - 1
    for m in range(1, max_ext + 1):
        if remaining == 0:
            break
        try:
            L = make_field(ctx.p, ctx.k * m)
        except FieldError:
            break
        fl = [embed(c, L) for c in coeffs]
        smaller = [ctx.q**j for j in divisors(m)[:-1]]
        for v in range(L.q):
            x = FieldElement(L, v)
            if any(L.pow(v, s) == v for s in smaller):
                continue
            if poly_eval(fl, x):
                continue
            mult, cur = 0, fl
            while len(cur) > 1:
                quo, rem = _synthetic_div(cur, x)
                if rem:
                    break
                mult += 1
                cur = quo
            found.append((x, mult))
            remaining -= mult
    return found
