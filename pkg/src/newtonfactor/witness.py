"""Support families whose product-support behaviour depends on the characteristic.

The building block is a triple (I', I'', I): statement B(I', I'', I, K) says no
P, Q over K have supports exactly I', I'' with I(PQ) = I.  For the family
below, B holds exactly when char K divides d.  The triple is flattened to one
variable by an injective linear map and then lifted to a single support J in
two variables.
"""
from __future__ import annotations

import itertools
from array import array
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from math import lcm, prod

from . import kernels
from .errors import Inconclusive
from .field import FieldCtx, FieldElement, embed, is_prime, make_field, multiplicative_order_mod, primitive_root_of_unity
from .oracle import DEFAULT_CAP, _field_tables, _dec, _enc, z_status
from .support import Polynomial, Support, minkowski_sum, poly_mul, total_degree


@dataclass(frozen=True)
class WitnessTriple:
    Ip: Support
    Ipp: Support
    I: Support
    d: int

    def to_json(self) -> dict:
        return {"d": self.d, "Ip": self.Ip.to_json(), "Ipp": self.Ipp.to_json(), "I": self.I.to_json()}


def lemma44_sets(d: int) -> WitnessTriple:
    if d < 2:
        raise ValueError("d must be at least 2")
    Ip = Support([(a, b, 0) for a in (0, 1) for b in (0, 1)] + [(0, b, 1) for b in (0, 1)])
    Ipp = Support([(i, j, 0) for i in range(d + 1) for j in (0, 1)])
    blocked = {(i, j, 0) for i in range(1, d + 1) for j in (0, 2)} | {(0, 1, 1), (d, 1, 1)}
    I = Support([e for e in minkowski_sum(Ip, Ipp) if e not in blocked])
    return WitnessTriple(Ip, Ipp, I, d)


def _field_with_roots(field: FieldCtx, d: int) -> FieldCtx:
    k = lcm(field.k, multiplicative_order_mod(field.p, d))
    return make_field(field.p, k)


def lemma44_witness_pair(d: int, field: FieldCtx) -> tuple[Polynomial, Polynomial]:
    """Explicit P, Q with I(P) = I', I(Q) = I'', I(PQ) = I when char does not divide d."""
    if d < 2:
        raise ValueError("d must be at least 2")
    if d % field.p == 0:
        raise ValueError(f"characteristic {field.p} divides d={d}")
    base = _field_with_roots(field, d)
    zctx, z0 = primitive_root_of_unity(field.p, d)
    step = 1
    while True:
        L = make_field(field.p, base.k * step)
        zeta = embed(z0, L)
        mu = {(zeta**e).value for e in range(d)}
        banned = mu | {0, L.neg_one, (-zeta.inverse()).value}
        a = next((v for v in range(L.q) if v not in banned), None)
        if a is not None:
            break
        step += 1
    a = L.element(a)
    one = L.one
    P = Polynomial(
        L,
        3,
        [
            ((0, 0, 0), one),
            ((1, 0, 0), -one),
            ((0, 1, 0), a),
            ((1, 1, 0), -(a * zeta)),
            ((0, 0, 1), one),
            ((0, 1, 1), -one),
        ],
    )
    Q = Polynomial(
        L,
        3,
        [((i, 0, 0), one) for i in range(d + 1)] + [((i, 1, 0), zeta**i) for i in range(d + 1)],
    )
    return P, Q


# ---------------------------------------------------------------- B(I', I'', I, K)


def _nullspace_ff(ctx: FieldCtx, rows: list[list[int]], ncols: int) -> list[list[int]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = ctx.inv(m[r][c])
        m[r] = [ctx.mul(x, inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    basis = []
    for f in (c for c in range(ncols) if c not in pivots):
        v = [0] * ncols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = ctx.neg(m[i][f])
        basis.append(v)
    return basis


def _b_search_linear(t: WitnessTriple, ctx: FieldCtx, p_rows: list[tuple[int, ...]], cap: int):
    """For each P (given as coefficient tuples), solve linearly for Q."""
    Ip, Ipp = t.Ip.points, t.Ipp.points
    target = set(t.I.points)
    sums = minkowski_sum(t.Ip, t.Ipp).points
    forbidden = [s for s in sums if s not in target]
    ipos = {e: i for i, e in enumerate(Ip)}
    nodes = 0
    for coeffs in p_rows:
        rows = []
        for s in forbidden:
            row = []
            for b in Ipp:
                a = tuple(x - y for x, y in zip(s, b))
                row.append(coeffs[ipos[a]] if a in ipos else 0)
            rows.append(row)
        basis = _nullspace_ff(ctx, rows, len(Ipp))
        for comb in itertools.product(range(ctx.q), repeat=len(basis)):
            nodes += 1
            if nodes > cap:
                raise Inconclusive(f"B search exceeded the cap of {cap}")
            if not any(comb):
                continue
            qv = [0] * len(Ipp)
            for c, v in zip(comb, basis):
                if c:
                    qv = [ctx.add(x, ctx.mul(c, y)) for x, y in zip(qv, v)]
            if qv[0] != 1 or not all(qv):
                continue
            P = Polynomial._raw(ctx, t.Ip.n, dict(zip(Ip, coeffs)))
            Q = Polynomial._raw(ctx, t.Ipp.n, dict(zip(Ipp, qv)))
            if set(poly_mul(P, Q).terms) == target:
                return P, Q
    return None


def _linear_chunk(args):
    t, p, k, rows, cap = args
    return _b_search_linear(t, make_field(p, k), rows, cap)


def _b_search_exhaustive(t: WitnessTriple, ctx: FieldCtx, cap: int):
    Ip, Ipp = t.Ip.points, t.Ipp.points
    sums = minkowski_sum(t.Ip, t.Ipp).points
    spos = {s: i for i, s in enumerate(sums)}
    prod_tab = array("q", [spos[tuple(a + b for a, b in zip(x, y))] for x in Ip for y in Ipp])
    flags = array("q", [1 if s in t.I else 0 for s in sums])
    m1, zech, _ = _field_tables(ctx)
    out_p = array("q", [0] * len(Ip))
    out_q = array("q", [0] * len(Ipp))
    status, nodes = kernels.search_pair(m1, zech, len(Ip), len(Ipp), prod_tab, flags, len(sums), cap, out_p, out_q)
    if status == kernels.CAPPED:
        raise Inconclusive(f"B search exceeded the cap of {cap}")
    if status == kernels.NOT_FOUND:
        return None
    P = Polynomial._raw(ctx, t.Ip.n, {e: _dec(ctx, v) for e, v in zip(Ip, out_p)})
    Q = Polynomial._raw(ctx, t.Ipp.n, {e: _dec(ctx, v) for e, v in zip(Ipp, out_q)})
    return P, Q


def find_B_counterexample(
    t: WitnessTriple, field: FieldCtx, cap: int = DEFAULT_CAP, method: str = "linear", jobs: int = 1
):
    """A pair (P, Q) over ``field`` refuting B, or None if B holds over ``field``.

    Both searches fix the first coefficient of P and of Q to 1.  ``linear``
    enumerates P and solves the vanishing conditions for Q; ``exhaustive``
    walks every coefficient pair.
    """
    if method == "exhaustive":
        return _b_search_exhaustive(t, field, cap)
    if method != "linear":
        raise ValueError(f"unknown method {method!r}")
    rows = [(1,) + r for r in itertools.product(range(1, field.q), repeat=len(t.Ip) - 1)]
    if len(rows) > cap:
        raise Inconclusive(f"{len(rows)} candidate P exceed the cap of {cap}")
    if jobs <= 1:
        return _b_search_linear(t, field, rows, cap)
    size = -(-len(rows) // (4 * jobs))
    chunks = [rows[i : i + size] for i in range(0, len(rows), size)]
    with ProcessPoolExecutor(jobs) as ex:
        # first hit in enumeration order, whatever the schedule
        for hit in ex.map(_linear_chunk, [(t, field.p, field.k, ch, cap) for ch in chunks]):
            if hit is not None:
                return hit
    return None


def check_B(t: WitnessTriple, field: FieldCtx, cap: int = DEFAULT_CAP, method: str = "linear", jobs: int = 1) -> bool:
    return find_B_counterexample(t, field, cap, method, jobs) is None


# ---------------------------------------------------------------- lifts and flattening


def lemma43_lift(t: WitnessTriple) -> Support:
    n = t.I.n
    J = (
        [e + (0, 0) for e in t.I]
        + [e + (0, 1) for e in t.Ip]
        + [e + (1, 0) for e in t.Ipp]
        + [(0,) * n + (1, 1)]
    )
    return Support(J, n + 2)


@dataclass(frozen=True)
class LinearMap:
    """x -> sum(coeffs[s] * x[s]) from Z^n to Z."""

    coeffs: tuple[int, ...]

    def __call__(self, x) -> int:
        if len(x) != len(self.coeffs):
            raise ValueError("dimension mismatch")
        return sum(c * v for c, v in zip(self.coeffs, x))


def mixed_radix_flatten(b, order=None) -> LinearMap:
    """Mixed-radix digits -> integer.

    ``b[s]`` bounds digit s; digit s is read from input coordinate
    ``order[s]`` (identity when omitted), weighted by b[0]*...*b[s-1].
    """
    b = tuple(b)
    if any(x < 2 for x in b):
        raise ValueError("every radix must be at least 2")
    order = tuple(range(len(b))) if order is None else tuple(order)
    if sorted(order) != list(range(len(b))):
        raise ValueError("order must be a permutation of the coordinates")
    coeffs = [0] * len(b)
    w = 1
    for s, src in enumerate(order):
        coeffs[src] = w
        w *= b[s]
    return LinearMap(tuple(coeffs))


def flattening_for(d: int) -> LinearMap:
    """(i, j, k) -> 6i + j + 3k: digits (j, k, i) with radices (3, 2, d+2)."""
    return mixed_radix_flatten((3, 2, d + 2), order=(1, 2, 0))


def transport_triple(t: WitnessTriple, ell: LinearMap, a_p: int = 0, a_pp: int = 0) -> WitnessTriple:
    seen: dict[int, tuple] = {}
    for e in minkowski_sum(t.Ip, t.Ipp):
        v = ell(e)
        if v in seen:
            raise ValueError(f"map is not injective on I'+I'': {seen[v]} and {e} both go to {v}")
        seen[v] = e
    Ip = [a_p + ell(e) for e in t.Ip]
    Ipp = [a_pp + ell(e) for e in t.Ipp]
    I = [a_p + a_pp + ell(e) for e in t.I]
    if min(Ip + Ipp + I) < 0:
        raise ValueError("transported sets leave N")
    return WitnessTriple(Support([(x,) for x in Ip]), Support([(x,) for x in Ipp]), Support([(x,) for x in I]), t.d)


def transport_polynomial(P: Polynomial, ell: LinearMap, shift: int = 0) -> Polynomial:
    return P.map_exponents(lambda e: (shift + ell(e),))


def lemma48_lift(Ip: Support, Ipp: Support, I: Support, variant: str = "ii", h: int | None = None, symmetric: bool = True) -> Support:
    """Lift univariate supports to J = J0 x {0} u J1 x {1} u {(0, 2)}."""
    A, B, C = ({e[0] for e in S} for S in (Ip, Ipp, I))
    if min(A) or min(B) or min(C):
        raise ValueError("each set must have minimum 0")
    g1, g2 = max(A), max(B)
    if g1 <= 0 or g2 <= 0 or max(C) != g1 + g2:
        raise ValueError("need max I' > 0, max I'' > 0 and max I = max I' + max I''")
    if variant == "i":
        if h is None:
            h = g1 + 1
        if h <= g1:
            raise ValueError(f"variant (i) needs h > {g1}, got {h}")
        J0 = {h + x for x in C}
        J1 = A | {h + x for x in B}
    elif variant == "ii":
        if h is not None and h != g1:
            raise ValueError(f"variant (ii) needs h = {g1}, got {h}")
        shifted = {g1 + x for x in B}
        if C | {g1} == A | shifted:
            raise ValueError("variant (ii) hypothesis fails: I u {g'} equals I' u (g'+I'')")
        J0 = {g1 + x for x in C}
        J1 = (A ^ shifted) if symmetric else (A | shifted)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return Support([(x, 0) for x in J0] + [(x, 1) for x in J1] + [(0, 2)], 2)


# ---------------------------------------------------------------- characteristic witnesses


@dataclass
class CharacteristicWitness:
    J: Support
    primes: frozenset
    case_tag: str  # "A" or "B"
    triple: WitnessTriple | None = dc_field(default=None, repr=False)

    @property
    def d(self) -> int:
        return prod(self.primes) if self.primes else 1

    def to_json(self) -> dict:
        out = {"case": self.case_tag, "primes": sorted(self.primes), "J": self.J.to_json()}
        out["size"] = len(self.J)
        out["total_degree"] = total_degree(self.J)
        return out


def build_characteristic_witness(S, case_tag: str) -> CharacteristicWitness:
    S = frozenset(S)
    tag = case_tag.upper()
    if any(not is_prime(p) for p in S):
        raise ValueError(f"not a set of primes: {sorted(S)}")
    if tag == "B":
        if not S:
            raise ValueError("case B needs a nonempty set of primes")
        d = prod(S)
        return CharacteristicWitness(Support([(0, 0), (d, 0), (0, d)]), S, "B")
    if tag != "A":
        raise ValueError(f"unknown case {case_tag!r}")
    if not S:
        return CharacteristicWitness(Support([(1,), (2,)]), S, "A")
    d = prod(S)
    flat = transport_triple(lemma44_sets(d), flattening_for(d))
    J = lemma48_lift(flat.Ip, flat.Ipp, flat.I, "ii")
    return CharacteristicWitness(J, S, "A", flat)


def verify_witness(w: CharacteristicWitness, fields, max_ext: int | None = None, cap: int = DEFAULT_CAP, jobs: int = 1) -> list[dict]:
    """Per field, compare the observed behaviour with what the case predicts."""
    report = []
    for F in fields:
        entry = {"field": F.spec(), "char_in_S": F.p in w.primes}
        try:
            if w.case_tag == "B":
                z = z_status(w.J, F, max_ext if max_ext is not None else total_degree(w.J), cap, jobs)
                expected = "all" if F.p in w.primes else "empty"
                entry.update(method="z_status", expected=expected, observed=z.kind, ok=z.kind == expected)
            elif not w.primes:
                z = z_status(w.J, F, max_ext, cap, jobs)
                entry.update(method="z_status", expected="all", observed=z.kind, ok=z.kind == "all")
            elif w.d % F.p == 0:
                holds = check_B(w.triple, F, cap, jobs=jobs)
                entry.update(method="check_B", expected=True, observed=holds, ok=holds)
            else:
                P, Q = lemma44_witness_pair(w.d, F)
                ell = flattening_for(w.d)
                Pt, Qt = transport_polynomial(P, ell), transport_polynomial(Q, ell)
                ok = (
                    set(Pt.terms) == set(w.triple.Ip.points)
                    and set(Qt.terms) == set(w.triple.Ipp.points)
                    and set(poly_mul(Pt, Qt).terms) == set(w.triple.I.points)
                )
                entry.update(method="witness_pair", extension=P.ctx.spec(), expected=False, observed=not ok, ok=ok)
        except Inconclusive as exc:
            entry.update(status="inconclusive", detail=str(exc), ok=None)
        report.append(entry)
    return report
