"""Ground truth by exhaustive search: absolute reducibility over small finite fields.

A factorization P = Q*R forces C(P) = C(Q) + C(R), so the search runs over the
nontrivial integral decompositions of C(P).  For each one, Q ranges over
coefficient vectors on the lattice points of the smaller summand (normalized
to 1 at its lex-min point) and R is solved for, then the product is checked.
Each edge of C(P) gives an early divisibility test on the matching edge of Q.
"""
from __future__ import annotations

import itertools
from array import array
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from . import kernels, univariate
from .errors import Inconclusive
from .field import FieldCtx, divisors, make_field
from .polytope import Decomposition, edge_gcd, enumerate_decompositions, hull, minkowski_hull
from .support import Exponent, Polynomial, Support, inf_point, poly_mul, unit_exponent

DEFAULT_CAP = 10**8


def _q(values) -> array:
    return array("q", values)


@lru_cache(maxsize=None)
def _field_tables(L: FieldCtx) -> tuple[int, array, int]:
    m1 = L.q - 1
    zech = _q(L.zech) if m1 > 0 else _q([])
    neg1 = L.log[L.neg_one]
    return m1, zech, neg1


def _enc(L: FieldCtx, v: int) -> int:
    return 0 if v == 0 else L.log[v] + 1


def _dec(L: FieldCtx, e: int) -> int:
    return 0 if e == 0 else L.exp[e - 1]


class _Shape:
    """Index tables for searching Q on one summand of one decomposition."""

    def __init__(self, C, dec: Decomposition, use_left: bool):
        Apoly, Bpoly = (dec.left, dec.right) if use_left else (dec.right, dec.left)
        amap = dec.phi if use_left else dec.psi
        A_all = Apoly.lattice_points()
        self.B = Bpoly.lattice_points()
        self.C = C.lattice_points()
        s0 = A_all[0]
        self.s0 = s0
        n = len(s0)

        edge_lists = []
        for v, w in C.edges:
            av, aw = amap[v], amap[w]
            if av == aw:
                continue
            d = edge_gcd(v, w)
            step = tuple((b - a) // d for a, b in zip(v, w))
            la = edge_gcd(av, aw)
            eq = [tuple(a + k * s for a, s in zip(av, step)) for k in range(la + 1)]
            pe = [tuple(a + k * s for a, s in zip(v, step)) for k in range(d + 1)]
            edge_lists.append((tuple(eq), tuple(pe)))

        # order: s0, then one edge step per edge of C (edges touching placed
        # points first), then a point step for every remaining point
        order = [s0]
        placed = {s0}
        kinds, spos, svert = [], [], []
        e_off, e_len, e_pos, e_anchor = [], [], [], []
        self.edge_pe, self.edge_deg = [], []
        verts = set(Apoly.vertices)
        pending = sorted(edge_lists)
        while pending:
            def rank(item):
                eq = item[0]
                touching = any(x in placed for x in eq)
                return (not touching, sum(x not in placed for x in eq), item)

            eq, pe = min(pending, key=rank)
            pending.remove((eq, pe))
            e_off.append(len(e_pos))
            e_len.append(len(eq))
            for x in eq:
                e_anchor.append(1 if x in placed else 0)
                if x not in placed:
                    placed.add(x)
                    order.append(x)
            pos = {x: i for i, x in enumerate(order)}
            e_pos.extend(pos[x] for x in eq)
            kinds.append(1)
            spos.append(0)
            svert.append(0)
            self.edge_pe.append(pe)
            self.edge_deg.append(len(eq) - 1)
        for x in A_all:
            if x not in placed:
                placed.add(x)
                order.append(x)
                kinds.append(0)
                spos.append(len(order) - 1)
                svert.append(1 if x in verts else 0)
                e_off.append(0)
                e_len.append(0)
        self.A = order
        nA = len(order)
        self.n_steps = len(kinds)
        self.step_kind, self.step_pos, self.step_vert = _q(kinds), _q(spos), _q(svert)
        self.e_off, self.e_len = _q(e_off), _q(e_len)
        self.e_pos, self.e_anchor = _q(e_pos), _q(e_anchor)
        self.n_edges = len(self.edge_pe)

        bpos = {x: j for j, x in enumerate(self.B)}
        cpos = {x: c for c, x in enumerate(self.C)}
        nB = len(self.B)
        solve = [-1] * (nA * nB)
        prod = [0] * (nA * nB)
        for a, xa in enumerate(order):
            for j, xb in enumerate(self.B):
                if a:
                    solve[a * nB + j] = bpos.get(tuple(s + b - t for s, b, t in zip(s0, xb, xa)), -1)
                prod[a * nB + j] = cpos[tuple(t + b for t, b in zip(xa, xb))]
        self.solve_tab, self.prod_tab = _q(solve), _q(prod)
        self.r_pts = [tuple(s + b for s, b in zip(s0, xb)) for xb in self.B]
        self.n = n

    def candidates(self, P: Polynomial):
        """Log-encoded monic divisors for every edge step, or None if some edge has none."""
        L = P.ctx
        t = P.terms
        c_off, c_cnt, cand = [], [], []
        for pe, la in zip(self.edge_pe, self.edge_deg):
            f = univariate.trim(t.get(x, 0) for x in pe)
            divs = univariate.monic_divisors(L, f, la)
            if not divs:
                return None
            c_off.append(len(cand))
            c_cnt.append(len(divs))
            for g in divs:
                cand.extend(_enc(L, c) for c in g)
        pad = self.n_steps - len(c_off)
        return _q(c_off + [0] * pad), _q(c_cnt + [0] * pad), _q(cand or [0])

    def run(self, P: Polynomial, cap: int) -> tuple[int, int, list[int] | None]:
        L = P.ctx
        cands = self.candidates(P)
        if cands is None:
            return kernels.NOT_FOUND, 0, None
        c_off, c_cnt, cand = cands
        m1, zech, neg1 = _field_tables(L)
        t = P.terms
        enc = lambda x: _enc(L, t.get(x, 0))
        out = _q([0] * len(self.A))
        status, nodes = kernels.search_factor(
            m1, zech, neg1,
            len(self.A), len(self.B), len(self.C),
            self.n_steps, self.step_kind, self.step_pos, self.step_vert,
            self.e_off, self.e_len, self.e_pos, self.e_anchor, c_off, c_cnt, cand,
            self.solve_tab, _q([enc(x) for x in self.r_pts]), self.prod_tab,
            _q([enc(x) for x in self.C]), cap, out,
        )
        return status, nodes, (list(out) if status == kernels.FOUND else None)


@lru_cache(maxsize=4096)
def _plan(points: tuple[Exponent, ...]) -> tuple[_Shape, ...]:
    C = hull(points)
    shapes = []
    seen = set()
    for dec in enumerate_decompositions(C, require_positive_dims=True):
        key = (dec.left.vertices, dec.right.vertices)
        if key in seen:
            continue
        seen.add((dec.right.vertices, dec.left.vertices))
        nl = len(dec.left.lattice_points())
        nr = len(dec.right.lattice_points())
        shapes.append(_Shape(C, dec, nl <= nr))
    return tuple(shapes)


def _cofactor(P: Polynomial, Q: Polynomial, shape: _Shape) -> Polynomial:
    L = P.ctx
    s0 = shape.s0
    qs = [(x, Q.terms[x]) for x in sorted(Q.terms) if x != s0]
    r: dict[Exponent, int] = {}
    for xb, xr in zip(shape.B, shape.r_pts):
        v = P.terms.get(xr, 0)
        for xa, ca in qs:
            y = tuple(s + b - a for s, b, a in zip(s0, xb, xa))
            if y in r:
                v = L.sub(v, L.mul(ca, r[y]))
        if v:
            r[xb] = v
    return Polynomial._raw(L, P.n, r)


def extension_degrees(deg: int, max_ext: int) -> list[int]:
    """Extension degrees to search.

    An F_q-irreducible but absolutely reducible P splits into conjugate factors
    over F_{q^e} with e dividing deg P, so divisors of the degree suffice.
    """
    return [m for m in divisors(deg) if m <= max_ext] if deg > 0 else [1]


def is_absolutely_reducible(P: Polynomial, max_ext: int | None = None, cap: int = DEFAULT_CAP):
    """Return ``(reducible, certificate)``; the certificate is a factor pair or None.

    Raises :class:`Inconclusive` when more than ``cap`` search nodes are needed.
    """
    if P.is_zero():
        raise ValueError("zero polynomial")
    ctx, n = P.ctx, P.n
    if P.is_monomial():
        (e,) = P.terms
        if sum(e) <= 1:
            return False, None
        t = next(s for s in range(n) if e[s])
        et = unit_exponent(n, t + 1)
        return True, (Polynomial.monomial(ctx, et), P.unshift(et))
    lo = inf_point(P.terms)
    if any(lo):
        return True, (Polynomial.monomial(ctx, lo), P.unshift(lo))
    deg = P.total_degree()
    if deg <= 1:
        return False, None
    if max_ext is None:
        max_ext = deg
    shapes = _plan(tuple(sorted(P.terms)))
    budget = cap
    for m in extension_degrees(deg, max_ext):
        L = make_field(ctx.p, ctx.k * m)
        PL = P.embed(L)
        for shape in shapes:
            status, nodes, qvals = shape.run(PL, budget)
            budget -= nodes
            if status == kernels.CAPPED or budget < 0:
                raise Inconclusive(f"search cap of {cap} nodes exceeded")
            if status == kernels.FOUND:
                Q = Polynomial._raw(L, n, {x: _dec(L, e) for x, e in zip(shape.A, qvals) if e})
                R = _cofactor(PL, Q, shape)
                if poly_mul(Q, R) != PL:
                    raise AssertionError("kernel certificate failed verification")
                return True, (Q, R)
    return False, None


@dataclass(frozen=True)
class ZStatus:
    kind: str  # "empty" | "all" | "proper"
    reducible: int
    total: int

    def to_json(self) -> dict:
        return {"status": self.kind, "reducible": self.reducible, "total": self.total}


def members(I: Support, field: FieldCtx):
    """Polynomials with support exactly I, first coefficient 1, other coefficients units."""
    pts = I.points
    for rest in itertools.product(range(1, field.q), repeat=len(pts) - 1):
        yield Polynomial._raw(field, I.n, dict(zip(pts, (1,) + rest)))


def member_count(I: Support, field: FieldCtx) -> int:
    return (field.q - 1) ** (len(I) - 1)


def _status_chunk(args):
    points, n, p, k, coeffs, max_ext, cap = args
    field = make_field(p, k)
    hits = 0
    for rest in coeffs:
        P = Polynomial._raw(field, n, dict(zip(points, (1,) + tuple(rest))))
        hits += is_absolutely_reducible(P, max_ext, cap)[0]
    return hits


def z_status(I: Support, field: FieldCtx, max_ext: int | None = None, cap: int = DEFAULT_CAP, jobs: int = 1) -> ZStatus:
    """Count absolutely reducible members of V_I with coefficients in ``field``.

    Members differing by a common unit factor are collapsed, so the counts
    are over tuples whose first coefficient is 1.
    """
    if field.q < 2:
        raise ValueError("field too small")
    total = member_count(I, field)
    if total > cap:
        raise Inconclusive(f"{total} members exceed the cap of {cap}")
    if max_ext is None:
        max_ext = max(1, max(sum(e) for e in I))
    if jobs > 1 and total > 1:
        allc = list(itertools.product(range(1, field.q), repeat=len(I) - 1))
        size = -(-len(allc) // (4 * jobs))
        chunks = [allc[i : i + size] for i in range(0, len(allc), size)]
        args = [(I.points, I.n, field.p, field.k, ch, max_ext, cap) for ch in chunks]
        with ProcessPoolExecutor(jobs) as ex:
            hits = sum(ex.map(_status_chunk, args))
    else:
        hits = sum(is_absolutely_reducible(P, max_ext, cap)[0] for P in members(I, field))
    if hits == 0:
        kind = "empty"
    elif hits == total:
        kind = "all"
    else:
        kind = "proper"
    return ZStatus(kind, hits, total)


def ostrowski_check(P: Polynomial, Q: Polynomial) -> bool:
    """Is the Newton polytope of P*Q the Minkowski sum of those of P and Q?"""
    if P.is_zero() or Q.is_zero():
        raise ValueError("zero polynomial")
    left = hull(poly_mul(P, Q).terms)
    right = minkowski_hull(hull(P.terms), hull(Q.terms))
    return left.vertices == right.vertices


def random_polynomial(rng, field: FieldCtx, n: int, degree: int, max_terms: int = 8) -> Polynomial:
    """Random nonzero polynomial of total degree <= degree with unit coefficients."""
    monos = [e for e in itertools.product(range(degree + 1), repeat=n) if sum(e) <= degree]
    k = rng.randint(1, min(max_terms, len(monos)))
    exps = rng.sample(monos, k)
    return Polynomial._raw(field, n, {e: rng.randrange(1, field.q) for e in exps})


def ostrowski_fuzz(seed: int, count: int, field: FieldCtx, n: int = 3, degree: int = 4) -> dict:
    """Check the Minkowski property on ``count`` seeded random pairs."""
    import random

    rng = random.Random(seed)
    failures = []
    for idx in range(count):
        P = random_polynomial(rng, field, n, degree)
        Q = random_polynomial(rng, field, n, degree)
        if not ostrowski_check(P, Q):
            failures.append({"index": idx, "P": P.to_json(), "Q": Q.to_json()})
    return {"seed": seed, "count": count, "passed": count - len(failures), "failures": failures}
