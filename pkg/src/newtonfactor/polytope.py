"""Lattice polytopes: exact hulls, faces and integral Minkowski decompositions.

Everything here is exact integer/rational arithmetic.  Hulls are computed by
gift wrapping in the affine hull of the input, recursing into facets to obtain
ridges, so the face lattice below dimension 3 comes out as a by-product.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd
from operator import mul
from typing import Iterable, Mapping, Sequence

from .support import Exponent, Support, inf_point

Vec = tuple[int, ...]


# ---------------------------------------------------------------- linear algebra


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(map(mul, a, b))


def _sub(a: Sequence[int], b: Sequence[int]) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def _primitive(v: Sequence[int]) -> Vec:
    g = reduce(gcd, v, 0)
    return tuple(v) if g in (0, 1) else tuple(x // g for x in v)


def _rref(rows: Sequence[Sequence[int]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _nullspace(rows: Sequence[Sequence[int]], ncols: int) -> list[Vec]:
    """Integer basis of {x : <row, x> = 0 for every row}."""
    red, pivots = _rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][f]
        den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in v), 1)
        basis.append(_primitive([int(x * den) for x in v]))
    return basis


def _frame(pts: Sequence[Vec]) -> tuple[int, list[int]]:
    """Affine dimension and pivot coordinates (projection onto them is injective on the hull)."""
    r0 = pts[0]
    dirs = [_sub(p, r0) for p in pts[1:]]
    dirs = [d for d in dirs if any(d)]
    if not dirs:
        return 0, []
    pivots = _pivot_columns(dirs, len(r0))
    return len(pivots), pivots


def _pivot_columns(rows: Sequence[Sequence[int]], ncols: int) -> list[int]:
    """Pivot columns of the row echelon form, by fraction-free elimination."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        top = m[r]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                row = [x * top[c] - y * f for x, y in zip(m[i], top)]
                g = reduce(gcd, row, 0)
                m[i] = [x // g for x in row] if g > 1 else row
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return pivots


class _Hull:
    """Facet computation over a fixed point list, memoized by index set."""

    def __init__(self, points: Sequence[Vec]):
        self.points = list(points)
        self._facets: dict[frozenset, list[frozenset]] = {}
        self._dims: dict[frozenset, int] = {}

    def dim(self, S: frozenset) -> int:
        if S not in self._dims:
            self._dims[S] = _frame([self.points[i] for i in sorted(S)])[0]
        return self._dims[S]

    def facets(self, S: frozenset) -> list[frozenset]:
        """Facets of conv(points[S]) inside its own affine hull, as index sets."""
        got = self._facets.get(S)
        if got is not None:
            return got
        idx = sorted(S)
        D, piv = _frame([self.points[i] for i in idx])
        self._dims[S] = D
        proj = {i: tuple(self.points[i][c] for c in piv) for i in idx}
        if D == 0:
            out = []
        elif D == 1:
            lo = min(idx, key=lambda i: proj[i][0])
            hi = max(idx, key=lambda i: proj[i][0])
            out = [frozenset([lo]), frozenset([hi])]
        else:
            out = [F for F, _ in self._wrap(idx, proj, D)]
        out.sort(key=sorted)
        self._facets[S] = out
        return out

    def facets_with_normals(self, S: frozenset) -> list[tuple[frozenset, Vec, list[int]]]:
        idx = sorted(S)
        D, piv = _frame([self.points[i] for i in idx])
        proj = {i: tuple(self.points[i][c] for c in piv) for i in idx}
        if D == 0:
            return []
        if D == 1:
            lo = min(idx, key=lambda i: proj[i][0])
            hi = max(idx, key=lambda i: proj[i][0])
            return [(frozenset([lo]), (1,), piv), (frozenset([hi]), (-1,), piv)]
        return [(F, a, piv) for F, a in self._wrap(idx, proj, D)]

    @staticmethod
    def _argmin(idx, proj, a) -> frozenset:
        vals = {i: _dot(a, proj[i]) for i in idx}
        m = min(vals.values())
        return frozenset(i for i in idx if vals[i] == m)

    def _rotate(self, idx, proj, a: Vec, base: frozenset, D: int, inside: int | None) -> Vec:
        """Rotate the supporting hyperplane with normal ``a`` about aff(base).

        Candidate normals are ``s*a + w`` with ``w`` orthogonal to aff(base)
        and positive on ``inside`` (a point of the current face off aff(base));
        the smallest admissible ``s`` gives the next face.
        """
        bl = sorted(base)
        r0 = proj[bl[0]]
        dirs = [_sub(proj[i], r0) for i in bl[1:]]
        dirs = [d for d in dirs if any(d)]
        w = None
        if D == 3 and len(dirs) == 1:
            # ridge is a segment: its direction crossed with a is orthogonal to both
            d = dirs[0]
            w = _primitive((d[1] * a[2] - d[2] * a[1], d[2] * a[0] - d[0] * a[2], d[0] * a[1] - d[1] * a[0]))
        else:
            N = _nullspace(dirs, D) if dirs else [tuple(int(i == j) for j in range(D)) for i in range(D)]
            for u in N:
                if any(u[s] * a[t] != u[t] * a[s] for s in range(D) for t in range(s + 1, D)):
                    w = u
                    break
        assert w is not None
        if inside is not None and _dot(w, _sub(proj[inside], r0)) < 0:
            w = tuple(-x for x in w)
        # maximize -w.y / a.y over points with a.y > 0, as an exact integer ratio
        num, den = None, 1
        ar, wr = _dot(a, r0), _dot(w, r0)
        for i in idx:
            y = proj[i]
            ay = _dot(a, y) - ar
            if ay > 0:
                wy = wr - _dot(w, y)
                if num is None or wy * den > num * ay:
                    num, den = wy, ay
        assert num is not None
        return _primitive([x * num + y * den for x, y in zip(a, w)])

    @staticmethod
    def _wrap2(idx, proj) -> list[tuple[frozenset, Vec]]:
        # monotone chain; each edge collects every point on its supporting line
        order = sorted(idx, key=lambda i: proj[i])

        def cross(o, u, v):
            return (u[0] - o[0]) * (v[1] - o[1]) - (u[1] - o[1]) * (v[0] - o[0])

        def half(seq):
            out = []
            for i in seq:
                while len(out) >= 2 and cross(proj[out[-2]], proj[out[-1]], proj[i]) <= 0:
                    out.pop()
                out.append(i)
            return out

        lower, upper = half(order), half(order[::-1])
        ring = lower[:-1] + upper[:-1]
        faces = []
        for u, v in zip(ring, ring[1:] + ring[:1]):
            pu, pv = proj[u], proj[v]
            F = frozenset(i for i in idx if cross(pu, pv, proj[i]) == 0)
            a = _primitive((pu[1] - pv[1], pv[0] - pu[0]))
            faces.append((F, a))
        return sorted(faces, key=lambda kv: sorted(kv[0]))

    def _wrap(self, idx, proj, D) -> list[tuple[frozenset, Vec]]:
        if D == 2:
            return self._wrap2(idx, proj)
        a = tuple(int(j == 0) for j in range(D))
        M = self._argmin(idx, proj, a)
        while self.dim(M) < D - 1:
            a = self._rotate(idx, proj, a, M, D, None)
            M = self._argmin(idx, proj, a)
        found = {M: a}
        queue = [M]
        while queue:
            F = queue.pop()
            aF = found[F]
            for R in self.facets(F):
                inside = next(i for i in F if i not in R)
                b = self._rotate(idx, proj, aF, R, D, inside)
                G = self._argmin(idx, proj, b)
                if G not in found:
                    found[G] = b
                    queue.append(G)
        return sorted(found.items(), key=lambda kv: sorted(kv[0]))

    def faces(self, S: frozenset, max_dim: int | None = None) -> dict[int, set[frozenset]]:
        out: dict[int, set[frozenset]] = {}
        seen = set()
        stack = [S]
        while stack:
            F = stack.pop()
            if F in seen:
                continue
            seen.add(F)
            d = self.dim(F)
            out.setdefault(d, set()).add(F)
            if d > 0:
                stack.extend(self.facets(F))
        if max_dim is not None:
            out = {d: v for d, v in out.items() if d <= max_dim}
        return out


# ---------------------------------------------------------------- polytopes


class LatticePolytope:
    """Convex hull of finitely many lattice points, with vertex/edge/2-face data."""

    def __init__(self, n: int, vertices, edges, faces2, dim: int, eqs, ineqs):
        self.n = n
        self.vertices: tuple[Exponent, ...] = tuple(sorted(vertices))
        self.edges: tuple[tuple[Exponent, Exponent], ...] = tuple(sorted(edges))
        self.faces2: tuple[tuple[Exponent, ...], ...] = tuple(sorted(faces2))
        self.dim = dim
        self._eqs = eqs
        self._ineqs = ineqs

    def __eq__(self, other) -> bool:
        return isinstance(other, LatticePolytope) and self.n == other.n and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash((self.n, self.vertices))

    def __repr__(self) -> str:
        return f"LatticePolytope(dim={self.dim}, vertices={list(self.vertices)})"

    def is_point(self) -> bool:
        return len(self.vertices) == 1

    def inf(self) -> Exponent:
        return inf_point(self.vertices)

    def contains(self, x: Sequence[int]) -> bool:
        return all(_dot(nv, x) == c for nv, c in self._eqs) and all(
            _dot(nv, x) >= b for nv, b in self._ineqs
        )

    def lattice_points(self) -> list[Exponent]:
        """All integer points of the polytope, sorted lexicographically."""
        if len(self.vertices) == 1:
            return [self.vertices[0]]
        ranges = [range(min(c), max(c) + 1) for c in zip(*self.vertices)]
        return [x for x in product(*ranges) if self.contains(x)]

    def support(self) -> Support:
        return Support(self.vertices, self.n)

    def to_json(self) -> dict:
        return {"n": self.n, "points": [list(v) for v in self.vertices]}


def hull(S: Support | Iterable[Sequence[int]]) -> LatticePolytope:
    pts = sorted({tuple(p) for p in S})
    if not pts:
        raise ValueError("empty support")
    n = len(pts[0])
    H = _Hull(pts)
    top = frozenset(range(len(pts)))
    faces = H.faces(top)
    dim = max(faces)
    verts = sorted(pts[next(iter(F))] for F in faces.get(0, ()))
    vset = set(verts)

    def face_vertices(F):
        return sorted(pts[i] for i in F if pts[i] in vset)

    edges = []
    for F in faces.get(1, ()):
        vs = face_vertices(F)
        assert len(vs) == 2
        edges.append((vs[0], vs[1]))
    faces2 = []
    for F in faces.get(2, ()):
        vs = face_vertices(F)
        local = [e for e in edges if e[0] in vs and e[1] in vs]
        faces2.append(_cycle(vs, local))
    # inequality description for membership tests
    r0 = pts[0]
    dirs = [d for d in (_sub(p, r0) for p in pts[1:]) if any(d)]
    eqs = [(nv, _dot(nv, r0)) for nv in _nullspace(dirs, n)] if dirs else [
        (tuple(int(i == j) for j in range(n)), r0[i]) for i in range(n)
    ]
    ineqs = []
    if dim > 0:
        for F, a, piv in H.facets_with_normals(top):
            full = [0] * n
            for c, x in zip(piv, a):
                full[c] = x
            ineqs.append((tuple(full), _dot(full, pts[next(iter(F))])))
    return LatticePolytope(n, verts, edges, faces2, dim, eqs, ineqs)


def _cycle(vs: list[Exponent], edges: list[tuple[Exponent, Exponent]]) -> tuple[Exponent, ...]:
    adj: dict[Exponent, list[Exponent]] = {v: [] for v in vs}
    for v, w in edges:
        adj[v].append(w)
        adj[w].append(v)
    start = vs[0]
    cyc = [start]
    prev, cur = start, min(adj[start])
    while cur != start:
        cyc.append(cur)
        nxt = [u for u in adj[cur] if u != prev]
        prev, cur = cur, nxt[0]
    return tuple(cyc)


def min_face(S: Iterable[Sequence[int]], a: Sequence[int]) -> set[Exponent]:
    pts = [tuple(p) for p in S]
    if not pts:
        raise ValueError("empty point set")
    vals = [_dot(a, p) for p in pts]
    m = min(vals)
    return {p for p, v in zip(pts, vals) if v == m}


def minkowski_hull(A: LatticePolytope, B: LatticePolytope) -> LatticePolytope:
    return hull({tuple(x + y for x, y in zip(a, b)) for a in A.vertices for b in B.vertices})


def edge_gcd(v: Sequence[int], w: Sequence[int]) -> int:
    d = reduce(gcd, _sub(w, v), 0)
    if d == 0:
        raise ValueError("degenerate edge")
    return d


def lambda_candidates(v: Sequence[int], w: Sequence[int]) -> list[Fraction]:
    d = edge_gcd(v, w)
    return [Fraction(a, d) for a in range(d + 1)]


# ---------------------------------------------------------------- decompositions


@dataclass
class Decomposition:
    left: LatticePolytope
    right: LatticePolytope
    lam: dict = field(repr=False)
    phi: dict = field(repr=False)
    psi: dict = field(repr=False)

    def lambda_vector(self, edges) -> tuple[Fraction, ...]:
        return tuple(self.lam[e] for e in edges)

    def is_trivial(self) -> bool:
        return self.left.is_point() or self.right.is_point()

    def to_json(self) -> dict:
        return {
            "left": self.left.to_json(),
            "right": self.right.to_json(),
            "lambda": [
                {"edge": [list(v), list(w)], "num": q.numerator, "den": q.denominator}
                for (v, w), q in sorted(self.lam.items())
            ],
        }


def _finish(C: LatticePolytope, phi: dict) -> Decomposition | None:
    """Anchor phi so that inf of its image is 0, then verify C' + C'' = C."""
    lo = inf_point(phi.values())
    phi = {v: _sub(x, lo) for v, x in phi.items()}
    psi = {v: _sub(v, x) for v, x in phi.items()}
    left = hull(set(phi.values()))
    right = hull(set(psi.values()))
    if minkowski_hull(left, right).vertices != C.vertices:
        return None
    lam = {}
    for v, w in C.edges:
        lam[(v, w)] = _edge_ratio(phi[w], phi[v], v, w)
        if lam[(v, w)] is None:
            return None
    return Decomposition(left, right, lam, phi, psi)


def _edge_ratio(pw, pv, v, w) -> Fraction | None:
    diff = _sub(pw, pv)
    e = _sub(w, v)
    t = next(s for s in range(len(e)) if e[s])
    lam = Fraction(diff[t], e[t])
    if any(Fraction(x) != lam * y for x, y in zip(diff, e)) or not 0 <= lam <= 1:
        return None
    return lam


def enumerate_decompositions(C: LatticePolytope, require_positive_dims: bool = False) -> list[Decomposition]:
    """All integral C = C' + C'' with inf C' = 0, sorted by lambda vector."""
    verts = list(C.vertices)
    if len(verts) == 1:
        if require_positive_dims:
            return []
        v = verts[0]
        z = tuple(0 for _ in v)
        return [Decomposition(hull([z]), hull([v]), {}, {v: z}, {v: v})]
    adj: dict[Exponent, list[Exponent]] = {v: [] for v in verts}
    for v, w in C.edges:
        adj[v].append(w)
        adj[w].append(v)
    # BFS spanning tree from the lex-min vertex
    order = [verts[0]]
    parent = {verts[0]: None}
    for v in order:
        for w in sorted(adj[v]):
            if w not in parent:
                parent[w] = v
                order.append(w)
    pos = {v: i for i, v in enumerate(order)}
    # non-tree constraints checked once both endpoints are placed
    checks: dict[Exponent, list[Exponent]] = {v: [] for v in order}
    for v, w in C.edges:
        if parent.get(w) == v or parent.get(v) == w:
            continue
        later, earlier = (v, w) if pos[v] > pos[w] else (w, v)
        checks[later].append(earlier)

    steps = {}
    for v in order[1:]:
        u = parent[v]
        d = edge_gcd(u, v)
        steps[v] = (d, tuple(x // d for x in _sub(v, u)))

    out: list[Decomposition] = []
    phi: dict[Exponent, Vec] = {order[0]: tuple(0 for _ in order[0])}

    def consistent(v):
        for u in checks[v]:
            d = edge_gcd(u, v)
            if _edge_ratio(phi[v], phi[u], u, v) is None:
                return False
            # the ratio must be a multiple of 1/d for an integral split
            r = _edge_ratio(phi[v], phi[u], u, v)
            if (r * d).denominator != 1:
                return False
        return True

    def rec(k):
        if k == len(order):
            dec = _finish(C, dict(phi))
            if dec is not None:
                out.append(dec)
            return
        v = order[k]
        base = phi[parent[v]]
        d, st = steps[v]
        for alpha in range(d + 1):
            phi[v] = tuple(b + alpha * s for b, s in zip(base, st))
            if consistent(v):
                rec(k + 1)
        del phi[v]

    rec(1)
    if require_positive_dims:
        out = [dec for dec in out if not dec.is_trivial()]
    out.sort(key=lambda dec: dec.lambda_vector(C.edges))
    return out


def split_maps(C: LatticePolytope, Cp: LatticePolytope, Cpp: LatticePolytope) -> tuple[dict, dict]:
    """For each vertex v of C the unique x in C', y in C'' with x + y = v."""
    if minkowski_hull(Cp, Cpp).vertices != C.vertices:
        raise ValueError("C' + C'' does not equal C")
    phi, psi = {}, {}
    for v in C.vertices:
        pairs = [(x, y) for x in Cp.vertices for y in Cpp.vertices if all(a + b == c for a, b, c in zip(x, y, v))]
        if len(pairs) != 1:
            raise ValueError(f"vertex {v} does not split uniquely")
        phi[v], psi[v] = pairs[0]
    return phi, psi


def lambda_of(C: LatticePolytope, phi: Mapping) -> dict:
    lam = {}
    for v, w in C.edges:
        r = _edge_ratio(phi[w], phi[v], v, w)
        if r is None:
            raise ValueError(f"not a valid splitting on edge {v}-{w}")
        lam[(v, w)] = r
    return lam


def reconstruct(C: LatticePolytope, lam: Mapping) -> Decomposition | None:
    """Rebuild (C', C'') from edge coefficients; None if they are inconsistent."""
    verts = list(C.vertices)
    base = verts[0]
    if len(verts) == 1:
        return enumerate_decompositions(C)[0]
    coef = {}
    for (v, w), q in lam.items():
        q = Fraction(q)
        coef[(v, w)] = q
        coef[(w, v)] = q
    adj: dict[Exponent, list[Exponent]] = {v: [] for v in verts}
    for v, w in C.edges:
        if (v, w) not in coef:
            raise ValueError(f"lambda missing on edge {v}-{w}")
        adj[v].append(w)
        adj[w].append(v)
    phi: dict[Exponent, tuple[Fraction, ...]] = {base: tuple(Fraction(0) for _ in base)}
    stack = [base]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            q = coef[(v, w)]
            cand = tuple(a + q * (y - x) for a, x, y in zip(phi[v], v, w))
            if w in phi:
                if phi[w] != cand:
                    return None
            else:
                phi[w] = cand
                stack.append(w)
    if any(x.denominator != 1 for p in phi.values() for x in p):
        return None
    dec = _finish(C, {v: tuple(int(x) for x in p) for v, p in phi.items()})
    if dec is None:
        return None
    if any(dec.lam[e] != Fraction(lam[e]) for e in C.edges):
        return None
    return dec
