import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from newtonfactor.polytope import (
    enumerate_decompositions,
    hull,
    lambda_candidates,
    lambda_of,
    min_face,
    minkowski_hull,
    reconstruct,
    split_maps,
)

from .oracles import vertices_lp

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]
TRI = [(0, 0), (2, 0), (0, 2)]
half = Fraction(1, 2)


# ---- hull


def test_hull_square():
    C = hull(SQUARE)
    assert C.vertices == tuple(sorted(SQUARE))
    assert len(C.edges) == 4 and len(C.faces2) == 1 and C.dim == 2


def test_hull_segment_drops_interior():
    C = hull([(0,), (1,), (2,)])
    assert C.vertices == ((0,), (2,))
    assert C.edges == (((0,), (2,)),)


# frozen from the LP oracle: (1,1) is not a vertex of the triangle
FROZEN_TRI_VERTICES = [(0, 0), (0, 2), (2, 0)]


def test_hull_triangle_with_edge_point_oracle():
    assert vertices_lp(TRI + [(1, 1)]) == FROZEN_TRI_VERTICES


def test_hull_triangle_with_edge_point():
    C = hull(TRI + [(1, 1)])
    assert list(C.vertices) == FROZEN_TRI_VERTICES
    assert C.contains((1, 1)) and not C.contains((2, 1))
    assert C.lattice_points() == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]


@pytest.mark.parametrize(
    "pts, counts",
    [
        ([(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)], (8, 12, 6)),
        ([(1, 1, 0), (0, 1, 1), (1, 0, 1), (1, 2, 1), (2, 1, 1), (1, 1, 2)], (6, 12, 8)),
        ([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], (4, 6, 4)),
    ],
)
def test_hull_3d_face_counts(pts, counts):
    C = hull(pts)
    assert (len(C.vertices), len(C.edges), len(C.faces2)) == counts
    for cyc in C.faces2:
        for v, w in zip(cyc, cyc[1:] + cyc[:1]):
            assert (min(v, w), max(v, w)) in C.edges


pts3 = st.lists(st.tuples(*[st.integers(0, 4)] * 3), min_size=1, max_size=12)


@given(pts3)
def test_hull_vertices_match_lp(pts):
    assert list(hull(pts).vertices) == vertices_lp(pts)


# ---- min_face


def test_min_face_examples():
    assert min_face(SQUARE, (1, 1)) == {(0, 0)}
    assert min_face(SQUARE, (0, 0)) == set(SQUARE)
    assert min_face(TRI, (0, 1)) == {(0, 0), (2, 0)}


# ---- lambda candidates


@pytest.mark.parametrize(
    "v, w, out",
    [
        ((0, 0), (4, 2), [0, half, 1]),
        ((0,), (3,), [0, Fraction(1, 3), Fraction(2, 3), 1]),
        ((0, 0), (1, 1), [0, 1]),
    ],
)
def test_lambda_candidates(v, w, out):
    assert lambda_candidates(v, w) == out


def test_lambda_candidates_degenerate():
    with pytest.raises(ValueError):
        lambda_candidates((1, 1), (1, 1))


# ---- decompositions


def pairs(decs):
    return [(d.left.vertices, d.right.vertices) for d in decs]


def test_segment_decompositions():
    C = hull([(0, 0), (4, 2)])
    decs = enumerate_decompositions(C)
    assert pairs(decs) == [
        (((0, 0),), ((0, 0), (4, 2))),
        (((0, 0), (2, 1)), ((0, 0), (2, 1))),
        (((0, 0), (4, 2)), ((0, 0),)),
    ]
    assert len(enumerate_decompositions(C, require_positive_dims=True)) == 1


def test_triangle_only_homotheties():
    C = hull(TRI)
    decs = enumerate_decompositions(C)
    assert [d.lambda_vector(C.edges) for d in decs] == [(0,) * 3, (half,) * 3, (1,) * 3]
    assert pairs(decs)[1] == (((0, 0), (0, 1), (1, 0)),) * 2


def test_point_decompositions():
    C = hull([(0, 0)])
    assert pairs(enumerate_decompositions(C)) == [(((0, 0),), ((0, 0),))]
    assert enumerate_decompositions(C, require_positive_dims=True) == []


def test_square_decompositions():
    C = hull(SQUARE)
    got = set(pairs(enumerate_decompositions(C)))
    seg_x, seg_y = ((0, 0), (1, 0)), ((0, 0), (0, 1))
    assert got == {(((0, 0),), C.vertices), (C.vertices, ((0, 0),)), (seg_x, seg_y), (seg_y, seg_x)}


# ---- split maps / lambda / reconstruct


def test_split_maps_homothety():
    C, H = hull(TRI), hull([(0, 0), (1, 0), (0, 1)])
    phi, psi = split_maps(C, H, H)
    assert phi == {v: tuple(x // 2 for x in v) for v in C.vertices}
    assert set(lambda_of(C, phi).values()) == {half}


def test_split_maps_trivial():
    C = hull(TRI)
    phi, _ = split_maps(C, C, hull([(0, 0)]))
    assert phi == {v: v for v in C.vertices}
    assert set(lambda_of(C, phi).values()) == {1}


# frozen by brute force over the vertex pairs of the two segments
FROZEN_SQUARE_SPLIT = {(0, 0): ((0, 0), (0, 0)), (0, 1): ((0, 0), (0, 1)), (1, 0): ((1, 0), (0, 0)), (1, 1): ((1, 0), (0, 1))}


def test_split_maps_square_oracle():
    A, B = [(0, 0), (1, 0)], [(0, 0), (0, 1)]
    got = {}
    for v in SQUARE:
        sols = [(a, b) for a in A for b in B if (a[0] + b[0], a[1] + b[1]) == v]
        assert len(sols) == 1
        got[v] = sols[0]
    assert got == FROZEN_SQUARE_SPLIT


def test_split_maps_square():
    C = hull(SQUARE)
    phi, psi = split_maps(C, hull([(0, 0), (1, 0)]), hull([(0, 0), (0, 1)]))
    assert {v: (phi[v], psi[v]) for v in C.vertices} == FROZEN_SQUARE_SPLIT
    lam = lambda_of(C, phi)
    for (v, w), q in lam.items():
        assert q == (1 if v[1] == w[1] else 0)


def test_split_maps_rejects_non_summands():
    with pytest.raises(ValueError):
        split_maps(hull(SQUARE), hull([(0, 0), (1, 0)]), hull([(0, 0), (1, 0)]))


def test_lambda_of_rejects_non_parallel():
    C = hull(TRI)
    phi = {(0, 0): (0, 0), (2, 0): (1, 1), (0, 2): (0, 1)}
    with pytest.raises(ValueError, match="not a valid splitting"):
        lambda_of(C, phi)


def test_reconstruct_examples():
    C = hull(TRI)
    dec = reconstruct(C, {e: half for e in C.edges})
    assert dec.left.vertices == dec.right.vertices == ((0, 0), (0, 1), (1, 0))
    bad = dict(zip(C.edges, [half, half, 0]))
    assert reconstruct(C, bad) is None
    zero = reconstruct(C, {e: 0 for e in C.edges})
    assert zero.left.vertices == ((0, 0),) and zero.right.vertices == C.vertices


# ---- properties

poly2 = st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=4)


def normalized(pts):
    lo = tuple(min(c) for c in zip(*pts))
    return hull([tuple(a - b for a, b in zip(p, lo)) for p in pts])


@given(poly2, poly2)
def test_round_trip(a, b):
    A, B = normalized(a), normalized(b)
    C = minkowski_hull(A, B)
    phi, _ = split_maps(C, A, B)
    dec = reconstruct(C, lambda_of(C, phi))
    assert (dec.left.vertices, dec.right.vertices) == (A.vertices, B.vertices)


@given(poly2)
def test_enumeration_invariants(a):
    C = normalized(a)
    decs = enumerate_decompositions(C)
    got = pairs(decs)
    z = ((0, 0),)
    assert (z, C.vertices) in got and (C.vertices, z) in got
    for d in decs:
        assert minkowski_hull(d.left, d.right).vertices == C.vertices
        for (v, w), q in d.lam.items():
            assert all((q * (y - x)).denominator == 1 for x, y in zip(v, w))
    keys = [d.lambda_vector(C.edges) for d in decs]
    assert keys == sorted(keys)


@given(poly2, st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_min_face_of_sum(a, direction):
    C = normalized(a)
    for d in enumerate_decompositions(C):
        lhs = min_face(C.lattice_points(), direction)
        fa = min_face(d.left.lattice_points(), direction)
        fb = min_face(d.right.lattice_points(), direction)
        rhs = {tuple(x + y for x, y in zip(p, q)) for p in fa for q in fb}
        assert hull(lhs).vertices == hull(rhs).vertices


def test_triangle_law_random():
    rng = random.Random(7)
    done = 0
    while done < 15:
        pts = [(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(3)]
        C = normalized(pts)
        if len(C.vertices) != 3:
            continue
        for d in enumerate_decompositions(C):
            lam = set(d.lam.values())
            assert len(lam) == 1
        done += 1
