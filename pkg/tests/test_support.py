import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from newtonfactor.field import make_field
from newtonfactor.support import (
    MAX_COORD,
    Polynomial,
    Support,
    add_exponents,
    inf_point,
    minkowski_sum,
    normalize,
    poly_mul,
    segment_lattice_points,
    support_of,
    total_degree,
)
from newtonfactor.witness import flattening_for, lemma44_sets, lemma48_lift, transport_triple

from .oracles import sympy_mul_mod

F2, F3, F5 = make_field(2), make_field(3), make_field(5)
x = sympy.Symbol("x")


def uni(ctx, coeffs):
    return Polynomial(ctx, 1, [((i,), c) for i, c in enumerate(coeffs) if c])


# ---- support_of


def test_support_of_definition():
    assert support_of(uni(F3, [1, 0, 1])) == Support([(0,), (2,)])
    assert support_of(Polynomial(F3, 2, {(1, 1): 1})) == Support([(1, 1)])


# frozen from sympy: (1+x)(1+2x) mod 3 has terms {0: 1, 2: 2}
FROZEN_CANCEL = {(0,): 1, (2,): 2}


def test_support_of_cancellation_oracle():
    assert sympy_mul_mod([1 + x, 1 + 2 * x], [x], 3) == FROZEN_CANCEL


def test_support_of_cancellation():
    P = poly_mul(uni(F3, [1, 1]), uni(F3, [1, 2]))
    assert support_of(P) == Support([(0,), (2,)])
    assert {e: c.value for e, c in P.sorted_terms()} == FROZEN_CANCEL


def test_support_of_zero_raises():
    with pytest.raises(ValueError, match="empty support"):
        support_of(Polynomial(F3, 2, {}))


# ---- inf / normalize


@pytest.mark.parametrize(
    "pts, expected",
    [([(1, 2), (2, 1)], (1, 1)), ([(0, 0), (6, 0), (0, 6)], (0, 0)), ([(3,)], (3,))],
)
def test_inf_point(pts, expected):
    assert inf_point(Support(pts)) == expected


@pytest.mark.parametrize(
    "pts, shifted, lo",
    [
        ([(1, 2), (2, 1)], [(0, 1), (1, 0)], (1, 1)),
        ([(0, 0), (2, 2)], [(0, 0), (2, 2)], (0, 0)),
        ([(5,)], [(0,)], (5,)),
    ],
)
def test_normalize(pts, shifted, lo):
    assert normalize(Support(pts)) == (Support(shifted), lo)


# ---- minkowski / degree


def test_minkowski_examples():
    assert minkowski_sum(Support([(0,), (1,)]), Support([(0,), (1,)])) == Support([(0,), (1,), (2,)])
    S = Support([(1, 2), (3, 0)])
    assert minkowski_sum(Support([(0, 0)]), S) == S


def test_minkowski_of_witness_sets():
    t = lemma44_sets(2)
    expected = [(i, j, 0) for i in range(4) for j in range(3)] + [(i, j, 1) for i in range(3) for j in range(3)]
    assert minkowski_sum(t.Ip, t.Ipp) == Support(expected)


def test_minkowski_dimension_mismatch():
    with pytest.raises(ValueError, match="dimension"):
        minkowski_sum(Support([(0,)]), Support([(0, 0)]))


def test_total_degree():
    assert total_degree(Support([(0, 0), (2, 0), (0, 2)])) == 2
    assert total_degree(Support([(0,)])) == 0
    flat = transport_triple(lemma44_sets(2), flattening_for(2))
    assert total_degree(lemma48_lift(flat.Ip, flat.Ipp, flat.I)) == 27


# ---- poly_mul


def test_poly_mul_frobenius_and_identity():
    assert poly_mul(uni(F2, [1, 1]), uni(F2, [1, 1])) == uni(F2, [1, 0, 1])
    P = Polynomial(F5, 2, {(1, 0): 3, (0, 2): 1})
    assert poly_mul(P, Polynomial.constant(F5, 2)) == P


# frozen from sympy: (1-x)(1+x+x^2) mod 5
FROZEN_CUBE = {(0,): 1, (3,): 4}


def test_poly_mul_cube_oracle():
    assert sympy_mul_mod([1 - x, 1 + x + x**2], [x], 5) == FROZEN_CUBE


def test_poly_mul_cube():
    P = poly_mul(uni(F5, [1, 4]), uni(F5, [1, 1, 1]))
    assert {e: c.value for e, c in P.sorted_terms()} == FROZEN_CUBE


def test_poly_mul_field_mismatch():
    with pytest.raises(ValueError):
        poly_mul(uni(F2, [1, 1]), uni(F3, [1, 1]))


def test_exponent_overflow_guard():
    with pytest.raises(OverflowError):
        add_exponents((MAX_COORD,), (1,))
    with pytest.raises(ValueError):
        Support([(-1, 0)])


# ---- segments


@pytest.mark.parametrize(
    "i, j, pts",
    [
        ((4, 0), (0, 2), [(4, 0), (2, 1), (0, 2)]),
        ((0,), (3,), [(0,), (1,), (2,), (3,)]),
        ((0, 0), (1, 1), [(0, 0), (1, 1)]),
    ],
)
def test_segment_lattice_points(i, j, pts):
    assert segment_lattice_points(i, j) == pts


def test_segment_degenerate():
    with pytest.raises(ValueError, match="degenerate segment"):
        segment_lattice_points((1, 1), (1, 1))


# ---- JSON


def test_json_round_trip():
    S = Support([(0, 0), (2, 0), (0, 2)])
    assert S.to_json() == {"n": 2, "points": [[0, 0], [0, 2], [2, 0]]}
    assert Support.from_json(S.to_json()) == S
    F9 = make_field(3, 2)
    P = Polynomial(F9, 2, [((2, 0), [1, 0]), ((0, 1), [0, 2])])
    assert Polynomial.from_json(P.to_json()) == P


# ---- properties

points2 = st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=1, max_size=5)


def poly_strategy(ctx, n=2):
    return st.dictionaries(
        st.tuples(*[st.integers(0, 3)] * n), st.integers(1, ctx.q - 1), min_size=1, max_size=5
    ).map(lambda d: Polynomial(ctx, n, d))


@given(points2, points2)
def test_inf_of_sum_is_sum_of_infs(a, b):
    A, B = Support(a), Support(b)
    assert inf_point(minkowski_sum(A, B)) == tuple(x + y for x, y in zip(inf_point(A), inf_point(B)))


@given(poly_strategy(F3), poly_strategy(F3))
def test_product_support_inside_sum(P, Q):
    R = poly_mul(P, Q)
    assert R.is_zero() is False
    assert support_of(R) <= minkowski_sum(support_of(P), support_of(Q))


@given(poly_strategy(F5), poly_strategy(F5), poly_strategy(F5))
def test_poly_mul_commutative_associative(P, Q, R):
    assert poly_mul(P, Q).terms == poly_mul(Q, P).terms
    assert poly_mul(poly_mul(P, Q), R).terms == poly_mul(P, poly_mul(Q, R)).terms


@given(points2)
def test_normalize_idempotent(a):
    S, _ = normalize(Support(a))
    assert normalize(S) == (S, (0, 0))
