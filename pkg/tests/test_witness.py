import itertools

import pytest

from newtonfactor.field import make_field
from newtonfactor.support import Support, poly_mul, total_degree
from newtonfactor.witness import (
    LinearMap,
    build_characteristic_witness,
    check_B,
    find_B_counterexample,
    flattening_for,
    lemma43_lift,
    lemma44_sets,
    lemma44_witness_pair,
    lemma48_lift,
    mixed_radix_flatten,
    transport_triple,
    verify_witness,
)

F2, F3, F4, F5, F9 = make_field(2), make_field(3), make_field(2, 2), make_field(5), make_field(3, 2)


def uni(S):
    return sorted(e[0] for e in S)


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_size_identities(d):
    t = lemma44_sets(d)
    assert (len(t.Ip), len(t.Ipp), len(t.I)) == (6, 2 * d + 2, 4 * d + 7)
    J43 = lemma43_lift(t)
    assert (len(J43), J43.n) == (6 * d + 16, 5)
    flat = transport_triple(t, flattening_for(d))
    J = lemma48_lift(flat.Ip, flat.Ipp, flat.I)
    assert (len(J), total_degree(J)) == (6 * d + 14, 6 * d + 15)


def test_lemma44_errors():
    with pytest.raises(ValueError):
        lemma44_sets(1)


def test_lemma43_blocks_disjoint():
    t = lemma44_sets(2)
    J = lemma43_lift(t)
    tags = [e[3:] for e in J]
    assert sorted(set(tags)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert tags.count((1, 1)) == 1


def test_mixed_radix():
    assert mixed_radix_flatten((2, 3))((1, 2)) == 5
    f = mixed_radix_flatten((2, 3))
    assert sorted(f(x) for x in itertools.product(range(2), range(3))) == list(range(6))
    assert flattening_for(2) == LinearMap((6, 1, 3))
    with pytest.raises(ValueError):
        mixed_radix_flatten((1, 3))


@pytest.mark.parametrize("d", range(2, 7))
def test_flattening_injective(d):
    t = lemma44_sets(d)
    ell = flattening_for(d)
    sums = {tuple(a + b for a, b in zip(x, y)) for x in t.Ip for y in t.Ipp}
    assert len({ell(e) for e in sums}) == len(sums)


def test_transport_values():
    flat = transport_triple(lemma44_sets(2), flattening_for(2))
    assert uni(flat.Ip) == [0, 1, 3, 4, 6, 7]
    assert uni(flat.Ipp) == [0, 1, 6, 7, 12, 13]


def test_transport_collision():
    with pytest.raises(ValueError, match="not injective"):
        transport_triple(lemma44_sets(2), LinearMap((1, 1, 1)))


def test_lemma48_hypothesis_and_errors():
    flat = transport_triple(lemma44_sets(2), flattening_for(2))
    assert 2 in uni(flat.I) and 2 not in set(uni(flat.Ip)) | {7 + x for x in uni(flat.Ipp)}
    with pytest.raises(ValueError):
        lemma48_lift(flat.Ip, flat.Ipp, flat.I, "i", h=7)
    Ji = lemma48_lift(flat.Ip, flat.Ipp, flat.I, "i", h=8)
    assert (0, 2) in Ji.points
    union = lemma48_lift(flat.Ip, flat.Ipp, flat.I, "ii", symmetric=False)
    sym = lemma48_lift(flat.Ip, flat.Ipp, flat.I, "ii")
    assert set(sym.points) <= set(union.points)
    # the union variant keeps the shared point 7 at height 1
    assert (7, 1) in union.points and (7, 1) not in sym.points
    # I u {g'} == I' u (g' + I'') makes variant (ii) fail
    A, B = Support([(0,), (1,)]), Support([(0,), (1,)])
    with pytest.raises(ValueError, match="hypothesis"):
        lemma48_lift(A, B, Support([(0,), (2,)]), "ii")


VALID = [(d, p) for d in (2, 3, 4) for p in (2, 3, 5) if d % p]


@pytest.mark.parametrize("d, p", VALID)
def test_witness_pair_supports(d, p):
    t = lemma44_sets(d)
    P, Q = lemma44_witness_pair(d, make_field(p))
    PQ = poly_mul(P, Q)
    assert set(P.terms) == set(t.Ip.points)
    assert set(Q.terms) == set(t.Ipp.points)
    assert set(PQ.terms) == set(t.I.points)
    blocked = [(i, j, 0) for i in range(1, d + 1) for j in (0, 2)] + [(0, 1, 1), (d, 1, 1)]
    assert not set(blocked) & set(PQ.terms)


def test_witness_pair_extension():
    P, _ = lemma44_witness_pair(2, F3)
    assert P.ctx.q == 9
    P, _ = lemma44_witness_pair(2, F5)
    assert P.ctx.q == 5
    with pytest.raises(ValueError):
        lemma44_witness_pair(2, F2)


@pytest.mark.parametrize("field, holds", [(F2, True), (F4, True), (F3, True), (F9, False), (F5, False)])
def test_check_B(field, holds):
    # over F_3 itself no pair exists: the witness needs an element of F_9 outside F_3
    assert check_B(lemma44_sets(2), field) is holds


@pytest.mark.parametrize("field", [F2, F3, F5])
def test_check_B_methods_agree(field):
    t = lemma44_sets(2)
    a = find_B_counterexample(t, field, method="linear")
    b = find_B_counterexample(t, field, method="exhaustive")
    assert (a is None) == (b is None)
    for pair in (a, b):
        if pair is not None:
            P, Q = pair
            assert set(poly_mul(P, Q).terms) == set(t.I.points)


def test_build_witness():
    w = build_characteristic_witness({2, 3}, "b")
    assert w.J == Support([(0, 0), (6, 0), (0, 6)])
    w = build_characteristic_witness({2}, "a")
    assert (len(w.J), total_degree(w.J)) == (26, 27)
    w = build_characteristic_witness(set(), "a")
    assert w.J == Support([(1,), (2,)])
    with pytest.raises(ValueError):
        build_characteristic_witness({4}, "a")
    with pytest.raises(ValueError):
        build_characteristic_witness(set(), "b")


def _summary(report):
    return [(r["field"], r["ok"]) for r in report]


def test_verify_case_b():
    rep = verify_witness(build_characteristic_witness({2}, "b"), [F2, F3, F5])
    assert [r["observed"] for r in rep] == ["all", "empty", "empty"]
    assert all(r["ok"] for r in rep)


def test_verify_case_a():
    rep = verify_witness(build_characteristic_witness({2}, "a"), [F2, F4, F3])
    assert [r["method"] for r in rep] == ["check_B", "check_B", "witness_pair"]
    assert all(r["ok"] for r in rep)
    rep = verify_witness(build_characteristic_witness(set(), "a"), [F2, F3])
    assert all(r["ok"] and r["observed"] == "all" for r in rep)
