import itertools

import pytest
import sympy

from newtonfactor.field import (
    FieldError,
    embed,
    frobenius_inverse,
    make_field,
    parse_field,
    primitive_root_of_unity,
    univariate_roots,
)

from .oracles import gf_add, gf_elements, gf_mul, gf_pow

X = sympy.Symbol("x")


def test_make_field_prime():
    F = make_field(2, 1)
    assert (F.p, F.k, F.q) == (2, 1, 2)


# frozen: the only monic irreducible quadratic over F_2, coefficients lowest first
FROZEN_F4_MODULUS = (1, 1, 1)


def test_f4_modulus_oracle():
    irr = [c for c in itertools.product(range(2), repeat=2) if sympy.Poly([1, c[1], c[0]], X, modulus=2).is_irreducible]
    assert [tuple(c) + (1,) for c in irr] == [FROZEN_F4_MODULUS]


def test_f4_modulus():
    assert make_field(2, 2).modulus == FROZEN_F4_MODULUS


@pytest.mark.parametrize("p, k", [(4, 1), (1, 1), (6, 2)])
def test_make_field_rejects_non_primes(p, k):
    with pytest.raises(FieldError):
        make_field(p, k)


@pytest.mark.parametrize("spec, q", [("2^1", 2), ("3^2", 9), ("5", 5)])
def test_parse_field(spec, q):
    assert parse_field(spec).q == q


def test_parse_field_rejects_garbage():
    with pytest.raises(FieldError):
        parse_field("x^y")


@pytest.mark.parametrize("p, k", [(2, 2), (2, 3), (3, 2), (5, 2), (2, 4)])
def test_field_arithmetic_matches_naive(p, k):
    F = make_field(p, k)
    for a, b in itertools.product(gf_elements(p, k), repeat=2):
        fa, fb = F(a), F(b)
        assert (fa * fb).coords == gf_mul(a, b, p, list(F.modulus))
        assert (fa + fb).coords == gf_add(a, b, p)


# ---- embed


def test_embed_one():
    assert embed(make_field(2).one, make_field(2, 2)) == make_field(2, 2).one


def test_embed_functorial_and_homomorphic():
    F4, F16 = make_field(2, 2), make_field(2, 4)
    F2 = make_field(2)
    for a in F4.elements():
        assert embed(embed(a, F4), F16) == embed(a, F16)
        for b in F4.elements():
            assert embed(a + b, F16) == embed(a, F16) + embed(b, F16)
            assert embed(a * b, F16) == embed(a, F16) * embed(b, F16)
    for a in F2.elements():
        assert embed(embed(a, F4), F16) == embed(a, F16)


def test_embed_rejects_non_subfield():
    with pytest.raises(FieldError):
        embed(make_field(2, 2).gen_element, make_field(2, 3))


# ---- Frobenius inverse


def test_frobenius_inverse_examples():
    F4 = make_field(2, 2)
    g = F4.gen_element
    assert frobenius_inverse(F4.one) == F4.one
    assert frobenius_inverse(g) == g + 1
    # independent check: (g+1)^2 = g in the naive model
    assert gf_pow([1, 1], 2, 2, list(F4.modulus)) == [0, 1]
    F3 = make_field(3)
    assert frobenius_inverse(F3(2)) == F3(2)
    assert pow(2, 3, 3) == 2


@pytest.mark.parametrize("p, k", [(2, 2), (2, 3), (3, 2)])
def test_frobenius_inverse_exhaustive(p, k):
    F = make_field(p, k)
    for a in F.elements():
        assert frobenius_inverse(a) ** p == a


# ---- roots of unity


def test_primitive_root_examples():
    F, z = primitive_root_of_unity(3, 2)
    assert (F.q, z) == (3, F(2))
    F, z = primitive_root_of_unity(2, 3)
    assert F.q == 4 and z ** 3 == F.one and z != F.one
    with pytest.raises(FieldError, match="no primitive root in characteristic 2"):
        primitive_root_of_unity(2, 2)


@pytest.mark.parametrize("p, d", [(2, 3), (2, 5), (2, 7), (3, 4), (3, 8), (5, 3), (5, 6), (7, 9)])
def test_primitive_root_exact_order(p, d):
    F, z = primitive_root_of_unity(p, d)
    assert (F.q - 1) % d == 0
    assert all((F.q ** 0 if False else p) ** k % d != 1 for k in range(1, F.k)) or d == 1
    assert z ** d == F.one
    assert all(z ** e != F.one for e in range(1, d))


# ---- roots

# frozen from the naive model: the roots of x^2+1 in F_9 (modulus 1 + x^2) are (0,1), (0,2)
FROZEN_I_ROOTS = [[0, 1], [0, 2]]


def test_x2_plus_1_oracle():
    mod = [1, 0, 1]
    assert [a for a in gf_elements(3, 2) if gf_add(gf_mul(a, a, 3, mod), [1, 0], 3) == [0, 0]] == sorted(FROZEN_I_ROOTS)


def test_x2_plus_1_over_f3():
    F3 = make_field(3)
    roots = univariate_roots([F3(1), F3(0), F3(1)], 2, F3)
    assert sorted(r.coords for r, _ in roots) == FROZEN_I_ROOTS
    assert all(m == 1 and r.ctx.q == 9 for r, m in roots)


def test_x2_x_1_over_f2():
    F2 = make_field(2)
    roots = univariate_roots([F2(1), F2(1), F2(1)], 2, F2)
    F4 = make_field(2, 2)
    assert sorted(r.value for r, _ in roots) == sorted(a.value for a in F4.elements() if a.value > 1)
    assert all(m == 1 for _, m in roots)


def test_double_root_at_zero():
    F5 = make_field(5)
    assert univariate_roots([F5(0), F5(0), F5(1)], 1, F5) == [(F5(0), 2)]


def test_roots_zero_polynomial_raises():
    F5 = make_field(5)
    with pytest.raises(FieldError):
        univariate_roots([F5(0), F5(0)], 1, F5)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_roots_reconstruct_polynomial(p):
    F = make_field(p)
    for coeffs in itertools.product(range(p), repeat=3):
        f = [F(c) for c in coeffs] + [F(1)]
        roots = univariate_roots(f, 3, F)
        L = roots[0][0].ctx
        for r, _ in roots[1:]:
            L = r.ctx if r.ctx.k > L.k else L
        prod = [L.one]
        for r, m in roots:
            for _ in range(m):
                rr = embed(r, L)
                prod = [L.zero] + prod
                for i in range(len(prod) - 1):
                    prod[i] = prod[i] - rr * prod[i + 1]
        assert prod == [embed(c, L) for c in f]
