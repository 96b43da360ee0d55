"""Rational operators: canonical minimal form and quotient-field algebra."""
import random

import pytest

from preham import DiffOp, RatOp, S, dop, u
from preham.diffop import right_gcd
from preham.errors import DivisionByZero
from preham.ratop import from_left_fraction

from helpers import rand_dop

rng = random.Random(271828)


def small_dop(rng, width=1):
    """Coefficient growth in quotient arithmetic is steep; keep inputs tiny."""
    return rand_dop(rng, width=width, span=1, terms=2, deg=1, coeff=3)


def rand_rop(rng, width=1):
    return RatOp(small_dop(rng, width), small_dop(rng, width))


def test_common_right_factor_cancels():
    """A*G*(B*G)^-1 normalizes to the same stored pair as A*B^-1."""
    for _ in range(40):
        A, B, G = small_dop(rng), small_dop(rng), small_dop(rng)
        L1 = RatOp(A * G, B * G)
        L2 = RatOp(A, B)
        assert L1 == L2
        assert L1.num == L2.num and L1.den == L2.den


def test_normal_form_invariants():
    """Stored pair is right-coprime; den has leading exponent 0, coeff 1."""
    for _ in range(40):
        L = rand_rop(rng)
        if L.is_zero():
            continue
        assert right_gcd(L.num, L.den).total_order() == 0
        k, c = L.den.leading()
        assert k == 0 and c.is_one()


def test_operator_embedding():
    A = dop(u(0)) * S(1) + S(-1)
    L = RatOp(A)
    assert L.is_operator()
    assert L.den == DiffOp.one()
    assert L.num == A
    B = small_dop(rng)
    assert RatOp(A) * RatOp(B) == RatOp(A * B)
    assert RatOp(A) + RatOp(B) == RatOp(A + B)


def test_unit_denominator_is_absorbed():
    """1*S^-1 is the normal form of the quotient 1/S."""
    L = RatOp(DiffOp.one(), S(1))
    assert L.is_operator()
    assert L.num == S(-1) and L.den == DiffOp.one()


def test_quotient_field_axioms():
    for _ in range(12):
        L1, L2, L3 = rand_rop(rng), rand_rop(rng), rand_rop(rng)
        assert (L1 + L2) - L2 == L1
        assert L1 * (L2 + L3) == L1 * L2 + L1 * L3
        if not L1.is_zero():
            assert L1 * L1.inverse() == RatOp.one()
            assert (L2 / L1) * L1 == L2


def test_associativity_of_product():
    for _ in range(12):
        L1, L2, L3 = rand_rop(rng), rand_rop(rng), rand_rop(rng)
        assert (L1 * L2) * L3 == L1 * (L2 * L3)


def test_adjoint_on_quotients():
    """Involution, anti-homomorphism, and compatibility with inverse."""
    for _ in range(10):
        L1, L2 = rand_rop(rng), rand_rop(rng)
        assert L1.adjoint().adjoint() == L1
        assert (L1 * L2).adjoint() == L2.adjoint() * L1.adjoint()
        assert (L1 + L2).adjoint() == L1.adjoint() + L2.adjoint()
        if not L1.is_zero():
            assert L1.inverse().adjoint() == L1.adjoint().inverse()


def test_skew_symmetry():
    for _ in range(20):
        X = rand_rop(rng)
        T = X - X.adjoint()
        assert T.is_skew_symmetric()
    H = RatOp(dop(u(0) * u(1)) * S(1) - dop(u(-1) * u(0)) * S(-1))
    assert H.is_skew_symmetric()
    assert not RatOp(S(1)).is_skew_symmetric()


def test_left_fraction_conversion():
    """B^-1*A equals the right fraction produced by from_left_fraction."""
    for _ in range(40):
        A, B = small_dop(rng), small_dop(rng)
        want = RatOp(DiffOp.one(), B) * RatOp(A)
        assert from_left_fraction(B, A) == want


def test_pow():
    for _ in range(10):
        L = rand_rop(rng)
        assert L ** 2 == L * L
        assert L ** 0 == RatOp.one()
        if not L.is_zero():
            assert L ** -1 == L.inverse()


def test_zero_and_division_errors():
    assert RatOp.zero().is_zero()
    assert (RatOp.zero() + RatOp.one()) == RatOp.one()
    with pytest.raises(DivisionByZero):
        RatOp.zero().inverse()
    with pytest.raises(DivisionByZero):
        RatOp.one() / RatOp.zero()
    with pytest.raises(DivisionByZero):
        RatOp(S(1), DiffOp.zero())


def test_total_order_of_quotient():
    L = RatOp(S(2) + S(-1), S(1) + DiffOp.one())
    assert L.total_order() == 3 - 1
