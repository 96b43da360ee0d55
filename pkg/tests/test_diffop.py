"""Difference operator ring: twist, action, adjoint, Euclidean structure."""
import random

import pytest

from preham import DiffOp, S, dop, u
from preham.diffop import left_divide, left_gcd, left_lcm, right_divide, right_gcd, right_lcm
from preham.errors import DivisionByZero, PreconditionFailed

from helpers import rand_dop, rand_poly, rand_rf

CASES = 220
rng = random.Random(31415926)


def test_twist():
    """S*a = S(a)*S, the defining relation of the ring."""
    a = u(0) * u(1)
    assert S(1) * dop(a) == dop(a.shift(1)) * S(1)
    assert S(-2) * dop(a) == dop(a.shift(-2)) * S(-2)
    assert S(3) * S(-3) == DiffOp.one()


def test_mul_agrees_with_composition_of_actions():
    """(A*B)(f) = A(B(f)) pins the twisted product."""
    for _ in range(CASES):
        A = rand_dop(rng)
        B = rand_dop(rng)
        f = rand_rf(rng, span=1, terms=2, deg=1)
        assert (A * B).apply(f) == A.apply(B.apply(f))


def test_apply_is_linear():
    for _ in range(80):
        A = rand_dop(rng)
        f, g = rand_poly(rng), rand_poly(rng)
        assert A.apply(f + g) == A.apply(f) + A.apply(g)
    assert S(2).apply(u(0) * u(1)) == u(2) * u(3)


def test_ring_axioms():
    for _ in range(80):
        A, B, C = rand_dop(rng), rand_dop(rng), rand_dop(rng)
        assert (A * B) * C == A * (B * C)
        assert A * (B + C) == A * B + A * C
        assert (A + B) * C == A * C + B * C


def test_adjoint_involution_and_antihomomorphism():
    """(A^†)^† = A and (A*B)^† = B^†*A^†, with rational coefficients too."""
    for i in range(CASES):
        A = rand_dop(rng, rational=(i % 3 == 0))
        B = rand_dop(rng, rational=(i % 5 == 0))
        assert A.adjoint().adjoint() == A
        assert (A * B).adjoint() == B.adjoint() * A.adjoint()
        assert (A + B).adjoint() == A.adjoint() + B.adjoint()


def test_adjoint_of_monomial():
    a = u(0) * u(2)
    assert DiffOp.of_elem(a, 3).adjoint() == DiffOp.of_elem(a.shift(-3), -3)
    assert S(1).adjoint() == S(-1)


def test_order_queries():
    A = dop(u(0)) * S(-2) + S(3)
    assert A.order() == (-2, 3)
    assert A.total_order() == 5
    assert DiffOp.zero().order() is None
    assert DiffOp.zero().total_order() is None
    assert S(4).is_unit() and not A.is_unit()
    assert dop(u(1)).is_elem() and not A.is_elem()
    k, c = A.leading()
    assert k == 3 and c == u(0) / u(0)


def test_negative_power_is_rejected():
    with pytest.raises(ValueError):
        S(1) ** -1


def test_right_division_invariants():
    """A = Q*B + R with R narrower than B (or zero)."""
    for i in range(CASES):
        A = rand_dop(rng, width=3, rational=(i % 4 == 0))
        B = rand_dop(rng, width=2)
        Q, R = right_divide(A, B)
        assert A == Q * B + R
        if not R.is_zero():
            assert R.total_order() < B.total_order()


def test_left_division_invariants():
    for i in range(CASES):
        A = rand_dop(rng, width=3, rational=(i % 4 == 0))
        B = rand_dop(rng, width=2)
        Q, R = left_divide(A, B)
        assert A == B * Q + R
        if not R.is_zero():
            assert R.total_order() < B.total_order()


def test_exact_division_recovers_the_cofactor():
    for _ in range(80):
        Q0 = rand_dop(rng)
        B = rand_dop(rng)
        Q, R = right_divide(Q0 * B, B)
        assert R.is_zero() and Q == Q0
        Q, R = left_divide(B * Q0, B)
        assert R.is_zero() and Q == Q0


def test_division_by_zero_operator():
    with pytest.raises(DivisionByZero):
        right_divide(S(1), DiffOp.zero())
    with pytest.raises(DivisionByZero):
        left_divide(S(1), DiffOp.zero())


def _canonical(G):
    lo, c = G.trailing()
    k, lead = G.leading()
    return lo == 0 and lead.is_one()


def test_right_gcd_divides_and_is_canonical():
    for _ in range(120):
        A0, B0, G = rand_dop(rng), rand_dop(rng), rand_dop(rng, width=1)
        A, B = A0 * G, B0 * G
        D = right_gcd(A, B)
        assert _canonical(D)
        assert right_divide(A, D)[1].is_zero()
        assert right_divide(B, D)[1].is_zero()
        # the planted factor right-divides the gcd
        assert right_divide(D, G)[1].is_zero()


def test_left_gcd_divides():
    for _ in range(60):
        A0, B0, G = rand_dop(rng), rand_dop(rng), rand_dop(rng, width=1)
        A, B = G * A0, G * B0
        D = left_gcd(A, B)
        assert left_divide(A, D)[1].is_zero()
        assert left_divide(B, D)[1].is_zero()
        assert left_divide(D, G)[1].is_zero()


def test_right_lcm_order_formula():
    """M = A*B1 = B*A1 and Ord M = Ord A + Ord B - Ord D."""
    for i in range(CASES):
        A = rand_dop(rng, width=2)
        B = rand_dop(rng, width=2)
        if i % 3 == 0:
            G = rand_dop(rng, width=1)
            A, B = A * G, B * G
        M, A1, B1 = right_lcm(A, B)
        assert M == A * B1 == B * A1
        assert _canonical(M)
        D = right_gcd(A, B)
        assert M.total_order() == A.total_order() + B.total_order() - D.total_order()


def test_left_lcm_order_formula():
    for i in range(100):
        A = rand_dop(rng, width=2)
        B = rand_dop(rng, width=2)
        if i % 3 == 0:
            G = rand_dop(rng, width=1)
            A, B = G * A, G * B
        M, A1, B1 = left_lcm(A, B)
        assert M == B1 * A == A1 * B
        D = left_gcd(A, B)
        assert M.total_order() == A.total_order() + B.total_order() - D.total_order()


def test_gcd_lcm_preconditions():
    with pytest.raises(PreconditionFailed):
        right_gcd(DiffOp.zero(), DiffOp.zero())
    with pytest.raises(PreconditionFailed):
        right_lcm(S(1), DiffOp.zero())
