from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from demival.errors import DemivalError
from demival.fields import RationalField
from demival.function_field import (
    basis_witness,
    bezout_coefficients,
    coefficient_cofactors,
    content_value,
    content_value_fold,
    contract_ideal,
    extend,
    is_integer_polynomial,
    kronecker_ring_member,
    polynomial_with_same_value,
    rw_ideal_equal,
    rw_principal_generator,
    u_member,
    u_value,
    w_value,
)
from demival.polynomials import Polynomial, RationalFunction
from demival.valuation import combination_value, reconstruct_unit
from demival.value_groups import INFINITY, ZERO, IrreduciblePoly, QuadPrime, RationalPrime, ValueVector, ext_add, meet_all

from strategies import K5, integer_polys, polys, quad_elements, rational_functions, small_rationals

Q = RationalField()
X = RationalFunction.x()
S5 = K5.ctx.sqrt
P2 = QuadPrime(-5, 2, "ram")


def test_content_examples():
    p = Polynomial((10, 4, 6))
    assert content_value(p, Q) == ValueVector({RationalPrime(2): 1})
    assert content_value(Polynomial(), Q) is INFINITY
    assert w_value(RationalFunction(Polynomial((2, 4)), Polynomial((3, 9))), Q) == ValueVector(
        {RationalPrime(2): 1, RationalPrime(3): -1})


@given(polys(small_rationals, 4))
def test_content_shortcut_matches_fold(p):
    assert content_value(p, Q) == content_value_fold(p, Q)


@given(polys(quad_elements(K5, 8, 3), 3))
def test_quad_content_shortcut_matches_fold(p):
    assert content_value(p, K5) == content_value_fold(p, K5)


@given(polys(small_rationals, 4), polys(small_rationals, 4))
def test_gauss_lemma_over_q(f, g):
    assert content_value(f * g, Q) == ext_add(content_value(f, Q), content_value(g, Q))


@given(polys(quad_elements(K5, 6, 2), 3), polys(quad_elements(K5, 6, 2), 3))
def test_gauss_lemma_over_quadratic_field(f, g):
    assert content_value(f * g, K5) == ext_add(content_value(f, K5), content_value(g, K5))


@given(polys(small_rationals, 4), polys(small_rationals, 4))
def test_bezout_shift_attains_meet(p, q):
    c, d = bezout_coefficients(p, q)
    assert content_value(c * p + d * q, Q) == meet_all([content_value(p, Q), content_value(q, Q)])


def test_principal_generator_examples():
    out = rw_principal_generator(extend(Q, [2, X]))
    assert out.m == X**2 + 2
    assert w_value(out.m, Q) == ZERO
    out = rw_principal_generator(extend(K5, [2, 1 + S5]))
    assert out.m == RationalFunction(Polynomial((1 + S5, 2)))
    assert w_value(out.m, K5) == ValueVector({P2: 1})
    assert combination_value(out) == out.m
    assert all(kronecker_ring_member(q, K5) for q in out.cofactors)


def test_principal_generator_of_zero_ideal():
    assert rw_principal_generator(extend(Q, [0, 0])).m == RationalFunction(0)


def test_extend_rejects_non_members():
    with pytest.raises(DemivalError):
        extend(Q, [Fraction(1, 2)])


@given(st.lists(integer_polys, min_size=1, max_size=4))
def test_principal_generator_property(gens):
    out = rw_principal_generator(extend(Q, [RationalFunction(g) for g in gens]))
    assert w_value(out.m, Q) == meet_all(w_value(g, Q) for g in gens)
    assert combination_value(out) == out.m
    assert all(kronecker_ring_member(q, Q) for q in out.cofactors)


@given(polys(quad_elements(K5, 8, 3), 4))
def test_cofactors_lie_in_kronecker_ring(p):
    cof = coefficient_cofactors(p, K5)
    assert all(kronecker_ring_member(c, K5) for c in cof)
    assert len(cof) == len(p.nonzero_coefficients())


def test_contract_examples():
    assert contract_ideal(extend(Q, [X**2 + 2])) == [2, 1]
    gens = contract_ideal(extend(K5, [RationalFunction(Polynomial((1 + S5, 2)))]))
    assert sorted(map(str, gens)) == ["1 + sqrt(-5)", "2"]


@given(rational_functions.filter(bool))
def test_same_value_polynomial(f):
    assert w_value(polynomial_with_same_value(f, Q), Q) == w_value(f, Q)


@given(st.lists(quad_elements(K5, 6, 1).filter(bool), min_size=1, max_size=3))
def test_extend_then_contract(gens):
    back = contract_ideal(extend(K5, gens))
    assert K5.content_ideal(back) == K5.content_ideal(gens)
    assert rw_ideal_equal(extend(K5, back), extend(K5, gens))


# -- Q(X): u = (w, t)


def test_u_examples():
    f = (X**2 - 1) / (2 * X + 2) ** 2
    assert u_value(f) == ValueVector({RationalPrime(2): -2, IrreduciblePoly((1, 1)): -1,
                                      IrreduciblePoly((-1, 1)): 1})
    assert u_member(3 * X**2 + 1) and not u_member(X / 2) and not u_member(1 / X)
    assert u_value(3 * X + 1) == ValueVector({IrreduciblePoly((Fraction(1, 3), 1)): 1})
    assert u_value(basis_witness(IrreduciblePoly((Fraction(1, 2), 1)))) == ValueVector(
        {IrreduciblePoly((Fraction(1, 2), 1)): 1})


@given(rational_functions)
def test_u_member_is_integer_polynomial(f):
    assert u_member(f) == is_integer_polynomial(f)


@given(rational_functions.filter(bool))
def test_reconstruct_unit_under_u(f):
    from demival.function_field import u_instance

    u = u_instance()
    unit = reconstruct_unit(u, f)
    assert u(unit) == ZERO
    assert unit in (RationalFunction(1), RationalFunction(-1))
