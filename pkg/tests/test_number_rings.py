from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from demival.errors import DemivalError, FactorizationBoundError
from demival.number_rings import (
    QuadContext,
    QuadIdeal,
    factor_integer,
    hnf,
    ideal_add,
    ideal_from_value,
    ideal_inverse,
    ideal_membership,
    ideal_mul,
    ideal_valuation,
    is_principal_search,
    prime_ideal_of_label,
    prime_ideal_valuation,
    quad_divisor_valuation,
    quad_splitting_type,
    rational_valuation,
    sqrt_mod,
    xgcd,
)
from demival.value_groups import INFINITY, QuadPrime, RationalPrime, ValueVector

from strategies import K1, K5, integral_quad, quad_elements

C5 = K5.ctx
S5 = C5.sqrt
ODD_PRIMES = [p for p in range(3, 200) if sympy.isprime(p)]


# -- integers and Q


@given(st.integers(1, 10**12))
def test_factor_integer_matches_sympy(n):
    assert dict(factor_integer(n)) == sympy.factorint(n)


def test_factor_bound_error_when_cofactor_is_uncertified():
    n = 1000003 * 1000033  # two primes above the bound
    with pytest.raises(FactorizationBoundError) as info:
        factor_integer(n, bound=1000)
    assert info.value.code == "factor_bound"


def test_rational_valuation_examples():
    assert rational_valuation(Fraction(4, 9)) == ValueVector({RationalPrime(2): 2, RationalPrime(3): -2})
    assert rational_valuation(Fraction(-1)) == ValueVector()
    assert rational_valuation(0) is INFINITY


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_xgcd(a, b):
    g, s, t = xgcd(a, b)
    assert g == gcd(a, b) and s * a + t * b == g


# -- quadratic elements


@given(quad_elements(K5), quad_elements(K5))
def test_norm_is_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()
    if y:
        assert (x / y) * y == x


def test_element_text():
    assert str((1 + S5) / 2) == "1/2 + 1/2*sqrt(-5)"
    with pytest.raises(DemivalError):
        QuadContext(5)  # 5 = 1 mod 4
    with pytest.raises(DemivalError):
        QuadContext(-4)  # not squarefree


# -- lattices and ideals


def lattice_index(vectors):
    """gcd of all 2x2 minors: the index of the lattice they span (0 if rank < 2)."""
    g = 0
    for (a, b), (c, d) in combinations(vectors, 2):
        g = gcd(g, a * d - b * c)
    return g


def lattice_member_oracle(x, gens):
    """x lies in the Z-span of {g, g*sqrt(d)} iff adding it keeps the index."""
    den = 1
    pieces = [x] + [g for g in gens] + [g * g.ctx.sqrt for g in gens]
    for z in pieces:
        den = den * z.denominator() // gcd(den, z.denominator())
    vecs = [(int(z.a * den), int(z.b * den)) for z in pieces]
    return lattice_index(vecs[1:]) == lattice_index(vecs)


def test_hnf_of_prime_above_two():
    I = QuadIdeal.from_generators(C5, [2, 1 + S5])
    assert (I.den, I.a, I.b, I.c) == (1, 2, 1, 1)
    assert hnf([(4, 0), (2, 2), (6, 4)]) == (2, 0, 2)


@given(st.lists(integral_quad(K5, 12), min_size=1, max_size=3), integral_quad(K5, 20))
def test_membership_matches_lattice_oracle(gens, x):
    I = QuadIdeal.from_generators(C5, gens)
    assert ideal_membership(x, I) == lattice_member_oracle(x, gens)
    for g in gens:
        assert g in I and g * S5 in I


@given(st.lists(quad_elements(K5, 8, 3).filter(bool), min_size=1, max_size=2),
       st.lists(quad_elements(K5, 8, 3).filter(bool), min_size=1, max_size=2))
def test_ideal_mul_add_inverse(g1, g2):
    I, J = QuadIdeal.from_generators(C5, g1), QuadIdeal.from_generators(C5, g2)
    assert ideal_mul(I, J) == QuadIdeal.from_generators(C5, [a * b for a in g1 for b in g2])
    assert ideal_add(I, J) == QuadIdeal.from_generators(C5, g1 + g2)
    assert ideal_mul(I, ideal_inverse(I)) == QuadIdeal.unit(C5)
    assert ideal_valuation(ideal_mul(I, J)) == ideal_valuation(I) + ideal_valuation(J)


def test_classical_ideals_of_z_sqrt_minus_5():
    P2 = QuadIdeal.from_generators(C5, [2, 1 + S5])
    P3p = prime_ideal_of_label(QuadPrime(-5, 3, "split+", 1))
    P3m = prime_ideal_of_label(QuadPrime(-5, 3, "split-", 2))
    assert ideal_mul(P2, P2) == QuadIdeal.principal(C5(2))
    assert ideal_mul(P3p, P3m) == QuadIdeal.principal(C5(3))
    assert ideal_add(P2, P3p) == QuadIdeal.unit(C5)
    inv = ideal_inverse(P2)
    assert inv.generators() == [C5(1), (1 + S5) / 2]


# -- splitting and valuations


@pytest.mark.parametrize("p", ODD_PRIMES[:30])
def test_sqrt_mod_against_enumeration(p):
    for n in range(p):
        squares = {x for x in range(p) if x * x % p == n}
        r = sqrt_mod(n, p)
        assert (r is None) == (not squares)
        if r is not None:
            assert r in squares


@pytest.mark.parametrize("d", [-5, -1, 2, 3, -6, 7])
def test_splitting_type_against_residue_count(d):
    ctx = QuadContext(d)
    for p in [2] + ODD_PRIMES[:25]:
        roots = [x for x in range(p) if (x * x - d) % p == 0]
        kinds = [lab.kind for lab in quad_splitting_type(ctx, p)]
        if p == 2 or d % p == 0:
            assert kinds == ["ram"]
        elif roots:
            assert kinds == ["split+", "split-"]
            assert [lab.root for lab in quad_splitting_type(ctx, p)] == sorted(roots)
        else:
            assert kinds == ["inert"]


def test_splitting_examples():
    assert [str(x) for x in quad_splitting_type(C5, 3)] == ["q:3:split+:1", "q:3:split-:2"]
    assert [str(x) for x in quad_splitting_type(C5, 11)] == ["q:11:inert"]
    assert [str(x) for x in quad_splitting_type(C5, 2)] == ["q:2:ram"]


def test_quad_valuation_examples():
    labels = {str(lab): e for lab, e in quad_divisor_valuation(C5(6)).entries}
    assert labels == {"q:2:ram": 2, "q:3:split+:1": 1, "q:3:split-:2": 1}
    labels = {str(lab): e for lab, e in quad_divisor_valuation((1 + S5) / 2).entries}
    assert labels == {"q:2:ram": -1, "q:3:split-:2": 1}


def _prime_norm(label):
    return label.p**2 if label.kind == "inert" else label.p


@pytest.mark.parametrize("K", [K5, K1], ids=["d=-5", "d=-1"])
@given(data=st.data())
def test_norm_bookkeeping(K, data):
    x = data.draw(integral_quad(K, 200))
    value = quad_divisor_valuation(x)
    prod = 1
    for lab, e in value.entries:
        prod *= _prime_norm(lab) ** e
    assert prod == abs(x.norm())
    assert ideal_from_value(K.ctx, value) == QuadIdeal.principal(x)


@given(integral_quad(K5, 40), integral_quad(K5, 40))
def test_prime_valuation_is_additive(x, y):
    for lab in quad_divisor_valuation(x * y).labels():
        assert prime_ideal_valuation(x * y, lab) == prime_ideal_valuation(x, lab) + prime_ideal_valuation(y, lab)


# -- principal search


def test_principal_search_examples():
    P2 = QuadIdeal.from_generators(C5, [2, 1 + S5])
    assert is_principal_search(P2, 100) is None
    assert is_principal_search(QuadIdeal.principal(C5(2)), 10) == C5(2)
    C1 = K1.ctx
    I = QuadIdeal.from_generators(C1, [2, 1 + C1.sqrt])
    assert is_principal_search(I, 5) == 1 + C1.sqrt


@given(integral_quad(K1, 25))
def test_gaussian_integers_are_principal(x):
    I = QuadIdeal.principal(x)
    g = is_principal_search(I, isqrt(int(I.norm())) + 1)
    assert g is not None and QuadIdeal.principal(g) == I


def test_class_group_of_minus_5_has_exactly_two_classes_among_small_primes():
    # primes above 2, 3, 7 are non-principal, those above 29 are principal (29 = 3^2 + 5*2^2)
    for p, principal in [(2, False), (3, False), (7, False), (29, True)]:
        for lab in quad_splitting_type(C5, p):
            P = prime_ideal_of_label(lab)
            found = is_principal_search(P, isqrt(p) + 1)
            assert (found is not None) == principal, lab
