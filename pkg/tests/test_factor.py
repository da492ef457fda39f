from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from demival.errors import DegreeBoundError, DemivalError
from demival.factor import kronecker_factor, squarefree_decomposition, t_value
from demival.polynomials import Polynomial, RationalFunction, poly_gcd
from demival.value_groups import IrreduciblePoly, ValueVector

from strategies import integer_polys, polys, small_rationals

x = sympy.Symbol("x")


def to_sympy(p: Polynomial):
    return sympy.Poly(list(reversed(p.coeffs)), x, domain="QQ")


def sympy_factors(p: Polynomial):
    """Monic irreducible factors with exponents, via sympy."""
    _, facs = sympy.factor_list(to_sympy(p).as_expr(), x)
    out = {}
    for f, e in facs:
        poly = sympy.Poly(f, x).monic()
        key = tuple(Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs()))
        out[key] = out.get(key, 0) + e
    return out


# -- polynomial arithmetic


@given(polys(small_rationals, 4), polys(small_rationals, 3))
def test_divmod(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys(small_rationals, 3), polys(small_rationals, 3), polys(small_rationals, 2))
def test_gcd_divides_and_is_maximal(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert (a * c) % g == Polynomial() and (b * c) % g == Polynomial()
    assert g % c.monic() == Polynomial()


@given(polys(small_rationals, 3), polys(small_rationals, 2))
def test_rational_function_is_reduced(p, q):
    f = RationalFunction(p * q, q * q)
    assert f == RationalFunction(p, q)
    assert f.den.lead == 1


# -- factorization


def test_factor_examples():
    X = Polynomial.x()
    out = kronecker_factor(6 * X**2 - 6)
    assert out.to_json() == {"unit": "6", "factors": [{"poly": "X+1", "exp": 1}, {"poly": "X-1", "exp": 1}]}
    assert kronecker_factor(X**2 + 1).is_irreducible()
    out = kronecker_factor(X**6 - 1)
    assert sorted(str(IrreduciblePoly(f.coeffs)) for f, _ in out.factors) == sorted(
        ["f:X+1", "f:X-1", "f:X^2+X+1", "f:X^2-X+1"])
    assert kronecker_factor(X**4 + 4).expand() == X**4 + 4  # Sophie Germain: two quadratics
    assert len(kronecker_factor(X**4 + 4).factors) == 2
    assert kronecker_factor(Polynomial((Fraction(1, 4), 0, 0, 0, 1))).expand() == Polynomial((Fraction(1, 4), 0, 0, 0, 1))


def test_factor_degree_bound():
    with pytest.raises(DegreeBoundError):
        kronecker_factor(Polynomial.monomial(7) + 1)
    assert kronecker_factor(Polynomial.monomial(7) + 1, degree_bound=7).expand() == Polynomial.monomial(7) + 1
    with pytest.raises(DemivalError):
        kronecker_factor(Polynomial())


@given(st.lists(integer_polys, min_size=1, max_size=3))
def test_factor_matches_sympy(parts):
    p = Polynomial((1,))
    for q in parts:
        p = p * q
    if p.degree > 6:
        p = parts[0]
    out = kronecker_factor(p)
    assert out.expand() == p
    ours = {f.coeffs: e for f, e in out.factors}
    assert ours == sympy_factors(p)


@given(polys(small_rationals, 6).filter(lambda p: p.degree >= 1))
def test_squarefree_decomposition(p):
    parts = squarefree_decomposition(p)
    prod = Polynomial((1,))
    for a, i in parts:
        prod = prod * a**i
        assert poly_gcd(a, a.derivative()).degree == 0
    assert prod == p.monic()


def test_t_value_example():
    X = RationalFunction.x()
    v = t_value((X**2 - 1) / (X + 1) ** 2)
    assert v == ValueVector({IrreduciblePoly((-1, 1)): 1, IrreduciblePoly((1, 1)): -1})


@given(polys(small_rationals, 3), polys(small_rationals, 3))
def test_t_value_is_a_homomorphism(a, b):
    fa, fb = RationalFunction(a), RationalFunction(b)
    assert t_value(fa * fb) == t_value(fa) + t_value(fb)
    assert t_value(fa / fb) == t_value(fa) - t_value(fb)
