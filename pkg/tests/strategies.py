"""Hypothesis strategies shared by the test modules."""
from fractions import Fraction

from hypothesis import strategies as st

from demival.fields import QuadraticField
from demival.polynomials import Polynomial, RationalFunction
from demival.value_groups import RationalPrime, ValueVector

SMALL_PRIMES = [2, 3, 5, 7, 11, 13]

labels = st.sampled_from([RationalPrime(p) for p in SMALL_PRIMES])
vectors = st.dictionaries(labels, st.integers(-6, 6), max_size=4).map(ValueVector)
small_rationals = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 12))
nonzero_rationals = small_rationals.filter(bool)

K5 = QuadraticField(-5)
K1 = QuadraticField(-1)


def quad_elements(K, box=12, den=4):
    return st.builds(
        lambda a, b, n: K.ctx(Fraction(a, n), Fraction(b, n)),
        st.integers(-box, box), st.integers(-box, box), st.integers(1, den),
    )


def integral_quad(K, box=30):
    return st.builds(K.ctx, st.integers(-box, box), st.integers(-box, box)).filter(bool)


def polys(coeffs, max_deg=4):
    return st.lists(coeffs, min_size=1, max_size=max_deg + 1).map(Polynomial).filter(bool)


integer_polys = polys(st.integers(-6, 6).map(Fraction), 3)
rational_functions = st.builds(RationalFunction, polys(small_rationals, 2), polys(st.integers(-4, 4).map(Fraction), 1))
