from fractions import Fraction

import pytest
from hypothesis import given

from demival.errors import InvalidCertificate
from demival.fields import RationalField, integer_combiner
from demival.number_rings import rational_valuation
from demival.valuation import (
    BezoutCertificate,
    ValuationInstance,
    axiom_report,
    principal_generator_from_bezout,
    reconstruct_unit,
    verify_bezout_certificate,
)
from demival.value_groups import ZERO, RationalPrime, ValueVector

from strategies import nonzero_rationals, small_rationals

Q = RationalField()


@given(small_rationals, small_rationals)
def test_rational_valuation_axioms(a, b):
    assert axiom_report(Q.valuation, [(a, b)]).ok


def test_axiom_report_flags_a_broken_valuation():
    # sending every nonzero x to the vector of |numerator| as an exponent breaks additivity
    bad = ValuationInstance("bad", "Q", lambda x: ValueVector({RationalPrime(2): abs(Fraction(x).numerator)})
                            if x else rational_valuation(x), "p:2")
    report = axiom_report(bad, [(Fraction(2), Fraction(3))])
    assert not report.ok
    assert {f.relation for f in report.failures}


def test_certificates():
    cert = integer_combiner(12, 18)
    assert cert.m == 6 and verify_bezout_certificate(Q.valuation, cert)
    forged = BezoutCertificate(Fraction(12), Fraction(18), Fraction(1), Fraction(0), Fraction(12))
    assert not verify_bezout_certificate(Q.valuation, forged)


def test_principal_generator_over_z():
    out = principal_generator_from_bezout(Q.valuation, [Fraction(12), Fraction(18), Fraction(8)], integer_combiner)
    assert out.m == 2
    assert sum(k * g for k, g in zip(out.coefficients, out.gens)) == 2


def test_bad_combiner_is_rejected():
    def liar(x, y):
        return BezoutCertificate(x, y, Fraction(1), Fraction(0), x)

    with pytest.raises(InvalidCertificate):
        principal_generator_from_bezout(Q.valuation, [Fraction(4), Fraction(6)], liar)


@given(nonzero_rationals)
def test_reconstruct_unit_over_q(x):
    unit = reconstruct_unit(Q.valuation, x)
    assert Q.valuation(unit) == ZERO and abs(unit) == 1


def test_axiom_report_examples():
    pairs = [(Fraction(4), Fraction(9)), (Fraction(2), Fraction(-2)), (Fraction(1, 3), Fraction(3)), (0, 0)]
    assert axiom_report(Q.valuation, pairs).ok
    trivial = ValuationInstance("trivial", "Q", lambda x: rational_valuation(x) if not x else ZERO, "none")
    assert axiom_report(trivial, [(Fraction(2), Fraction(2))]).ok


def test_in_valuation_ring_examples():
    from demival.valuation import in_valuation_ring

    assert in_valuation_ring(Q.valuation, Fraction(6))
    assert not in_valuation_ring(Q.valuation, Fraction(1, 2))
    assert in_valuation_ring(Q.valuation, Fraction(0))


@pytest.mark.parametrize("x, y, c, d, m, ok", [
    (4, 6, 1, 1, 10, False),
    (4, 6, 1, -1, -2, True),
    (1, 1, 1, 0, 1, True),
])
def test_certificate_examples(x, y, c, d, m, ok):
    cert = BezoutCertificate(*(Fraction(t) for t in (x, y, c, d, m)))
    assert verify_bezout_certificate(Q.valuation, cert) is ok


@pytest.mark.parametrize("gens, m", [([4, 6], 2), ([7], 7), ([6, 10, 15], 1)])
def test_principal_generator_examples(gens, m):
    out = principal_generator_from_bezout(Q.valuation, [Fraction(g) for g in gens], integer_combiner)
    assert abs(out.m) == m
    assert [abs(q) for q in out.cofactors] == [Fraction(g, m) for g in gens]


@pytest.mark.parametrize("x, unit", [(-12, -1), (1, 1), (Fraction(9, 8), 1)])
def test_reconstruct_unit_examples(x, unit):
    assert reconstruct_unit(Q.valuation, Fraction(x)) == unit


@given(nonzero_rationals, nonzero_rationals, nonzero_rationals)
def test_generator_value_is_order_independent(a, b, c):
    # scale into Z so the integer combiner applies
    ints = [Fraction(t.numerator) for t in (a, b, c)]
    values = set()
    for order in (ints, ints[::-1], ints[1:] + ints[:1]):
        out = principal_generator_from_bezout(Q.valuation, order, integer_combiner)
        values.add(Q.valuation(out.m))
    assert len(values) == 1


@given(small_rationals, small_rationals)
def test_valuation_ring_is_closed(a, b):
    from demival.valuation import in_valuation_ring

    a, b = Fraction(a.numerator), Fraction(b.numerator)
    assert in_valuation_ring(Q.valuation, a + b) and in_valuation_ring(Q.valuation, a * b)
