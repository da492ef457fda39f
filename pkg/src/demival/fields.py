"""Base fields with their divisor valuation and fractional-ideal toolkit.

A base field bundles what the function-field constructions need from the
ground ring: element coercion, the valuation instance, and the operations on
finitely generated fractional ideals (content ideal of a coefficient list,
inverse, a generating set, membership).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import DemivalError, ZeroIdealError
from .number_rings import (
    QuadContext,
    QuadElement,
    QuadIdeal,
    ideal_inverse,
    ideal_membership,
    ideal_valuation,
    quad_divisor_valuation,
    rational_valuation,
    xgcd,
)
from .valuation import BezoutCertificate, ValuationInstance
from .value_groups import INFINITY, RationalPrime


def _rational_content(elements) -> Fraction | None:
    g = 0
    den = 1
    for x in elements:
        x = Fraction(x)
        if x:
            g = gcd(g, x.numerator)
            den = lcm(den, x.denominator)
    return Fraction(g, den) if g else None


def integer_combiner(x, y) -> BezoutCertificate:
    """Extended-gcd certificate for two integers (elements of R(v) for Q)."""
    x, y = Fraction(x), Fraction(y)
    if x.denominator != 1 or y.denominator != 1:
        raise DemivalError("integer combiner needs integers", "not_integral")
    g, s, t = xgcd(int(x), int(y))
    return BezoutCertificate(x, y, Fraction(s), Fraction(t), Fraction(g))


class RationalField:
    key = "q"
    d = None

    def __init__(self):
        self.valuation = ValuationInstance(
            name="divisor",
            field="Q",
            evaluate=rational_valuation,
            labels="rational primes p:<p>",
            representative=self.representative,
            content=self._content_value,
        )

    def __repr__(self):
        return "RationalField()"

    def __str__(self):
        return "Q"

    @staticmethod
    def representative(label):
        if isinstance(label, RationalPrime):
            return Fraction(label.p)
        return None

    def coerce(self, x) -> Fraction:
        if isinstance(x, QuadElement):
            raise DemivalError("quadratic element given for the rational field", "ring_mismatch")
        return Fraction(x)

    def _content_value(self, elements):
        g = _rational_content(elements)
        return INFINITY if g is None else rational_valuation(g)

    # -- fractional ideals of Z, each represented by its positive generator

    def content_ideal(self, elements) -> Fraction:
        g = _rational_content(elements)
        if g is None:
            raise ZeroIdealError("the zero ideal is not a fractional ideal")
        return g

    def ideal_inverse(self, ideal: Fraction) -> Fraction:
        return 1 / ideal

    def ideal_generators(self, ideal: Fraction) -> list:
        return [ideal]

    def ideal_member(self, x, ideal: Fraction) -> bool:
        return (Fraction(x) / ideal).denominator == 1

    def combiner(self, x, y) -> BezoutCertificate:
        return integer_combiner(x, y)


class QuadraticField:
    key = "quad"

    def __init__(self, d: int):
        self.ctx = QuadContext(d)
        self.d = d
        self.valuation = ValuationInstance(
            name="divisor",
            field=str(self.ctx),
            evaluate=self._evaluate,
            labels="prime ideals q:<p>:<kind>[:<root>]",
            content=self._content_value,
        )

    def __repr__(self):
        return f"QuadraticField({self.d})"

    def __str__(self):
        return str(self.ctx)

    def _evaluate(self, x):
        return quad_divisor_valuation(self.coerce(x))

    def coerce(self, x) -> QuadElement:
        if isinstance(x, QuadElement):
            if x.ctx.d != self.d:
                raise DemivalError("element of a different quadratic field", "ring_mismatch")
            return x
        return self.ctx(x)

    def _content_value(self, elements):
        elements = [self.coerce(x) for x in elements]
        if not any(elements):
            return INFINITY
        return ideal_valuation(QuadIdeal.from_generators(self.ctx, elements))

    def content_ideal(self, elements) -> QuadIdeal:
        return QuadIdeal.from_generators(self.ctx, [self.coerce(x) for x in elements])

    def ideal_inverse(self, ideal: QuadIdeal) -> QuadIdeal:
        return ideal_inverse(ideal)

    def ideal_generators(self, ideal: QuadIdeal) -> list:
        gens = ideal.generators()
        if QuadIdeal.principal(gens[0]) == ideal:
            return gens[:1]
        return gens

    def ideal_member(self, x, ideal: QuadIdeal) -> bool:
        return ideal_membership(self.coerce(x), ideal)

    def combiner(self, x, y):
        raise DemivalError(f"Z[sqrt({self.d})] has no general Bezout combiner", "not_bezout")


def base_field(selector: str):
    """``"q"`` or ``"quad:<d>"``."""
    if selector == "q":
        return RationalField()
    if selector.startswith("quad:"):
        try:
            d = int(selector[5:])
        except ValueError:
            raise DemivalError(f"bad ring selector {selector!r}", "bad_ring") from None
        return QuadraticField(d)
    raise DemivalError(f"bad ring selector {selector!r}", "bad_ring")


__all__ = ["RationalField", "QuadraticField", "base_field", "integer_combiner"]
