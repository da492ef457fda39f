"""The content valuation on K(X) and the Kronecker function ring R(w).

``w(f)`` for a polynomial is the meet of the values of its coefficients and
``w(p/q) = w(p) - w(q)``.  Over Q the factorization valuation ``t`` pairs
with ``w`` into ``u = (w, t)``, whose valuation ring is Z[X].
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DemivalError
from .factor import DEFAULT_DEGREE_BOUND, primitive_part, t_value
from .fields import RationalField
from .polynomials import Polynomial, RationalFunction
from .valuation import (
    BezoutCertificate,
    PrincipalGenerator,
    ValuationInstance,
    principal_generator_from_bezout,
)
from .value_groups import (
    INFINITY,
    ZERO,
    ExtendedValue,
    IrreduciblePoly,
    RationalPrime,
    ext_ge,
    ext_sub,
    meet_all,
)

_X = Polynomial.x()


def _valuation(v) -> ValuationInstance:
    return v.valuation if hasattr(v, "valuation") else v


def content_value(f: Polynomial, v) -> ExtendedValue:
    """Meet of the coefficient values; zero coefficients contribute infinity."""
    v = _valuation(v)
    if isinstance(f, RationalFunction):
        if not f.is_polynomial():
            raise DemivalError("content is defined for polynomials", "not_polynomial")
        f = f.num * f.den.lead
    return v.meet_of(f.coeffs) if f else INFINITY


def content_value_fold(f: Polynomial, v) -> ExtendedValue:
    """Reference path: fold the meet over every coefficient, zeros included."""
    v = _valuation(v)
    return meet_all(v(c) for c in f.coeffs)


def w_value(f, v) -> ExtendedValue:
    f = RationalFunction.coerce(f)
    if not f:
        return INFINITY
    return ext_sub(content_value(f.num, v), content_value(f.den, v))


def w_instance(base) -> ValuationInstance:
    v = _valuation(base)
    return ValuationInstance(
        name="w",
        field=f"{v.field}(X)",
        evaluate=lambda f: w_value(f, v),
        labels=v.labels,
    )


def bezout_coefficients(p: Polynomial, q: Polynomial) -> tuple[Polynomial, Polynomial]:
    """``(X^(deg q + 1), 1)``: the coefficients of ``p`` and ``q`` do not overlap
    in ``X^h * p + q``, so its content is the meet of the two contents."""
    if not q:
        raise DemivalError("bezout_coefficients needs q != 0", "zero")
    return Polynomial.monomial(q.degree + 1), Polynomial((1,))


def kronecker_ring_member(f, v) -> bool:
    return ext_ge(w_value(f, v), ZERO)


def rw_combiner(x: RationalFunction, y: RationalFunction) -> BezoutCertificate:
    """Pairwise Bezout step in R(w) over the product denominator.

    The numerator of lower degree is left alone and the other is shifted
    past it by ``X^h``; on equal degrees the first argument is shifted.
    """
    x, y = RationalFunction.coerce(x), RationalFunction.coerce(y)
    r = x.den * y.den
    px, qy = x.num * y.den, y.num * x.den
    one = RationalFunction(1)
    if qy.degree > px.degree:
        shift = RationalFunction(Polynomial.monomial(px.degree + 1))
        c, d = one, shift
    else:
        shift = RationalFunction(Polynomial.monomial(qy.degree + 1))
        c, d = shift, one
    m = RationalFunction(c.num * px + d.num * qy, r)
    return BezoutCertificate(x, y, c, d, m)


@dataclass(frozen=True)
class KroneckerRingIdeal:
    """Ideal of R(w) given by generators."""

    base: object
    gens: tuple

    def __post_init__(self):
        gens = tuple(RationalFunction.coerce(self._lift(g)) for g in self.gens)
        if not gens:
            raise DemivalError("an ideal needs at least one generator", "empty_ideal")
        for g in gens:
            if not kronecker_ring_member(g, self.base):
                raise DemivalError(f"generator {g} is not in R(w)", "not_integral")
        object.__setattr__(self, "gens", gens)

    def _lift(self, g):
        if isinstance(g, (RationalFunction, Polynomial)):
            return g
        return self.base.coerce(g)


def extend(base, gens) -> KroneckerRingIdeal:
    """``b -> b R(w)`` for a base ideal given by generators."""
    return KroneckerRingIdeal(base, tuple(gens))


def rw_principal_generator(J: KroneckerRingIdeal) -> PrincipalGenerator:
    gens = [g for g in J.gens if g]
    if not gens:
        zero = RationalFunction(0)
        return PrincipalGenerator(zero, list(J.gens), [zero] * len(J.gens), [zero] * len(J.gens), [])
    return principal_generator_from_bezout(w_instance(J.base), gens, rw_combiner)


def coefficient_cofactors(p: Polynomial, v) -> list[RationalFunction]:
    """``a_i / p`` for each nonzero coefficient ``a_i``; each lies in R(w)."""
    if isinstance(p, RationalFunction):
        p = p.num * p.den.lead if p.is_polynomial() else None
    if not p:
        raise DemivalError("coefficient_cofactors needs a nonzero polynomial", "zero")
    pf = RationalFunction(p)
    return [RationalFunction(a) / pf for a in p.nonzero_coefficients()]


def polynomial_with_same_value(f, base) -> Polynomial:
    """A polynomial ``r*u`` with ``w(r*u) = w(r/s)``.

    ``u`` has the generators of the inverse of the content ideal of ``s``
    as its coefficients.
    """
    f = RationalFunction.coerce(f)
    if not f:
        raise DemivalError("polynomial_with_same_value needs f != 0", "zero")
    content = base.content_ideal(f.den.coeffs)
    inverse = base.ideal_inverse(content)
    u = Polynomial(base.ideal_generators(inverse))
    return f.num * u


def contract_ideal(J: KroneckerRingIdeal) -> list:
    """Generators of ``J ∩ R(v)``: coefficients of same-value polynomials."""
    out = []
    for f in J.gens:
        if not f:
            continue
        p = polynomial_with_same_value(f, J.base)
        out.extend(p.nonzero_coefficients())
    return out or [J.base.coerce(0)]


def rw_ideal_equal(J1: KroneckerRingIdeal, J2: KroneckerRingIdeal) -> bool:
    m1 = rw_principal_generator(J1).m
    m2 = rw_principal_generator(J2).m
    return w_value(m1, J1.base) == w_value(m2, J2.base)


def extend_contract_roundtrip_check(base, gens: Sequence, samples: Sequence = (),
                                    combinations: Sequence = ()) -> bool:
    """Check ``b = bR(w) ∩ R(v)`` on samples.

    ``samples`` are base elements: any of them in R(v) whose value is at least
    the meet of the generator values must lie in ``b``.  ``combinations`` are
    coefficient tuples ``(p_1, ..., p_k)`` from R(w); whenever
    ``sum(p_i * g_i)`` is a constant in R(v) it must lie in ``b``.
    """
    v = _valuation(base)
    gens = [base.coerce(g) for g in gens]
    ideal = base.content_ideal(gens)
    floor = meet_all(v(g) for g in gens)
    for t in samples:
        t = base.coerce(t)
        if ext_ge(v(t), ZERO) and ext_ge(v(t), floor) and not base.ideal_member(t, ideal):
            return False
    for coeffs in combinations:
        coeffs = [RationalFunction.coerce(c) for c in coeffs]
        if not all(kronecker_ring_member(c, base) for c in coeffs):
            continue
        total = RationalFunction(0)
        for c, g in zip(coeffs, gens):
            total = total + c * g
        if total.is_constant():
            t = total.constant_value()
            if ext_ge(v(t), ZERO) and not base.ideal_member(t, ideal):
                return False
    return True


# ---------------------------------------------------------------------------
# Q(X): the factorization valuation t and the pair u = (w, t)

_RATIONALS = RationalField()


def t_instance(degree_bound: int = DEFAULT_DEGREE_BOUND) -> ValuationInstance:
    return ValuationInstance(
        name="t",
        field="Q(X)",
        evaluate=lambda f: t_value(f, degree_bound),
        labels="monic irreducible polynomials f:<poly>",
        representative=lambda label: RationalFunction(Polynomial(label.coeffs)),
    )


def u_value(f, degree_bound: int = DEFAULT_DEGREE_BOUND) -> ExtendedValue:
    f = RationalFunction.coerce(f)
    if not f:
        return INFINITY
    return w_value(f, _RATIONALS) + t_value(f, degree_bound)


def u_member(f, degree_bound: int = DEFAULT_DEGREE_BOUND) -> bool:
    return ext_ge(u_value(f, degree_bound), ZERO)


def basis_witness(label) -> RationalFunction:
    """An element of Q(X) whose u-value is the unit vector at ``label``."""
    if isinstance(label, RationalPrime):
        return RationalFunction(label.p)
    if isinstance(label, IrreduciblePoly):
        return RationalFunction(Polynomial(primitive_part(Polynomial(label.coeffs))))
    raise DemivalError(f"{label} is not a label of u", "bad_label")


def u_instance(degree_bound: int = DEFAULT_DEGREE_BOUND) -> ValuationInstance:
    return ValuationInstance(
        name="u",
        field="Q(X)",
        evaluate=lambda f: u_value(f, degree_bound),
        labels="p:<p> and f:<poly>",
        representative=basis_witness,
    )


def is_integer_polynomial(f) -> bool:
    """Syntactic test: reduced ``f`` is a polynomial with integer coefficients."""
    f = RationalFunction.coerce(f)
    return f.is_polynomial() and all(Fraction(c).denominator == 1 for c in f.num.coeffs)


__all__ = [
    "content_value", "content_value_fold", "w_value", "w_instance", "bezout_coefficients",
    "kronecker_ring_member", "rw_combiner", "KroneckerRingIdeal", "extend",
    "rw_principal_generator", "coefficient_cofactors", "polynomial_with_same_value",
    "contract_ideal", "rw_ideal_equal", "extend_contract_roundtrip_check",
    "t_instance", "u_value", "u_member", "basis_witness", "u_instance", "is_integer_polynomial",
]
