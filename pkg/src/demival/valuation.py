"""Demi-valuations: the instance contract, axiom checking, the Bezout
property and principal generators built from it."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .errors import DemivalError, InvalidCertificate
from .value_groups import (
    INFINITY,
    ZERO,
    ExtendedValue,
    ext_add,
    ext_ge,
    ext_meet,
    meet_all,
)


@dataclass(frozen=True)
class ValuationInstance:
    """A named demi-valuation ``K* -> ⊕ℤ``.

    ``representative`` maps a label to a field element whose value is the unit
    vector at that label (needed only for :func:`reconstruct_unit`).
    ``content`` optionally evaluates the meet of the values of a list of
    elements in one step; it must agree with folding :func:`ext_meet`.
    """

    name: str
    field: str
    evaluate: Callable[[Any], ExtendedValue]
    labels: str = ""
    representative: Callable[[Any], Any] | None = None
    content: Callable[[Sequence[Any]], ExtendedValue] | None = None

    def __call__(self, x) -> ExtendedValue:
        return self.evaluate(x)

    def meet_of(self, elements) -> ExtendedValue:
        if self.content is not None:
            return self.content(list(elements))
        return meet_all(self.evaluate(x) for x in elements)


@dataclass
class AxiomFailure:
    inputs: tuple
    relation: str
    values: tuple


@dataclass
class AxiomReport:
    samples: int = 0
    failures: list[AxiomFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def axiom_report(v: ValuationInstance, samples) -> AxiomReport:
    """Check multiplicativity and the ultrametric inequality on each pair."""
    report = AxiomReport()
    for a, b in samples:
        report.samples += 1
        va, vb = v(a), v(b)
        vab = v(a * b)
        expected = ext_add(va, vb)
        if vab != expected:
            report.failures.append(AxiomFailure((a, b), "v(ab) = v(a) + v(b)", (vab, expected)))
        vsum = v(a + b)
        floor = ext_meet(va, vb)
        if not ext_ge(vsum, floor):
            report.failures.append(AxiomFailure((a, b), "v(a+b) >= inf(v(a), v(b))", (vsum, floor)))
    return report


def in_valuation_ring(v: ValuationInstance, x) -> bool:
    return ext_ge(v(x), ZERO)


@dataclass(frozen=True)
class BezoutCertificate:
    """Witness that ``m = c*x + d*y`` attains ``inf(v(x), v(y))``."""

    x: Any
    y: Any
    c: Any
    d: Any
    m: Any


def verify_bezout_certificate(v: ValuationInstance, cert: BezoutCertificate) -> bool:
    if cert.m != cert.c * cert.x + cert.d * cert.y:
        return False
    if not (in_valuation_ring(v, cert.c) and in_valuation_ring(v, cert.d)):
        return False
    return v(cert.m) == ext_meet(v(cert.x), v(cert.y))


@dataclass
class PrincipalGenerator:
    """``m`` generates the ideal of ``gens``.

    ``coefficients`` express ``m`` as a combination of ``gens`` and
    ``cofactors[i] = gens[i] / m``; all of them lie in the valuation ring.
    """

    m: Any
    gens: list
    cofactors: list
    coefficients: list
    certificates: list


def principal_generator_from_bezout(
    v: ValuationInstance,
    gens: Sequence,
    combiner: Callable[[Any, Any], BezoutCertificate],
) -> PrincipalGenerator:
    gens = list(gens)
    if not gens:
        raise DemivalError("an ideal needs at least one generator", "empty_ideal")
    for g in gens:
        if not in_valuation_ring(v, g):
            raise DemivalError(f"generator {g} is not in the valuation ring", "not_integral")
    one = gens[0] ** 0
    zero = gens[0] - gens[0]
    m = gens[0]
    coeffs = [one] + [zero] * (len(gens) - 1)
    certs = []
    for i, g in enumerate(gens[1:], start=1):
        cert = combiner(m, g)
        if cert.x != m or cert.y != g or not verify_bezout_certificate(v, cert):
            raise InvalidCertificate(f"combiner returned an invalid certificate for ({m}, {g})")
        coeffs = [cert.c * k for k in coeffs]
        coeffs[i] = coeffs[i] + cert.d
        m = cert.m
        certs.append(cert)
    if not m:
        cofactors = [zero for _ in gens]
    else:
        cofactors = [g / m for g in gens]
        for g, q in zip(gens, cofactors):
            if not in_valuation_ring(v, q):
                raise InvalidCertificate(f"{g} is not a multiple of the generator {m}")
    return PrincipalGenerator(m, gens, cofactors, coeffs, certs)


def combination_value(result: PrincipalGenerator):
    total = result.gens[0] - result.gens[0]
    for k, g in zip(result.coefficients, result.gens):
        total = total + k * g
    return total


def reconstruct_unit(v: ValuationInstance, x):
    """Divide out ``prod(pi_label ** exponent)``; the quotient has value 0."""
    if not x:
        raise DemivalError("reconstruct_unit needs a nonzero element", "zero")
    if v.representative is None:
        raise DemivalError(f"{v.name} has no irreducible representatives", "no_representative")
    value = v(x)
    u = x
    for label, e in value.entries:
        pi = v.representative(label)
        if pi is None:
            raise DemivalError(f"no representative for label {label}", "no_representative")
        u = u / (pi ** e)
    return u


__all__ = [
    "ValuationInstance", "AxiomFailure", "AxiomReport", "axiom_report", "in_valuation_ring",
    "BezoutCertificate", "verify_bezout_certificate", "PrincipalGenerator",
    "principal_generator_from_bezout", "combination_value", "reconstruct_unit", "INFINITY",
]
