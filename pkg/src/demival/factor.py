"""Factorization in Q[X] by Kronecker's interpolation method.

A primitive integer polynomial ``g`` of degree ``n`` with a factor of degree
``k <= n/2`` has one whose values at ``k + 1`` integer points divide the
values of ``g`` there.  Enumerating those divisor tuples and interpolating
gives finitely many candidates; when none divides ``g`` the search itself
certifies irreducibility.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import DegreeBoundError, DemivalError
from .formatting import format_poly, format_rational
from .number_rings import factor_integer
from .polynomials import Polynomial, RationalFunction, poly_gcd
from .value_groups import INFINITY, ExtendedValue, IrreduciblePoly, ValueVector

DEFAULT_DEGREE_BOUND = 6


@dataclass(frozen=True)
class FactorizationResult:
    unit: Fraction
    factors: tuple  # ((monic Polynomial, exponent), ...)

    def expand(self) -> Polynomial:
        out = Polynomial.constant(self.unit)
        for f, e in self.factors:
            out = out * f**e
        return out

    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def to_json(self) -> dict:
        return {
            "unit": format_rational(self.unit),
            "factors": [{"poly": format_poly(f.coeffs, compact=True), "exp": e} for f, e in self.factors],
        }


# -- integer polynomial helpers (ascending int lists)


def primitive_part(f: Polynomial) -> list[int]:
    """Primitive integer associate of ``f`` with positive leading coefficient."""
    den = 1
    for c in f.coeffs:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in f.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _eval(g: list[int], x: int) -> int:
    acc = 0
    for c in reversed(g):
        acc = acc * x + c
    return acc


def int_divexact(num: list[int], den: list[int]) -> list[int] | None:
    """Quotient in Z[X] if ``den`` divides ``num`` exactly, else None."""
    rem = list(num)
    dq = len(den) - 1
    lead = den[-1]
    if len(rem) - 1 < dq:
        return None
    quot = [0] * (len(rem) - dq)
    for k in range(len(rem) - dq - 1, -1, -1):
        top = rem[k + dq]
        if top % lead:
            return None
        q = top // lead
        quot[k] = q
        if q:
            for j, b in enumerate(den):
                rem[k + j] -= q * b
    if any(rem[:dq]):
        return None
    return quot


def _positive_divisors(n: int, bound: int | None) -> list[int]:
    divs = [1]
    for p, e in factor_integer(n, bound):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _points():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def _divides(a: int, b: int) -> bool:
    return a != 0 and b % a == 0


def _newton_to_monomial(xs: list[int], newton: list[int]) -> list[int]:
    """Expand ``sum c_j * prod_{i<j} (X - x_i)`` into ascending coefficients."""
    out = [0] * len(newton)
    basis = [1]
    for j, c in enumerate(newton):
        for i, b in enumerate(basis):
            out[i] += c * b
        nxt = [0] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i + 1] += b
            nxt[i] -= xs[j] * b
        basis = nxt
    return out


def _find_divisor(g: list[int], k: int, bound: int | None) -> list[int] | None:
    """A factor of ``g`` of degree exactly ``k``, or None if there is none.

    Candidate value tuples are walked depth first in Newton form: divided
    differences of an integer polynomial at integer nodes are integers, which
    prunes most tuples long before the last point.
    """
    samples = []
    for x in _points():
        v = _eval(g, x)
        if v == 0:
            return [-x, 1]
        samples.append((x, v))
        if len(samples) >= 3 * (k + 1) + 2:
            break
    divisor_sets = {x: _positive_divisors(abs(v), bound) for x, v in samples}
    # fewest divisors first keeps the search small
    ranked = sorted(samples, key=lambda s: (len(divisor_sets[s[0]]), abs(s[0]), s[0] < 0))
    chosen = ranked[: k + 1]
    checks = ranked[k + 1:]
    xs = [x for x, _ in chosen]
    choices = [divisor_sets[xs[0]]]  # h and -h are the same factor
    for x in xs[1:]:
        choices.append([s * d for d in divisor_sets[x] for s in (1, -1)])
    lead, const = g[-1], g[0]

    def finish(newton):
        h = _newton_to_monomial(xs, newton)
        if const and (h[0] == 0 or const % h[0]):
            return None
        if not all(_divides(_eval(h, x), v) for x, v in checks):
            return None
        return h if int_divexact(g, h) is not None else None

    def walk(j, diag, newton):
        x = xs[j]
        for t in choices[j]:
            row = [t]
            for i in range(j):
                num = row[i] - diag[i]
                den = x - xs[j - 1 - i]
                if num % den:
                    break
                row.append(num // den)
            else:
                c = row[j]
                if j < k:
                    h = walk(j + 1, row, newton + [c])
                elif c and lead % c == 0:
                    h = finish(newton + [c])
                else:
                    h = None
                if h is not None:
                    return h
        return None

    return walk(0, [], [])


def _split(g: list[int], bound: int | None) -> list[list[int]]:
    n = len(g) - 1
    if n <= 1:
        return [g]
    for k in range(1, n // 2 + 1):
        h = _find_divisor(g, k, bound)
        if h is not None:
            q = int_divexact(g, h)
            return _split(h, bound) + _split(q, bound)
    return [g]


def squarefree_decomposition(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: monic ``f = prod(a_i ** i)`` with squarefree coprime ``a_i``."""
    f = f.monic()
    if f.degree <= 0:
        return []
    df = f.derivative()
    a0 = poly_gcd(f, df)
    b = f // a0
    c = df // a0
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return out


def _label_key(f: Polynomial):
    return IrreduciblePoly(f.coeffs).sort_key


@lru_cache(maxsize=1 << 14)
def _factor_cached(coeffs: tuple, degree_bound: int, bound: int | None) -> FactorizationResult:
    f = Polynomial(coeffs)
    if f.degree > degree_bound:
        raise DegreeBoundError(f"degree {f.degree} exceeds the factorization bound {degree_bound}")
    factors = []
    for part, e in squarefree_decomposition(f):
        for g in _split(primitive_part(part), bound):
            factors.append((Polynomial(g).monic(), e))
    factors.sort(key=lambda fe: _label_key(fe[0]))
    result = FactorizationResult(Fraction(f.lead), tuple(factors))
    if result.expand() != f:
        raise DemivalError(f"factorization of {f} failed to re-expand", "internal")
    return result


def kronecker_factor(f: Polynomial, degree_bound: int = DEFAULT_DEGREE_BOUND,
                     factor_bound: int | None = None) -> FactorizationResult:
    if not isinstance(f, Polynomial):
        f = Polynomial.constant(f)
    if not f:
        raise DemivalError("cannot factor the zero polynomial", "zero")
    for c in f.coeffs:
        if not isinstance(c, Fraction):
            raise DemivalError("kronecker_factor works over Q only", "ring_mismatch")
    return _factor_cached(f.coeffs, degree_bound, factor_bound)


def t_value(f, degree_bound: int = DEFAULT_DEGREE_BOUND, factor_bound: int | None = None) -> ExtendedValue:
    """Exponents of monic irreducible factors of numerator minus denominator."""
    f = RationalFunction.coerce(f)
    if not f:
        return INFINITY
    entries: dict = {}
    for poly, sign in ((f.num, 1), (f.den, -1)):
        for g, e in kronecker_factor(poly, degree_bound, factor_bound).factors:
            label = IrreduciblePoly(g.coeffs)
            entries[label] = entries.get(label, 0) + sign * e
    return ValueVector(entries)


__all__ = [
    "FactorizationResult", "kronecker_factor", "t_value", "squarefree_decomposition",
    "primitive_part", "int_divexact", "DEFAULT_DEGREE_BOUND",
]
