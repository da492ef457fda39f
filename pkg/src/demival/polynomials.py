"""Dense univariate polynomials over a field and reduced rational functions.

Coefficients may be :class:`fractions.Fraction` or
:class:`~demival.number_rings.QuadElement`; plain ints are promoted.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest

from .errors import DemivalError
from .formatting import format_poly


def _promote(c):
    return Fraction(c) if isinstance(c, int) else c


class Polynomial:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        cs = [_promote(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c=1) -> Polynomial:
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, RationalFunction):
            return other == self
        if other == 0:
            return not self.coeffs
        try:
            return self.degree == 0 and self.coeffs[0] == other
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs[0]) if len(self.coeffs) == 1 else hash(self.coeffs)
        return self._hash

    def _wrap(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, RationalFunction):
            return None
        return Polynomial.constant(other)

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return Polynomial(a + b for a, b in zip_longest(self.coeffs, o.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DemivalError("negative power of a polynomial", "negative_power")
        out = Polynomial((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        lead = o.lead
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            q = rem[k + dq] / lead
            if q == 0:
                continue
            quot[k] = q
            for j, b in enumerate(o.coeffs):
                rem[k + j] = rem[k + j] - q * b
        return Polynomial(quot), Polynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        return RationalFunction(self, other)

    def __rtruediv__(self, other):
        return RationalFunction(other, self)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def monic(self) -> Polynomial:
        if not self.coeffs:
            raise DemivalError("the zero polynomial has no monic associate", "zero")
        lead = self.lead
        return Polynomial(c / lead for c in self.coeffs)

    def nonzero_coefficients(self) -> list:
        return [c for c in self.coeffs if c != 0]

    def __str__(self):
        return format_poly(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self})"


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm."""
    if not f and not g:
        raise DemivalError("gcd(0, 0) is undefined", "zero")
    while g:
        f, g = g, f % g
    return f.monic()


class RationalFunction:
    """``num / den`` with ``den`` monic and coprime to ``num``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Polynomial) else Polynomial.constant(num)
        if den is None:
            den = Polynomial((1,))
        elif not isinstance(den, Polynomial):
            den = Polynomial.constant(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            den = Polynomial((1,))
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        lead = den.lead
        if lead != 1:
            num = Polynomial(c / lead for c in num.coeffs)
            den = den.monic()
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x) -> RationalFunction:
        return x if isinstance(x, RationalFunction) else cls(x)

    @classmethod
    def x(cls) -> RationalFunction:
        return cls(Polynomial.x())

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.is_polynomial() and self.num.degree <= 0

    def constant_value(self):
        if not self.is_constant():
            raise DemivalError(f"{self} is not a constant", "not_constant")
        return self.num[0]

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        try:
            o = RationalFunction.coerce(other)
        except (TypeError, DemivalError):
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_polynomial():
            return hash(self.num)
        return hash((self.num, self.den))

    def __add__(self, other):
        o = RationalFunction.coerce(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        o = RationalFunction.coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * RationalFunction.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num ** k, self.den ** k)

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        num = str(self.num)
        if " " in num:
            num = f"({num})"
        return f"{num}/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"


__all__ = ["Polynomial", "RationalFunction", "poly_gcd"]
