"""Q with its prime-factorization valuation, and quadratic fields Q(sqrt(d))
with the prime-ideal valuation of Z[sqrt(d)].

Fractional ideals are stored as ``(1/den) * M`` where ``M`` is the Z-lattice
with Hermite basis rows ``(a, 0), (b, c)`` in coordinates ``(1, sqrt(d))``,
``0 <= b < a`` and ``c > 0``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from . import kernels
from .errors import DemivalError, FactorizationBoundError, ZeroIdealError
from .formatting import format_rational
from .value_groups import (
    INFINITY,
    ExtendedValue,
    QuadPrime,
    RationalPrime,
    ValueVector,
    is_prime,
)

DEFAULT_FACTOR_BOUND = 10**6


def default_factor_bound() -> int:
    env = os.environ.get("DEMIVAL_FACTOR_BOUND")
    return int(env) if env else DEFAULT_FACTOR_BOUND


# ---------------------------------------------------------------------------
# integers and Q


@lru_cache(maxsize=1 << 16)
def _factor_positive(n: int, bound: int) -> tuple:
    factors, rest = kernels.trial_division(n, bound)
    if rest != 1:
        raise FactorizationBoundError(
            f"factorization exceeds bound: cofactor {rest} of {n} has no prime factor <= {bound}"
        )
    return tuple(factors)


def factor_integer(n: int, bound: int | None = None) -> list[tuple[int, int]]:
    """Prime factorization of ``|n|`` as ``[(p, e), ...]`` by trial division."""
    if n == 0:
        raise DemivalError("cannot factor zero", "zero")
    n = abs(int(n))
    if n == 1:
        return []
    return list(_factor_positive(n, bound or default_factor_bound()))


def p_adic_order(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def rational_valuation(q, bound: int | None = None) -> ExtendedValue:
    q = Fraction(q)
    if q == 0:
        return INFINITY
    entries = {RationalPrime(p): e for p, e in factor_integer(q.numerator, bound)}
    for p, e in factor_integer(q.denominator, bound):
        entries[RationalPrime(p)] = -e
    return ValueVector(entries)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``g = s*a + t*b = gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


# ---------------------------------------------------------------------------
# quadratic fields


def _is_squarefree(d: int) -> bool:
    n = abs(d)
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class QuadContext:
    d: int

    def __post_init__(self):
        d = self.d
        if d in (0, 1) or not _is_squarefree(d):
            raise DemivalError(f"d = {d} must be squarefree and different from 0, 1", "bad_ring")
        if d % 4 == 1:
            raise DemivalError(f"d = {d} is 1 mod 4; only d = 2, 3 mod 4 is supported", "bad_ring")

    def __call__(self, a=0, b=0) -> QuadElement:
        return QuadElement(self, a, b)

    @property
    def sqrt(self) -> QuadElement:
        return QuadElement(self, 0, 1)

    def __str__(self):
        return f"Q(sqrt({self.d}))"


class QuadElement:
    """``a + b*sqrt(d)`` with rational ``a, b``."""

    __slots__ = ("ctx", "a", "b")

    def __init__(self, ctx: QuadContext, a=0, b=0):
        self.ctx = ctx
        self.a = Fraction(a)
        self.b = Fraction(b)

    def _coerce(self, other) -> QuadElement | None:
        if isinstance(other, QuadElement):
            if other.ctx.d != self.ctx.d:
                raise DemivalError("mixing elements of different quadratic fields", "ring_mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElement(self.ctx, other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElement(self.ctx, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadElement(self.ctx, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElement(self.ctx, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.ctx.d
        return QuadElement(self.ctx, self.a * o.a + d * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> QuadElement:
        return QuadElement(self.ctx, self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.ctx.d * self.b * self.b

    def inverse(self) -> QuadElement:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return QuadElement(self.ctx, self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadElement(self.ctx, 1, 0)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, QuadElement):
            return self.ctx.d == other.ctx.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.ctx.d, self.a, self.b))

    def __bool__(self):
        return bool(self.a or self.b)

    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    def denominator(self) -> int:
        return lcm(self.a.denominator, self.b.denominator)

    def __str__(self):
        root = f"sqrt({self.ctx.d})"
        if self.b == 0:
            return format_rational(self.a)
        mag = abs(self.b)
        surd = root if mag == 1 else f"{format_rational(mag)}*{root}"
        if self.a == 0:
            return f"-{surd}" if self.b < 0 else surd
        sign = "-" if self.b < 0 else "+"
        return f"{format_rational(self.a)} {sign} {surd}"

    def __repr__(self):
        return f"QuadElement({self})"


# ---------------------------------------------------------------------------
# Hermite normal form and fractional ideals


def hnf(vectors) -> tuple[int, int, int]:
    """HNF ``(a, b, c)`` of the full-rank lattice spanned by integer ``vectors``."""
    pivot = None
    axis = []
    for x, y in vectors:
        if y == 0:
            if x:
                axis.append(x)
            continue
        if pivot is None:
            pivot = (x, y)
            continue
        px, py = pivot
        g, s, t = xgcd(py, y)
        pivot = (s * px + t * x, g)
        axis.append((y // g) * px - (py // g) * x)
    a = 0
    for x in axis:
        a = gcd(a, x)
    if pivot is None or a == 0:
        raise ZeroIdealError("generators do not span a full-rank lattice")
    bx, c = pivot
    if c < 0:
        bx, c = -bx, -c
    return a, bx % a, c


@dataclass(frozen=True)
class QuadIdeal:
    """Fractional ideal ``(1/den) * [a, b + c*sqrt(d)]`` of Z[sqrt(d)]."""

    d: int
    den: int
    a: int
    b: int
    c: int

    @property
    def ctx(self) -> QuadContext:
        return QuadContext(self.d)

    @property
    def basis(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, 0), (self.b, self.c))

    @classmethod
    def from_generators(cls, ctx: QuadContext, gens) -> QuadIdeal:
        gens = [g if isinstance(g, QuadElement) else ctx(g) for g in gens]
        gens = [g for g in gens if g]
        if not gens:
            raise ZeroIdealError("the zero ideal is not a fractional ideal")
        n = 1
        for g in gens:
            n = lcm(n, g.denominator())
        vectors = []
        for g in gens:
            x, y = int(g.a * n), int(g.b * n)
            vectors.append((x, y))
            vectors.append((ctx.d * y, x))
        return cls._normalized(ctx.d, n, hnf(vectors))

    @classmethod
    def _normalized(cls, d: int, den: int, abc) -> QuadIdeal:
        a, b, c = abc
        t = gcd(gcd(a, b), gcd(c, den))
        return cls(d, den // t, a // t, b // t, c // t)

    @classmethod
    def unit(cls, ctx: QuadContext) -> QuadIdeal:
        return cls(ctx.d, 1, 1, 0, 1)

    @classmethod
    def principal(cls, x) -> QuadIdeal:
        return cls.from_generators(x.ctx, [x])

    def generators(self) -> list[QuadElement]:
        ctx = self.ctx
        return [ctx(Fraction(self.a, self.den)), ctx(Fraction(self.b, self.den), Fraction(self.c, self.den))]

    def is_integral(self) -> bool:
        return self.den == 1

    def norm(self) -> Fraction:
        return Fraction(self.a * self.c, self.den * self.den)

    def conjugate(self) -> QuadIdeal:
        return QuadIdeal.from_generators(self.ctx, [g.conjugate() for g in self.generators()])

    def __mul__(self, other: QuadIdeal) -> QuadIdeal:
        return ideal_mul(self, other)

    def __add__(self, other: QuadIdeal) -> QuadIdeal:
        return ideal_add(self, other)

    def __contains__(self, x) -> bool:
        return ideal_membership(x, self)

    def __str__(self):
        gens = ", ".join(str(g) for g in self.generators())
        return f"({gens})"


def _check_same_field(I: QuadIdeal, J: QuadIdeal):
    if I.d != J.d:
        raise DemivalError("ideals from different quadratic fields", "ring_mismatch")


def ideal_mul(I: QuadIdeal, J: QuadIdeal) -> QuadIdeal:
    _check_same_field(I, J)
    d = I.d
    vectors = []
    for x1, y1 in I.basis:
        for x2, y2 in J.basis:
            vectors.append((x1 * x2 + d * y1 * y2, x1 * y2 + x2 * y1))
    return QuadIdeal._normalized(d, I.den * J.den, hnf(vectors))


def ideal_add(I: QuadIdeal, J: QuadIdeal) -> QuadIdeal:
    _check_same_field(I, J)
    n = lcm(I.den, J.den)
    si, sj = n // I.den, n // J.den
    vectors = [(si * x, si * y) for x, y in I.basis] + [(sj * x, sj * y) for x, y in J.basis]
    return QuadIdeal._normalized(I.d, n, hnf(vectors))


def ideal_inverse(I: QuadIdeal) -> QuadIdeal:
    """``conj(I) / N(I)``, since ``I * conj(I) = (N(I))``."""
    n = I.norm()
    gens = [g.conjugate() / n for g in I.generators()]
    return QuadIdeal.from_generators(I.ctx, gens)


def ideal_membership(x, I: QuadIdeal) -> bool:
    if not isinstance(x, QuadElement):
        x = I.ctx(x)
    if x.ctx.d != I.d:
        raise DemivalError("element and ideal from different quadratic fields", "ring_mismatch")
    u, v = x.a * I.den, x.b * I.den
    if u.denominator != 1 or v.denominator != 1:
        return False
    u, v = int(u), int(v)
    if v % I.c:
        return False
    k = v // I.c
    return (u - k * I.b) % I.a == 0


def ideal_contains(I: QuadIdeal, J: QuadIdeal) -> bool:
    """True iff ``J`` is a subset of ``I``."""
    return all(ideal_membership(g, I) for g in J.generators())


def ideal_compare(I: QuadIdeal, J: QuadIdeal):
    """Order by reverse inclusion: ``I <= J`` iff ``I`` contains ``J``."""
    from .value_groups import Ordering

    if I == J:
        return Ordering.EQUAL
    if ideal_contains(I, J):
        return Ordering.LESS
    if ideal_contains(J, I):
        return Ordering.GREATER
    return Ordering.INCOMPARABLE


# ---------------------------------------------------------------------------
# prime ideals


def sqrt_mod(n: int, p: int) -> int | None:
    """A square root of ``n`` modulo odd prime ``p`` (Tonelli-Shanks), or None."""
    n %= p
    if n == 0:
        return 0
    if pow(n, (p - 1) // 2, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        bpow = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, bpow * bpow % p, t * bpow * bpow % p, r * bpow % p
    return r


@lru_cache(maxsize=None)
def _splitting(d: int, p: int) -> tuple:
    if (4 * d) % p == 0:
        return (QuadPrime(d, p, "ram"),)
    r = sqrt_mod(d, p)
    if r is None:
        return (QuadPrime(d, p, "inert"),)
    r = min(r, p - r)
    return (QuadPrime(d, p, "split+", r), QuadPrime(d, p, "split-", p - r))


def quad_splitting_type(ctx: QuadContext, p: int) -> tuple:
    """Labels of the prime ideals of Z[sqrt(d)] above ``p``."""
    if not is_prime(p):
        raise DemivalError(f"{p} is not prime", "not_prime")
    return _splitting(ctx.d, p)


@lru_cache(maxsize=None)
def prime_ideal_of_label(label: QuadPrime) -> QuadIdeal:
    ctx = QuadContext(label.d)
    p = label.p
    if label.kind == "inert":
        return QuadIdeal.from_generators(ctx, [p])
    if label.root is not None:
        r = label.root
    else:
        r = 0 if label.d % p == 0 else 1
    return QuadIdeal.from_generators(ctx, [ctx(p), ctx(-r, 1)])


@lru_cache(maxsize=4096)
def prime_power(label: QuadPrime, k: int) -> QuadIdeal:
    if k == 0:
        return QuadIdeal.unit(QuadContext(label.d))
    return ideal_mul(prime_power(label, k - 1), prime_ideal_of_label(label))


def _integral_order(z: QuadElement, label: QuadPrime) -> int:
    limit = p_adic_order(abs(int(z.norm())), label.p)
    k = 0
    while k < limit and ideal_membership(z, prime_power(label, k + 1)):
        k += 1
    return k


def _split_denominator(x: QuadElement) -> tuple[QuadElement, int]:
    n = x.denominator()
    return x * n, n


def prime_ideal_valuation(x: QuadElement, label: QuadPrime) -> int:
    """Exponent of ``label``'s prime in the factorization of ``(x)``, by
    membership of ``x`` in successive powers of the prime."""
    if not x:
        raise DemivalError("valuation of zero at a single prime is infinite", "zero")
    y, n = _split_denominator(x)
    return _integral_order(y, label) - _integral_order(y.ctx(n), label)


def _primes_of(x: QuadElement, bound: int | None) -> list[int]:
    y, n = _split_denominator(x)
    ps = {p for p, _ in factor_integer(int(y.norm()), bound)}
    ps.update(p for p, _ in factor_integer(n, bound))
    return sorted(ps)


@lru_cache(maxsize=1 << 15)
def _quad_value_cached(d: int, a: Fraction, b: Fraction, bound: int) -> ValueVector:
    x = QuadElement(QuadContext(d), a, b)
    entries = {}
    for p in _primes_of(x, bound):
        for label in _splitting(d, p):
            entries[label] = prime_ideal_valuation(x, label)
    return ValueVector(entries)


def quad_divisor_valuation(x, ctx: QuadContext | None = None, bound: int | None = None) -> ExtendedValue:
    if not isinstance(x, QuadElement):
        if ctx is None:
            raise DemivalError("a rational input needs the quadratic context", "ring_mismatch")
        x = ctx(x)
    if not x:
        return INFINITY
    return _quad_value_cached(x.ctx.d, x.a, x.b, bound or default_factor_bound())


def ideal_valuation(I: QuadIdeal, bound: int | None = None) -> ValueVector:
    """Prime-ideal exponents of a fractional ideal, via containment in powers."""
    M = QuadIdeal(I.d, 1, I.a, I.b, I.c)
    entries: dict = {}
    for p, e in factor_integer(I.a * I.c, bound):
        for label in _splitting(I.d, p):
            k = 0
            while k < e and ideal_contains(prime_power(label, k + 1), M):
                k += 1
            entries[label] = entries.get(label, 0) + k
    if I.den > 1:
        ctx = I.ctx
        for p, _ in factor_integer(I.den, bound):
            for label in _splitting(I.d, p):
                entries[label] = entries.get(label, 0) - _integral_order(ctx(I.den), label)
    return ValueVector(entries)


def ideal_from_value(ctx: QuadContext, value: ValueVector) -> QuadIdeal:
    """Multiply prime ideal powers back together."""
    out = QuadIdeal.unit(ctx)
    for label, e in value.entries:
        P = prime_ideal_of_label(label)
        if e < 0:
            P, e = ideal_inverse(P), -e
        for _ in range(e):
            out = ideal_mul(out, P)
    return out


def is_principal_search(I: QuadIdeal, search_bound: int) -> QuadElement | None:
    """Look for a generator ``a + b*sqrt(d)`` with ``|a|, |b| <= search_bound``.

    ``None`` only means nothing was found inside the box.  For ``d < 0`` the
    box covers every element of the right norm once ``search_bound`` is at
    least ``isqrt(N(I)) + 1``.
    """
    if not I.is_integral():
        raise DemivalError("principal search needs an integral ideal", "not_integral")
    ctx = I.ctx
    norm = I.a * I.c
    candidates = kernels.norm_solutions(ctx.d, norm, search_bound)
    candidates.sort(key=lambda ab: (abs(ab[0]), abs(ab[1]), ab[0] < 0, ab[1] < 0))
    for a, b in candidates:
        x = ctx(a, b)
        if QuadIdeal.principal(x) == I:
            return x
    return None
