"""Lattice-ordered groups of the form ⊕ℤ indexed by prime labels.

A :class:`ValueVector` is a finitely supported exponent vector; the order is
componentwise, so two vectors may be incomparable.  The formal top element
:data:`INFINITY` is the value of zero.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import DemivalError
from .formatting import format_poly, format_rational

# ---------------------------------------------------------------------------
# labels


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class RationalPrime:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise DemivalError(f"{self.p} is not prime", "bad_label")

    @property
    def sort_key(self):
        return (0, self.p)

    def __str__(self):
        return f"p:{self.p}"


QUAD_KINDS = ("inert", "ram", "split+", "split-")
_KIND_ALIASES = {
    "inert": "inert",
    "ram": "ram",
    "ramified": "ram",
    "split+": "split+",
    "split_plus": "split+",
    "split-": "split-",
    "split_minus": "split-",
}


@dataclass(frozen=True)
class QuadPrime:
    """A prime ideal of Z[sqrt(d)] lying over ``p``.

    ``d`` is carried along so the label alone determines its ideal; it is not
    part of the printed form.
    """

    d: int
    p: int
    kind: str
    root: int | None = None

    def __post_init__(self):
        kind = _KIND_ALIASES.get(self.kind)
        if kind is None:
            raise DemivalError(f"unknown splitting kind {self.kind!r}", "bad_label")
        object.__setattr__(self, "kind", kind)
        if not is_prime(self.p):
            raise DemivalError(f"{self.p} is not prime", "bad_label")
        split = kind in ("split+", "split-")
        if split != (self.root is not None):
            raise DemivalError("root is required exactly for split primes", "bad_label")
        if split and not (0 <= self.root < self.p and (self.root * self.root - self.d) % self.p == 0):
            raise DemivalError(f"{self.root} is not a square root of {self.d} mod {self.p}", "bad_label")

    @property
    def sort_key(self):
        return (1, self.p, QUAD_KINDS.index(self.kind), self.root or 0)

    def __str__(self):
        if self.root is None:
            return f"q:{self.p}:{self.kind}"
        return f"q:{self.p}:{self.kind}:{self.root}"


@dataclass(frozen=True)
class IrreduciblePoly:
    """Monic irreducible polynomial over Q, ascending coefficients."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) < 2 or coeffs[-1] != 1:
            raise DemivalError("irreducible label must be monic of degree >= 1", "bad_label")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def sort_key(self):
        return (2, self.degree, str(self))

    def __str__(self):
        return "f:" + format_poly(self.coeffs, compact=True)


PrimeLabel = Union[RationalPrime, QuadPrime, IrreduciblePoly]


def parse_label(text: str, d: int | None = None) -> PrimeLabel:
    kind, _, rest = text.partition(":")
    if kind == "p":
        return RationalPrime(int(rest))
    if kind == "q":
        if d is None:
            raise DemivalError("quadratic labels need the field discriminant", "bad_label")
        parts = rest.split(":")
        root = int(parts[2]) if len(parts) > 2 else None
        return QuadPrime(d, int(parts[0]), parts[1], root)
    if kind == "f":
        from .parser import parse_polynomial

        return IrreduciblePoly(tuple(parse_polynomial(rest).coeffs))
    raise DemivalError(f"unknown label {text!r}", "bad_label")


# ---------------------------------------------------------------------------
# values


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


class ValueVector:
    """Immutable, finitely supported element of ⊕ℤ."""

    __slots__ = ("_entries", "_map", "_hash")

    def __init__(self, entries: Mapping | Iterable = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict = {}
        for label, exp in items:
            acc[label] = acc.get(label, 0) + int(exp)
        self._map = {k: v for k, v in acc.items() if v != 0}
        self._entries = tuple(sorted(self._map.items(), key=lambda kv: kv[0].sort_key))
        self._hash = None

    @property
    def entries(self) -> tuple:
        return self._entries

    def labels(self):
        return [label for label, _ in self._entries]

    def __getitem__(self, label) -> int:
        return self._map.get(label, 0)

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def __eq__(self, other):
        if isinstance(other, ValueVector):
            return self._map == other._map
        if isinstance(other, Mapping):
            return self == ValueVector(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._map.items()))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{label}: {exp}" for label, exp in self._entries)
        return "{" + body + "}"

    def __add__(self, other: ValueVector) -> ValueVector:
        if not isinstance(other, ValueVector):
            return NotImplemented
        acc = dict(self._map)
        for label, exp in other._entries:
            acc[label] = acc.get(label, 0) + exp
        return ValueVector(acc)

    def __neg__(self) -> ValueVector:
        return ValueVector({label: -exp for label, exp in self._entries})

    def __sub__(self, other: ValueVector) -> ValueVector:
        return self + (-other)

    def scale(self, k: int) -> ValueVector:
        return ValueVector({label: k * exp for label, exp in self._entries})

    def _combine(self, other: ValueVector, op) -> ValueVector:
        support = set(self._map) | set(other._map)
        return ValueVector({lab: op(self[lab], other[lab]) for lab in support})

    def meet(self, other: ValueVector) -> ValueVector:
        return self._combine(other, min)

    def join(self, other: ValueVector) -> ValueVector:
        return self._combine(other, max)

    def compare(self, other: ValueVector) -> Ordering:
        le = ge = True
        for lab in set(self._map) | set(other._map):
            a, b = self[lab], other[lab]
            if a < b:
                ge = False
            elif a > b:
                le = False
            if not (le or ge):
                return Ordering.INCOMPARABLE
        if le and ge:
            return Ordering.EQUAL
        return Ordering.LESS if le else Ordering.GREATER

    def is_nonnegative(self) -> bool:
        return all(exp >= 0 for _, exp in self._entries)


ZERO = ValueVector()
ExtendedValue = Union[ValueVector, _Infinity]


# functional spellings of the group and lattice operations

def vv_add(a: ValueVector, b: ValueVector) -> ValueVector:
    return a + b


def vv_neg(a: ValueVector) -> ValueVector:
    return -a


def vv_compare(a: ValueVector, b: ValueVector) -> Ordering:
    return a.compare(b)


def vv_meet(a: ValueVector, b: ValueVector) -> ValueVector:
    return a.meet(b)


def vv_join(a: ValueVector, b: ValueVector) -> ValueVector:
    return a.join(b)


def ext_add(a: ExtendedValue, b: ExtendedValue) -> ExtendedValue:
    if a is INFINITY or b is INFINITY:
        return INFINITY
    return a + b


def ext_sub(a: ExtendedValue, b: ValueVector) -> ExtendedValue:
    """``a - b`` for finite ``b``; subtracting infinity is undefined."""
    if b is INFINITY:
        raise DemivalError("cannot subtract the value of zero", "division_by_zero")
    return INFINITY if a is INFINITY else a - b


def ext_meet(a: ExtendedValue, b: ExtendedValue) -> ExtendedValue:
    if a is INFINITY:
        return b
    if b is INFINITY:
        return a
    return a.meet(b)


def ext_compare(a: ExtendedValue, b: ExtendedValue) -> Ordering:
    if a is INFINITY and b is INFINITY:
        return Ordering.EQUAL
    if a is INFINITY:
        return Ordering.GREATER
    if b is INFINITY:
        return Ordering.LESS
    return a.compare(b)


def ext_ge(a: ExtendedValue, b: ExtendedValue) -> bool:
    return ext_compare(a, b) in (Ordering.GREATER, Ordering.EQUAL)


def meet_all(values: Iterable[ExtendedValue]) -> ExtendedValue:
    out: ExtendedValue = INFINITY
    for v in values:
        out = ext_meet(out, v)
    return out


# ---------------------------------------------------------------------------
# JSON


def to_json(value: ExtendedValue) -> dict:
    if value is INFINITY:
        return {"infinity": True}
    return {"entries": [{"label": str(lab), "exp": exp} for lab, exp in value.entries]}


def from_json(obj: dict, d: int | None = None) -> ExtendedValue:
    if obj.get("infinity"):
        return INFINITY
    return ValueVector((parse_label(e["label"], d), e["exp"]) for e in obj["entries"])


def dumps(value: ExtendedValue) -> str:
    return json.dumps(to_json(value), separators=(",", ":"))


def loads(text: str, d: int | None = None) -> ExtendedValue:
    return from_json(json.loads(text), d)


def minimal_in_set(values: Iterable[ValueVector]) -> ValueVector:
    """Return a minimal member of a finite set of nonnegative vectors.

    Each member is pushed down by repeated descent (swap the candidate for any
    strictly smaller member); the descent endpoints are exactly the minimal
    members, and the one with the least serialized form is returned.
    """
    pool = sorted(set(values), key=dumps)
    if not pool:
        raise DemivalError("minimal_in_set needs a non-empty set", "empty_set")
    for v in pool:
        if v.compare(ZERO) not in (Ordering.GREATER, Ordering.EQUAL):
            raise DemivalError(f"{v!r} is not in the positive cone", "not_positive")

    def descend(start: ValueVector) -> ValueVector:
        current = start
        while True:
            below = next((s for s in pool if s.compare(current) is Ordering.LESS), None)
            if below is None:
                return current
            current = below

    return min({descend(v) for v in pool}, key=dumps)


__all__ = [
    "RationalPrime", "QuadPrime", "IrreduciblePoly", "PrimeLabel", "parse_label",
    "Ordering", "INFINITY", "ValueVector", "ZERO", "ExtendedValue",
    "vv_add", "vv_neg", "vv_compare", "vv_meet", "vv_join",
    "ext_add", "ext_sub", "ext_meet", "ext_compare", "ext_ge", "meet_all",
    "to_json", "from_json", "dumps", "loads", "minimal_in_set", "format_rational",
]
