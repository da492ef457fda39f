"""Seeded random generators and the property suites behind ``demival check``.

Each suite draws from its own ``random.Random`` seeded from the master seed
and the suite name, so suites are reproducible independently of each other.
"""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .errors import DemivalError
from .factor import kronecker_factor
from .fields import QuadraticField, RationalField
from .function_field import (
    basis_witness,
    bezout_coefficients,
    coefficient_cofactors,
    content_value,
    contract_ideal,
    extend,
    extend_contract_roundtrip_check,
    is_integer_polynomial,
    kronecker_ring_member,
    rw_ideal_equal,
    rw_principal_generator,
    t_instance,
    u_instance,
    u_member,
    u_value,
    w_instance,
    w_value,
)
from .number_rings import (
    QuadIdeal,
    ideal_from_value,
    ideal_valuation,
    is_principal_search,
    quad_divisor_valuation,
)
from .polynomials import Polynomial, RationalFunction
from .valuation import axiom_report, combination_value, reconstruct_unit
from .value_groups import ZERO, IrreduciblePoly, RationalPrime, ValueVector, ext_add, meet_all


def _sieve(n: int) -> list[int]:
    flags = bytearray([1]) * (n + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(n**0.5) + 1):
        if flags[i]:
            flags[i * i::i] = bytearray(len(flags[i * i::i]))
    return [i for i, f in enumerate(flags) if f]


SMALL_PRIMES = _sieve(30)
PRIMES_10K = _sieve(10**4)


def suite_seed(seed: int, name: str) -> int:
    digest = hashlib.sha256(f"{seed}:{name}".encode()).hexdigest()
    return int(digest[:16], 16)


@dataclass
class SuiteResult:
    name: str
    samples: int = 0
    failures: list = field(default_factory=list)
    failure_count: int = 0

    def fail(self, message: str):
        self.failure_count += 1
        if len(self.failures) < 5:
            self.failures.append(message)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def to_json(self) -> dict:
        return {"suite": self.name, "samples": self.samples, "failures": self.failure_count,
                "examples": self.failures, "ok": self.ok}


# ---------------------------------------------------------------------------
# generators


def rand_smooth(rng: random.Random, primes, max_factors: int = 3) -> int:
    out = 1
    for _ in range(rng.randint(0, max_factors)):
        out *= rng.choice(primes)
    return out


def rand_rational(rng: random.Random, primes=SMALL_PRIMES, max_factors: int = 3) -> Fraction:
    sign = rng.choice((1, -1))
    return Fraction(sign * rand_smooth(rng, primes, max_factors), rand_smooth(rng, primes, max_factors))


def rand_small_rational(rng: random.Random, num: int = 30, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def rand_quad(rng: random.Random, K: QuadraticField, num: int = 30, den: int = 4):
    return K.ctx(rand_small_rational(rng, num, den), rand_small_rational(rng, num, den))


def rand_quad_integral(rng: random.Random, K: QuadraticField, box: int = 50, nonzero: bool = True):
    while True:
        x = K.ctx(rng.randint(-box, box), rng.randint(-box, box))
        if x or not nonzero:
            return x


def rand_quad_smooth(rng: random.Random, K: QuadraticField, primes=PRIMES_10K):
    """Nonzero element whose norm only involves small primes."""
    x = K.ctx(rand_rational(rng, primes, 2))
    for _ in range(rng.randint(0, 3)):
        x = x * rand_quad_integral(rng, K, 3)
    return x


def coefficient_source(base, rng: random.Random, kind: str = "small"):
    """Callable drawing random coefficients of the requested flavour."""
    if isinstance(base, RationalField):
        if kind == "smooth":
            return lambda: rand_rational(rng, PRIMES_10K, 2)
        if kind == "integral":
            return lambda: Fraction(rng.randint(-9, 9))
        return lambda: rand_small_rational(rng)
    if kind == "smooth":
        return lambda: rand_quad_smooth(rng, base)
    if kind == "integral":
        return lambda: rand_quad_integral(rng, base, 9, nonzero=False)
    return lambda: rand_quad(rng, base)


def rand_poly(rng: random.Random, coeff, max_deg: int, zero_prob: float = 0.2, nonzero: bool = True):
    while True:
        deg = rng.randint(0, max_deg)
        cs = [coeff() if rng.random() >= zero_prob else 0 for _ in range(deg)] + [coeff()]
        p = Polynomial(cs)
        if p or not nonzero:
            return p


def rand_rational_function(rng: random.Random, coeff, num_deg: int = 2, den_deg: int = 1):
    return RationalFunction(rand_poly(rng, coeff, num_deg), rand_poly(rng, coeff, den_deg))


def rand_rw_element(rng: random.Random, base, num_deg: int = 2, den_deg: int = 1):
    """Random nonzero element of R(w): integral numerator over a denominator
    that has 1 among its coefficients (content zero)."""
    coeff = coefficient_source(base, rng, "integral")
    num = rand_poly(rng, coeff, num_deg)
    k = rng.randint(0, den_deg)
    den_cs = [coeff() for _ in range(k)] + [1]
    rng.shuffle(den_cs)
    den = Polynomial(den_cs)
    if not den:
        den = Polynomial((1,))
    return RationalFunction(num, den)


# ---------------------------------------------------------------------------
# suites


def _instances():
    Q = RationalField()
    K5, K1 = QuadraticField(-5), QuadraticField(-1)
    return Q, K5, K1


def suite_axioms(seed: int, samples: int = 1000) -> list[SuiteResult]:
    Q, K5, K1 = _instances()
    results = []
    plans = [
        ("axioms/rational_divisor", Q.valuation, lambda rng: rand_rational(rng)),
        ("axioms/quad_divisor_-5", K5.valuation, lambda rng: rand_quad(rng, K5)),
        ("axioms/quad_divisor_-1", K1.valuation, lambda rng: rand_quad(rng, K1)),
        ("axioms/w_Q", w_instance(Q),
         lambda rng: rand_rational_function(rng, coefficient_source(Q, rng), 2, 2)),
        ("axioms/w_quad_-5", w_instance(K5),
         lambda rng: rand_rational_function(rng, coefficient_source(K5, rng), 2, 1)),
        ("axioms/t_Q", t_instance(),
         lambda rng: rand_rational_function(rng, coefficient_source(Q, rng, "integral"), 2, 1)),
        ("axioms/u_Q", u_instance(),
         lambda rng: rand_rational_function(rng, coefficient_source(Q, rng), 2, 1)),
    ]
    for name, inst, gen in plans:
        rng = random.Random(suite_seed(seed, name))
        pairs = []
        for i in range(samples):
            a, b = gen(rng), gen(rng)
            if i % 50 == 0:
                b = -a  # exercise the a + b = 0 convention
            pairs.append((a, b))
        pairs.append((pairs[0][0] * 0, pairs[0][0] * 0))
        report = axiom_report(inst, pairs)
        res = SuiteResult(name, report.samples)
        for f in report.failures:
            res.fail(f"{f.relation} on {f.inputs}: {f.values}")
        results.append(res)
    return results


def suite_gauss_kronecker(seed: int, samples: int = 1000, bases=None) -> list[SuiteResult]:
    results = []
    for base in bases or _instances()[:2]:
        name = f"gauss_kronecker/{base}"
        rng = random.Random(suite_seed(seed, name))
        coeff = coefficient_source(base, rng, "smooth")
        res = SuiteResult(name)
        for _ in range(samples):
            f, g = rand_poly(rng, coeff, 8), rand_poly(rng, coeff, 8)
            res.samples += 1
            lhs = content_value(f * g, base)
            rhs = ext_add(content_value(f, base), content_value(g, base))
            if lhs != rhs:
                res.fail(f"w({f} * {g}) = {lhs} != {rhs}")
        results.append(res)
    return results


def suite_bezout(seed: int, samples: int = 500, bases=None) -> list[SuiteResult]:
    results = []
    for base in bases or _instances()[:2]:
        name = f"bezout/{base}"
        rng = random.Random(suite_seed(seed, name))
        coeff = coefficient_source(base, rng, "small")
        res = SuiteResult(name)
        for _ in range(samples):
            p = rand_poly(rng, coeff, 5, nonzero=False)
            q = rand_poly(rng, coeff, 5)
            c, d = bezout_coefficients(p, q)
            res.samples += 1
            lhs = content_value(c * p + d * q, base)
            rhs = meet_all([content_value(p, base), content_value(q, base)])
            if c != Polynomial.monomial(q.degree + 1) or lhs != rhs:
                res.fail(f"p={p}, q={q}: {lhs} != {rhs}")
        results.append(res)
    return results


def suite_principal(seed: int, samples: int = 200, bases=None) -> list[SuiteResult]:
    results = []
    for base in bases or _instances()[:2]:
        name = f"principal/{base}"
        rng = random.Random(suite_seed(seed, name))
        res = SuiteResult(name)
        for _ in range(samples):
            gens = [rand_rw_element(rng, base) for _ in range(rng.randint(1, 4))]
            J = extend(base, gens)
            out = rw_principal_generator(J)
            res.samples += 1
            target = meet_all(w_value(g, base) for g in gens)
            if w_value(out.m, base) != target:
                res.fail(f"value of generator for {gens}")
            if not all(kronecker_ring_member(q, base) for q in out.cofactors):
                res.fail(f"cofactor outside R(w) for {gens}")
            if not all(kronecker_ring_member(k, base) for k in out.coefficients):
                res.fail(f"coefficient outside R(w) for {gens}")
            if combination_value(out) != out.m:
                res.fail(f"certificate chain does not reproduce m for {gens}")
        results.append(res)
    return results


def _norm_of_prime(label) -> int:
    return label.p**2 if label.kind == "inert" else label.p


def suite_dedekind(seed: int, samples: int = 200, d: int = -5) -> list[SuiteResult]:
    K = QuadraticField(d)
    name = f"dedekind/{K}"
    rng = random.Random(suite_seed(seed, name))
    res = SuiteResult(name)
    for _ in range(samples):
        x = rand_quad_integral(rng, K, 60)
        res.samples += 1
        value = quad_divisor_valuation(x)
        prod = 1
        for label, e in value.entries:
            prod *= _norm_of_prime(label) ** e
        if prod != abs(x.norm()):
            res.fail(f"norm bookkeeping for {x}: {prod} != {abs(x.norm())}")
        if ideal_from_value(K.ctx, value) != QuadIdeal.principal(x):
            res.fail(f"prime powers of {value} do not rebuild ({x})")
        if ideal_valuation(QuadIdeal.principal(x)) != value:
            res.fail(f"containment valuation of ({x}) disagrees with membership valuation")
    return [res]


def suite_non_pid(seed: int) -> list[SuiteResult]:
    K = QuadraticField(-5)
    s = K.ctx.sqrt
    res = SuiteResult("non_pid/Q(sqrt(-5))", samples=1)
    P2 = QuadIdeal.from_generators(K.ctx, [2, 1 + s])
    if is_principal_search(P2, 100) is not None:
        res.fail("(2, 1+sqrt(-5)) reported principal")
    out = rw_principal_generator(extend(K, [2, 1 + s]))
    expected = RationalFunction(Polynomial((1 + s, 2)))
    if out.m != expected:
        res.fail(f"generator {out.m} != {expected}")
    return [res]


def suite_cofactors(seed: int, samples: int = 200, bases=None) -> list[SuiteResult]:
    results = []
    for base in bases or _instances()[:2]:
        name = f"cofactors/{base}"
        rng = random.Random(suite_seed(seed, name))
        coeff = coefficient_source(base, rng, "small")
        res = SuiteResult(name)
        for _ in range(samples):
            p = rand_poly(rng, coeff, 5)
            res.samples += 1
            cof = coefficient_cofactors(p, base)
            if len(cof) != len(p.nonzero_coefficients()):
                res.fail(f"wrong cofactor count for {p}")
            if not all(kronecker_ring_member(c, base) for c in cof):
                res.fail(f"cofactor outside R(w) for {p}")
            if any(c * p != a for c, a in zip(cof, p.nonzero_coefficients())):
                res.fail(f"cofactor times p is not the coefficient for {p}")
        results.append(res)
    return results


def suite_roundtrip(seed: int, samples: int = 100, bases=None) -> list[SuiteResult]:
    results = []
    for base in bases or _instances()[:2]:
        name = f"roundtrip/{base}"
        rng = random.Random(suite_seed(seed, name))
        integral = coefficient_source(base, rng, "integral")
        res = SuiteResult(name)
        for _ in range(samples):
            res.samples += 1
            # b -> bR(w) -> bR(w) ∩ R(v)
            gens = []
            while not any(gens):
                gens = [integral() for _ in range(rng.randint(1, 3))]
            gens = [g for g in gens if g]
            J = extend(base, gens)
            back = contract_ideal(J)
            if base.content_ideal(back) != base.content_ideal(gens):
                res.fail(f"contract(extend({gens})) = {back}")
            v = base.valuation
            if meet_all(v(x) for x in back) != meet_all(v(g) for g in gens):
                res.fail(f"meet of values changed for {gens}")
            ts = [integral() for _ in range(6)]
            ts += [sum((integral() * g for g in gens), base.coerce(0)) for _ in range(6)]
            combos = [tuple(RationalFunction(integral()) for _ in gens) for _ in range(3)]
            if len(gens) >= 2:
                X = RationalFunction.x()
                combos.append((X * gens[1], -X * gens[0]) + tuple(RationalFunction(0) for _ in gens[2:]))
            if not extend_contract_roundtrip_check(base, gens, ts, combos):
                res.fail(f"convexity check failed for {gens}")
            # J -> J ∩ R(v) -> (J ∩ R(v)) R(w)
            J2 = extend(base, [rand_rw_element(rng, base) for _ in range(rng.randint(1, 3))])
            if not rw_ideal_equal(extend(base, contract_ideal(J2)), J2):
                res.fail(f"extend(contract(J)) != J for {J2.gens}")
        results.append(res)
    return results


def rand_integer_poly(rng: random.Random, max_deg: int = 3, box: int = 6) -> Polynomial:
    while True:
        p = Polynomial(rng.randint(-box, box) for _ in range(rng.randint(1, max_deg + 1)))
        if p:
            return p


def rand_outside_zx(rng: random.Random) -> RationalFunction:
    """Random element of Q(X) that is not in Z[X]."""
    while True:
        if rng.random() < 0.5:
            num = rand_integer_poly(rng, 3)
            f = RationalFunction(num, rng.choice((2, 3, 4, 5, 6, 9)))
        else:
            f = RationalFunction(rand_integer_poly(rng, 3), rand_integer_poly(rng, 2))
        if f and not is_integer_polynomial(f):
            return f


def suite_u_ring(seed: int, samples: int = 500, witnesses: int = 50, reconstructions: int = 200) -> list[SuiteResult]:
    rng = random.Random(suite_seed(seed, "u_ring/membership"))
    member = SuiteResult("u_ring/membership")
    for i in range(samples):
        f = RationalFunction(rand_integer_poly(rng, 4)) if i % 2 == 0 else rand_outside_zx(rng)
        member.samples += 1
        if u_member(f) != is_integer_polynomial(f):
            member.fail(f"u_member({f}) = {u_member(f)}")

    rng = random.Random(suite_seed(seed, "u_ring/basis_witness"))
    wit = SuiteResult("u_ring/basis_witness")
    labels = []
    while len(labels) < witnesses:
        if rng.random() < 0.4:
            labels.append(RationalPrime(rng.choice(PRIMES_10K[:200])))
        else:
            for g, _ in kronecker_factor(rand_integer_poly(rng, 4)).factors:
                labels.append(IrreduciblePoly(g.coeffs))
    for label in labels[:witnesses]:
        wit.samples += 1
        got = u_value(basis_witness(label))
        if got != ValueVector({label: 1}):
            wit.fail(f"u(basis_witness({label})) = {got}")

    rng = random.Random(suite_seed(seed, "u_ring/reconstruct_unit"))
    rec = SuiteResult("u_ring/reconstruct_unit")
    u = u_instance()
    coeff = coefficient_source(RationalField(), rng)
    for _ in range(reconstructions):
        f = rand_rational_function(rng, coeff, 3, 2)
        rec.samples += 1
        unit = reconstruct_unit(u, f)
        if u(unit) != ZERO:
            rec.fail(f"reconstruct_unit({f}) = {unit} has value {u(unit)}")
    return [member, wit, rec]


def brute_force_reducible(coeffs) -> bool:
    """Reducibility over Q of a degree <= 3 integer polynomial with
    coefficients in [-4, 4], by searching linear factors aX + b."""
    p = Polynomial(coeffs)
    if p.degree <= 1:
        return False
    for a in range(1, 5):
        for b in range(-4, 5):
            root = Fraction(-b, a)
            if p(root) == 0:
                return True
    return False


def suite_factor(seed: int, box: int = 4, max_deg: int = 3) -> list[SuiteResult]:
    res = SuiteResult(f"factor/exhaustive_deg{max_deg}_box{box}")
    for coeffs in product(range(-box, box + 1), repeat=max_deg + 1):
        p = Polynomial(coeffs)
        if p.degree < 1:
            continue
        res.samples += 1
        out = kronecker_factor(p)
        if out.expand() != p:
            res.fail(f"{p} does not re-expand")
        if out.is_irreducible() == brute_force_reducible(coeffs):
            res.fail(f"verdict mismatch for {p}: {out.to_json()}")
    return [res]


SUITES = {
    "axioms": suite_axioms,
    "gauss_kronecker": suite_gauss_kronecker,
    "bezout": suite_bezout,
    "principal": suite_principal,
    "dedekind": suite_dedekind,
    "non_pid": suite_non_pid,
    "cofactors": suite_cofactors,
    "roundtrip": suite_roundtrip,
    "u_ring": suite_u_ring,
    "factor": suite_factor,
}


def run_suites(seed: int, samples: int | None = None, names=None) -> list[SuiteResult]:
    """Run the named suites (all by default); ``samples`` overrides each
    suite's sample count where it has one."""
    out = []
    for name in names or SUITES:
        fn = SUITES.get(name)
        if fn is None:
            raise DemivalError(f"unknown suite {name!r}", "unknown_suite")
        if samples is not None and name not in ("non_pid", "factor"):
            out.extend(fn(seed, samples))
        else:
            out.extend(fn(seed))
    return sorted(out, key=lambda r: r.name)


__all__ = ["SuiteResult", "SUITES", "run_suites", "suite_seed", "brute_force_reducible"] + [
    n for n in dir() if n.startswith("suite_") or n.startswith("rand_")
]
