"""Pure-Python kernels. Same signatures and results as the compiled module."""
from math import isqrt


def trial_division(n: int, bound: int):
    """Strip prime factors ``<= bound`` from ``n > 0``.

    Returns ``(factors, cofactor)``; ``cofactor == 1`` means the factorization
    is complete, otherwise it is a remainder with no prime factor ``<= bound``
    that could not be certified prime.
    """
    factors = []
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    if e:
        factors.append((2, e))
    p = 3
    while p <= bound and p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 2
    if n > 1 and (p * p > n or n <= bound):
        factors.append((n, 1))
        n = 1
    return factors, n


def norm_solutions(d: int, norm: int, bound: int):
    """All ``(a, b)`` with ``|a|, |b| <= bound`` and ``a^2 - d*b^2 = ±norm``."""
    out = []
    for b in range(-bound, bound + 1):
        db2 = d * b * b
        for target in (norm + db2, -norm + db2):
            if target < 0:
                continue
            a = isqrt(target)
            if a * a == target and a <= bound:
                out.append((a, b))
                if a:
                    out.append((-a, b))
    return sorted(set(out))
