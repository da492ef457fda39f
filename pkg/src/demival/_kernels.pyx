# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for machine-sized integers.

Inputs that do not fit are routed to the pure-Python versions.
"""
from libc.math cimport sqrt

from . import _pykernels

cdef unsigned long long _LIMIT = 1ULL << 62


def trial_division(object n, object bound):
    if n >= _LIMIT or bound >= (1 << 31):
        return _pykernels.trial_division(n, bound)
    cdef unsigned long long m = n
    cdef unsigned long long b = bound
    cdef unsigned long long p = 3
    cdef int e = 0
    factors = []
    while m % 2 == 0:
        m //= 2
        e += 1
    if e:
        factors.append((2, e))
    while p <= b and p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((int(p), e))
        p += 2
    if m > 1 and (p * p > m or m <= b):
        factors.append((int(m), 1))
        m = 1
    return factors, int(m)


cdef long long _isqrt(long long t):
    cdef long long r = <long long>sqrt(<double>t)
    while r * r > t:
        r -= 1
    while (r + 1) * (r + 1) <= t:
        r += 1
    return r


def norm_solutions(object d, object norm, object bound):
    if abs(d) * bound * bound + norm >= (1 << 52):
        return _pykernels.norm_solutions(d, norm, bound)
    cdef long long dd = d, nn = norm, bb = bound
    cdef long long b, a, db2, target
    cdef int s
    out = set()
    for b in range(-bb, bb + 1):
        db2 = dd * b * b
        for s in range(2):
            target = (nn + db2) if s == 0 else (db2 - nn)
            if target < 0:
                continue
            a = _isqrt(target)
            if a * a == target and a <= bb:
                out.add((int(a), int(b)))
                if a:
                    out.add((int(-a), int(b)))
    return sorted(out)
