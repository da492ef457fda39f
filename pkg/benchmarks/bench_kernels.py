"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import random
import timeit

from demival import _pykernels

try:
    from demival import _kernels
except ImportError:  # extension not built
    _kernels = None


def workloads(rng):
    smooth = [rng.randrange(2, 10**6) * rng.randrange(2, 10**5) for _ in range(200)]
    semiprimes = [1000003 * 999983, 10**11 + 3, 2**31 - 1]
    return {
        "trial_division smooth <= 1e11": lambda m: [m.trial_division(n, 10**6) for n in smooth],
        "trial_division hard 1e12": lambda m: [m.trial_division(n, 10**6) for n in semiprimes],
        "norm_solutions d=-5, N=30030, box 400": lambda m: m.norm_solutions(-5, 30030, 400),
        "norm_solutions d=-1, N=65, box 2000": lambda m: m.norm_solutions(-1, 65, 2000),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(0)
    print(f"{'workload':42} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, work in workloads(rng).items():
        py = min(timeit.repeat(lambda: work(_pykernels), number=1, repeat=args.repeat))
        if _kernels is None:
            print(f"{name:42} {py:10.4f} {'n/a':>10}")
            continue
        assert work(_kernels) == work(_pykernels)
        cy = min(timeit.repeat(lambda: work(_kernels), number=1, repeat=args.repeat))
        print(f"{name:42} {py:10.4f} {cy:10.4f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
