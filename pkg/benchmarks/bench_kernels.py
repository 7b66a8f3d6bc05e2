"""Compare the compiled kernels against the pure-Python fallback.

Run with:  python3 benchmarks/bench_kernels.py [--atoms N] [--repeat K]
"""

import argparse
import random
import time

from caselogic._kernels import pykernels
from caselogic.bridge import _case_arrays
from caselogic.models import ClassifierModel
from caselogic.sampling import random_case_base, small_signature

try:
    from caselogic._kernels import _ckernels
except ImportError:
    _ckernels = None


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_canonical(impl, sig, bases, repeat):
    payloads = [(sig.n,) + _case_arrays(cb) for cb in bases]

    def run():
        for args in payloads:
            impl.canonical_decisions(*args)

    return timed(run, repeat)


def bench_prime_implicants(impl, sig, codes, repeat):
    def run():
        for code in (pykernels.DEC_0, pykernels.DEC_1, pykernels.DEC_UNK):
            impl.prime_implicants(codes, sig.n, code)

    return timed(run, repeat)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--atoms", type=int, default=10,
                        help="atom count for the prime-implicant benchmark")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    impls = [("python", pykernels)]
    if _ckernels is not None:
        impls.append(("compiled", _ckernels))
    else:
        print("note: compiled kernels unavailable, timing the fallback only")

    half = args.atoms // 2
    sig_big = small_signature(args.atoms - half, half)
    model = ClassifierModel.full(
        sig_big, lambda s: rng.choice((1, 0, "?"))
    )
    codes = model.decision_codes()

    sig_cb = small_signature(4, 4)
    bases = [random_case_base(sig_cb, rng, 6) for _ in range(200)]

    results = {}
    for name, impl in impls:
        canon = bench_canonical(impl, sig_cb, bases, args.repeat)
        pimp = bench_prime_implicants(impl, sig_big, codes, args.repeat)
        results[name] = (canon, pimp)
        print(f"{name:>9}: canonical_decisions x200 @8 atoms  {canon * 1e3:8.2f} ms")
        print(f"{name:>9}: prime_implicants x3 @{args.atoms} atoms   {pimp * 1e3:8.2f} ms")

    if len(results) == 2:
        py, cy = results["python"], results["compiled"]
        print(f"speedup: canonical {py[0] / cy[0]:.1f}x, prime implicants {py[1] / cy[1]:.1f}x")


if __name__ == "__main__":
    main()
