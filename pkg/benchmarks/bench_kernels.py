"""Compare the compiled matcher kernels against the pure-Python ones.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import time

from seqsat import _pykernels
from seqsat.core import Pattern
from seqsat.saturation import greedy_saturate

try:
    from seqsat import _ckernels
except ImportError:
    _ckernels = None

PATTERNS = ["abcacbc", "abbacac", "abcabcabc", "abcabcabcab"]


def workloads():
    rng = random.Random(0)
    for text in PATTERNS:
        u = Pattern.parse(text)
        seq = list(greedy_saturate(12, u))
        yield f"first_insertion {text} n=12 (len {len(seq)})", "first_insertion", (seq, u.letters, u.r, 12)
        noise = [rng.randint(1, 6) for _ in range(60)]
        yield f"find_copy {text} random len 60", "find_copy", (noise, u.letters)


def timed(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the Python backend is available")
    print(f"{'workload':48} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for label, name, call in workloads():
        py = timed(getattr(_pykernels, name), call, args.repeat)
        if _ckernels is None:
            print(f"{label:48} {py * 1e3:10.2f}")
            continue
        cy = timed(getattr(_ckernels, name), call, args.repeat)
        assert getattr(_pykernels, name)(*call) == getattr(_ckernels, name)(*call)
        print(f"{label:48} {py * 1e3:10.2f} {cy * 1e3:10.2f} {py / cy:8.1f}x")


if __name__ == "__main__":
    main()
