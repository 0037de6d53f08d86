"""Compare the compiled and pure-Python search kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from newtonfactor import _kernels_py, kernels, oracle, witness
from newtonfactor.field import make_field
from newtonfactor.support import Support

try:
    from newtonfactor import _kernels as _compiled
except ImportError:
    _compiled = None


def workloads():
    tri6 = Support([(0, 0), (6, 0), (0, 6)])
    grid4 = Support([(0, 0), (3, 0), (0, 3), (3, 3)])
    square = Support([(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)])
    t = witness.lemma44_sets(2)
    return [
        ("z_status deg-6 triangle over F5, max_ext 3", lambda: oracle.z_status(tri6, make_field(5), 3)),
        ("z_status 4-point square over F3", lambda: oracle.z_status(grid4, make_field(3))),
        ("z_status 5-point square over F3", lambda: oracle.z_status(square, make_field(3))),
        ("exhaustive B search d=2 over F4", lambda: witness.check_B(t, make_field(2, 2), method="exhaustive")),
    ]


def timed(backend, fn, repeat):
    kernels.search_factor, kernels.search_pair = backend.search_factor, backend.search_pair
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    saved = kernels.search_factor, kernels.search_pair
    print(f"{'workload':48} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    try:
        for name, fn in workloads():
            tp, rp = timed(_kernels_py, fn, args.repeat)
            if _compiled is None:
                print(f"{name:48} {tp:10.3f} {'n/a':>10} {'':>8}")
                continue
            tc, rc = timed(_compiled, fn, args.repeat)
            assert rp == rc, f"backends disagree on {name}"
            print(f"{name:48} {tp:10.3f} {tc:10.3f} {tp / tc:7.1f}x")
    finally:
        kernels.search_factor, kernels.search_pair = saved


if __name__ == "__main__":
    main()
