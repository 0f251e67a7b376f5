"""Compare the compiled kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--quick] [--repeat N]

Times the thin census, the thick census and the 5-subset P4 scan on
generated inputs, once per backend, and prints one row per case.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from spiderkit import _pykernels, complement
from spiderkit.gen import random_graph, random_p4_sparse, random_sparse_graph, random_thin_spider

try:
    from spiderkit import _kernels
except ImportError:
    _kernels = None


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def spider(n, s, seed=0):
    h = n - 2 * s
    g, _ = random_thin_spider(s, random_sparse_graph(h, 2 * h, seed), seed)
    return g


def cases(quick):
    sizes = [(10**4, 100), (10**5, 100), (10**6, 10)]
    if quick:
        sizes = sizes[:2]
    for n, s in sizes:
        g = spider(n, s)
        yield f"thin census n={n} s={s} m={g.m}", "thin_census", (g.indptr, g.indices)
    c = complement(spider(3000, 50))
    yield f"thick census n={c.n} m={c.m}", "thick_census", (c.indptr, c.indices)
    for n in ((16, 24) if quick else (16, 24, 32)):
        for label, g in (("p4-sparse", random_p4_sparse(n, 6, n)), ("G(n,1/2)", random_graph(n, 0.5, n))):
            masks = np.array(g.masks(), dtype=np.uint64)
            yield f"P4 scan n={g.n} {label}", "first_p4_violation", (masks,)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true", help="skip the largest inputs")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if _kernels is None:
        print("compiled extension not built; timing the fallback only")
    print(f"{'case':<44} {'cython ms':>11} {'python ms':>11} {'speedup':>8}")
    for label, name, fargs in cases(args.quick):
        py = best_of(getattr(_pykernels, name), fargs, args.repeat)
        if _kernels is not None:
            cy = best_of(getattr(_kernels, name), fargs, args.repeat)
            print(f"{label:<44} {cy * 1e3:>11.3f} {py * 1e3:>11.3f} {py / cy:>7.1f}x")
        else:
            print(f"{label:<44} {'-':>11} {py * 1e3:>11.3f} {'-':>8}")


if __name__ == "__main__":
    main()
