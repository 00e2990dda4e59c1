"""Compare the compiled and pure KL kernels, and cold vs cached runs.

Usage: python3 benchmarks/bench_kl.py [SERIES RANK [M]]
"""

import os
import sys
import tempfile
import time

from kcv.coxeter import build_group
from kcv.klcells import KLTable
from kcv.cache import cache_save, cache_load


def run(series="D", rank=5, m=None):
    g = build_group(series, rank, m=m)
    print("group %r, order %d" % (g, g.order))
    times = {}
    for backend in ("compiled", "pure"):
        try:
            t0 = time.perf_counter()
            kl = KLTable(g, backend=backend)
            times[backend] = time.perf_counter() - t0
            print("  %-8s %8.3f s  (%d distinct polynomials)"
                  % (backend, times[backend], len(kl.polys)))
        except ImportError:
            print("  %-8s not available" % backend)
    path = os.path.join(tempfile.mkdtemp(), "bench.klc")
    cache_save(kl, path)
    t0 = time.perf_counter()
    cache_load(g, path)
    warm = time.perf_counter() - t0
    cold = min(times.values())
    print("  %-8s %8.3f s  (%.1fx vs best cold run)"
          % ("cached", warm, cold / warm))
    if "compiled" in times and "pure" in times:
        print("  compiled/pure speedup: %.1fx"
              % (times["pure"] / times["compiled"]))
    os.remove(path)


if __name__ == "__main__":
    args = sys.argv[1:]
    if args:
        series = args[0]
        rank = int(args[1])
        m = int(args[2]) if len(args) > 2 else None
        run(series, rank, m)
    else:
        for series, rank in (("A", 5), ("B", 5), ("D", 5), ("F4", 4)):
            run(series, rank)
