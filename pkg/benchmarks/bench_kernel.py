"""Time tensor evaluation with the compiled and the pure-Python kernel.

    python3 benchmarks/bench_kernel.py --seed 1 --links 10 -n 3 4
"""

import argparse
import random
import time

from snweb import kernel
from snweb.random_diagrams import random_braid_closure, random_link
from snweb.tensor import evaluate


def workload(seed, links, ranks):
    rng = random.Random(seed)
    out = []
    for n in ranks:
        for _ in range(links):
            out.append(random_link(rng, n, 8, max_width=6))
            out.append(random_braid_closure(rng, n, max_strands=4, length=8))
    return out


def timed(impl, diagrams, repeat):
    saved = kernel.apply_local
    kernel.apply_local = impl.apply_local
    try:
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            values = [evaluate(d) for d in diagrams]
            best = min(best, time.perf_counter() - t0)
    finally:
        kernel.apply_local = saved
    return best, values


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--links", type=int, default=10, help="random diagrams per rank and kind")
    ap.add_argument("-n", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    diagrams = workload(args.seed, args.links, args.n)
    results = {}
    for name, impl in kernel.backends().items():
        results[name] = timed(impl, diagrams, args.repeat)
        print(f"{name:8s} {results[name][0] * 1000:9.1f} ms  ({len(diagrams)} diagrams)")
    if "cython" not in results:
        print("compiled kernel not built; only the fallback was timed")
        return
    assert results["cython"][1] == results["python"][1], "backends disagree"
    print(f"speedup  {results['python'][0] / results['cython'][0]:9.2f}x")


if __name__ == "__main__":
    main()
