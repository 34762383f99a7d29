"""Compare the compiled and pure-Python model enumeration kernels.

    python benchmarks/bench_kernels.py [--max-universe 4] [--repeat 3]

Both workloads are full enumerations (no early exit): a valid 4-term
entailment, and the 5-quantity mood table of figure 3.
"""

import argparse
import time

from interquant import kernels
from interquant.algebra import LETTER_CODES
from interquant.models import FIGURES

# all(A)(B), all(B)(C), all(C)(D) |= some(A)(D) holds, so every model is visited
PREMISES = [(LETTER_CODES["A"], 0, 1, 0), (LETTER_CODES["A"], 1, 2, 0), (LETTER_CODES["A"], 2, 3, 0)]
CONCLUSION = (LETTER_CODES["I"], 0, 3, 0)


def timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--max-universe", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    m = args.max_universe
    n_models = sum((2 ** k - 1) ** 4 for k in range(1, m + 1))
    workloads = {
        f"countermodel search, 4 terms, m<={m} ({n_models} models)":
            lambda k: k.first_countermodel(4, PREMISES, CONCLUSION, m, 3, 4),
        f"mood table, figure 3, m<={m + 1}":
            lambda k: k.mood_table(FIGURES[3], m + 1, 3, 4),
    }
    backends = kernels.backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the Python backend is available")
    for label, work in workloads.items():
        print(label)
        times, results = {}, {}
        for name, mod in backends.items():
            times[name], results[name] = timed(lambda: work(mod), args.repeat)
            print(f"  {name:<9} {times[name] * 1000:10.2f} ms")
        if len(results) == 2:
            assert results["compiled"] == results["python"], "backends disagree"
            print(f"  speedup   {times['python'] / times['compiled']:10.1f}x")


if __name__ == "__main__":
    main()
