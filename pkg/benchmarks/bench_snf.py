"""Compare the native and pure-Python SNF kernels on full Goeritz matrices.

    python benchmarks/bench_snf.py [--repeat N] [P,Q ...]
"""

import argparse
import time

from goeritz import bench, smith
from goeritz.cli import sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("pairs", nargs="*", help="torus pairs P,Q (default: a ladder up to T(14,14))")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--sweep", action="store_true", help="also time the full 14x14 cross-check sweep")
    args = ap.parse_args()
    pairs = [tuple(int(x) for x in s.split(",")) for s in args.pairs] or bench.DEFAULT_PAIRS
    print(f"backends available: {', '.join(smith.available_backends())}")
    print(bench.format_table(bench.run(pairs, args.repeat)))
    if args.sweep:
        for backend in smith.available_backends():
            saved = smith.DEFAULT_BACKEND
            smith.DEFAULT_BACKEND = backend
            try:
                t0 = time.perf_counter()
                sweep(14, 14)
                print(f"sweep 2<=p<=q<=14 ({backend}): {time.perf_counter() - t0:.2f}s")
            finally:
                smith.DEFAULT_BACKEND = saved


if __name__ == "__main__":
    main()
