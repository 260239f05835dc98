"""Compare the compiled and numpy kernels on the same seeded ideals.

    python benchmarks/compare_kernels.py --grid "10,12,2;15,15,4" --reps 5

Both backends must produce identical tables; the script exits nonzero if
they do not.
"""
import argparse
import statistics
import sys
import time

from morsebetti.bench import Cell, instance_seed, parse_grid
from morsebetti.engine import compute_betti_table
from morsebetti.kernels import available_backends
from morsebetti.random_ideals import random_ideal

DEFAULT_GRID = "10,8,2;10,12,2;10,12,4;15,12,2;15,15,2;15,15,4;15,18,4"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--grid", default=DEFAULT_GRID)
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    backends = available_backends()
    if len(backends) < 2:
        print(f"only {backends} available; build the extension with `pip install -e .`", file=sys.stderr)
    print("n,r,d," + ",".join(f"{b}_mean_s" for b in backends) + ",speedup")
    ok = True
    for cell in parse_grid(args.grid):
        times = {b: [] for b in backends}
        for rep in range(args.reps):
            ideal = random_ideal(cell.n, cell.r, cell.d, seed=instance_seed(args.seed, cell, rep))
            tables = {}
            for b in backends:
                t0 = time.perf_counter()
                tables[b] = compute_betti_table(ideal, backend=b)
                times[b].append(time.perf_counter() - t0)
            first = tables[backends[0]]
            if any(t != first for t in tables.values()):
                ok = False
                print(f"backends disagree on {ideal}", file=sys.stderr)
        means = {b: statistics.fmean(ts) for b, ts in times.items()}
        speed = means["python"] / means["compiled"] if "compiled" in means else float("nan")
        print(f"{cell.n},{cell.r},{cell.degree_text}," + ",".join(f"{means[b]:.4f}" for b in backends) + f",{speed:.2f}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
