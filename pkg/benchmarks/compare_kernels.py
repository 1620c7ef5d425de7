"""Compare the vectorized and reference fill kernels.

Times PartitionTable.build with each kernel over a sweep of sizes and
verifies both produce identical final layers.  Run from the repository
root:

    python3 benchmarks/compare_kernels.py [--n 12 16 20 24]

Each --n maps to the table the basic counting route would build for
that vertex count (max_sum = n(n-1), max_part = n-2, target = n-1).
"""

from __future__ import annotations

import argparse
import time

from degseq.partition_table import PartitionTable, TableParams


def time_build(params: TableParams, kernel: str, reps: int) -> float:
    best = None
    for _ in range(reps):
        t0 = time.perf_counter()
        PartitionTable.build(params, kernel=kernel)
        elapsed = time.perf_counter() - t0
        best = elapsed if best is None else min(best, elapsed)
    return best


def layers_match(params: TableParams) -> bool:
    a = PartitionTable.build(params, kernel="vector")
    b = PartitionTable.build(params, kernel="reference")
    l = params.target_parts
    for N in range(params.max_sum + 1):
        for k in range(min(N, params.max_part) + 1):
            for s in range(N + 1):
                if a.query_raw(N, k, l, s) != b.query_raw(N, k, l, s):
                    return False
    return True


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[12, 16, 20, 24])
    parser.add_argument("--reps", type=int, default=3)
    parser.add_argument(
        "--check", action="store_true",
        help="also verify both kernels fill identical layers (slow)",
    )
    args = parser.parse_args()

    print(f"{'n':>4} {'cells':>12} {'vector':>10} {'reference':>10} {'speedup':>8}")
    for n in args.n:
        params = TableParams(
            max_sum=n * (n - 1), max_part=n - 2, target_parts=n - 1
        )
        cells = (params.max_part + 1) * (
            (params.max_sum + 1) * (params.max_sum + 2) // 2
        )
        tv = time_build(params, "vector", args.reps)
        tr = time_build(params, "reference", args.reps)
        print(
            f"{n:>4} {cells:>12} {tv:>9.3f}s {tr:>9.3f}s {tr / tv:>7.1f}x"
        )
        if args.check:
            ok = layers_match(params)
            print(f"     layers identical: {ok}")
            if not ok:
                raise SystemExit(1)


if __name__ == "__main__":
    main()
