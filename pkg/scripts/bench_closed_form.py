"""Time the closed form against the recurrence over a range of indices."""

import argparse
import csv
import statistics
import sys
import time
from dataclasses import dataclass

from kmersenne.sequences import mersenne, mersenne_oracle


@dataclass
class BenchConfig:
    indices: tuple[int, ...] = (10**3, 10**4, 10**5, 10**6, 10**7)
    repeats: int = 5
    oracle_cutoff: int = 10**5


def best_of(fn, n, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        v = fn(n)
        times.append(time.perf_counter() - t0)
    return v, min(times), statistics.median(times)


def run(cfg: BenchConfig) -> int:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "closed_min_s", "closed_median_s", "oracle_min_s", "all_ones"])
    ok = True
    for n in cfg.indices:
        v, lo, med = best_of(mersenne, n, cfg.repeats)
        all_ones = v.bit_length() == n and (v + 1) & v == 0
        oracle = ""
        if n <= cfg.oracle_cutoff:
            ref, o_lo, _ = best_of(mersenne_oracle, n, 1)
            all_ones &= ref == v
            oracle = f"{o_lo:.6f}"
        ok &= all_ones
        w.writerow([n, f"{lo:.6f}", f"{med:.6f}", oracle, all_ones])
    return 0 if ok else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("indices", type=int, nargs="*")
    ap.add_argument("--repeats", type=int, default=BenchConfig.repeats)
    ap.add_argument("--oracle-cutoff", type=int, default=BenchConfig.oracle_cutoff)
    a = ap.parse_args()
    cfg = BenchConfig(tuple(a.indices) or BenchConfig.indices, a.repeats, a.oracle_cutoff)
    raise SystemExit(run(cfg))
