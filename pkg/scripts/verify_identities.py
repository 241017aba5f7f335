"""Run every identity suite on a configurable grid and write a JSON summary.

Larger grids than the command-line defaults are the point of this script,
e.g. ``--n-max 128 --k-max 12`` for an overnight sweep.
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from kmersenne.identities import SUITES, SuiteConfig, run_suite


@dataclass
class SweepConfig:
    n_max: int | None = None
    k_max: int | None = None
    suites: tuple[str, ...] = tuple(SUITES)
    out: Path = Path("results/identities.json")


def sweep(cfg: SweepConfig) -> dict:
    grid = SuiteConfig(n_max=cfg.n_max, k_max=cfg.k_max)
    rows = []
    for name in cfg.suites:
        t0 = time.perf_counter()
        reports = run_suite(name, grid)
        fails = [r.params for r in reports if not r.holds]
        rows.append({"suite": name, "cells": len(reports), "failures": len(fails),
                     "first_failure": fails[0] if fails else None,
                     "seconds": round(time.perf_counter() - t0, 3)})
        print(f"{name:<11} {len(reports):>6} cells  {len(fails)} fail  {rows[-1]['seconds']:.2f}s")
    return {"config": {k: v for k, v in asdict(cfg).items() if k != "out"}, "suites": rows,
            "ok": all(r["failures"] == 0 for r in rows)}


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int)
    ap.add_argument("--k-max", type=int)
    ap.add_argument("--suite", action="append", choices=list(SUITES))
    ap.add_argument("--out", type=Path, default=SweepConfig.out)
    a = ap.parse_args()
    cfg = SweepConfig(a.n_max, a.k_max, tuple(a.suite) if a.suite else tuple(SUITES), a.out)
    summary = sweep(cfg)
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    cfg.out.write_text(json.dumps(summary, indent=2) + "\n")
    raise SystemExit(0 if summary["ok"] else 1)
