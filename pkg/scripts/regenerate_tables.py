"""Write tables 1-4 in every output format to a directory."""

import argparse
from dataclasses import dataclass
from pathlib import Path

from kmersenne.cli import TABLE_FAMILIES, main as cli_main


@dataclass
class TableRun:
    out_dir: Path = Path("results/tables")
    formats: tuple[str, ...] = ("plain", "csv", "json")
    n_max: int = 5
    k_max: int = 5


def run(cfg: TableRun) -> int:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    worst = 0
    for tid in TABLE_FAMILIES:
        for fmt in cfg.formats:
            ext = {"plain": "txt"}.get(fmt, fmt)
            target = cfg.out_dir / f"table{tid}.{ext}"
            code = cli_main(["table", str(tid), "--format", fmt, "--n-max", str(cfg.n_max),
                             "--k-max", str(cfg.k_max), "--out", str(target)])
            worst = max(worst, code)
            print(f"{target}  exit {code}")
    return worst


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=TableRun.out_dir)
    ap.add_argument("--n-max", type=int, default=TableRun.n_max)
    ap.add_argument("--k-max", type=int, default=TableRun.k_max)
    a = ap.parse_args()
    raise SystemExit(run(TableRun(out_dir=a.out_dir, n_max=a.n_max, k_max=a.k_max)))
