"""Sweep a corpus of ring specs and report factorization properties.

Runs the same analysis as ``ringlab corpus`` but as a standalone experiment
script with a dataclass config, progress output, and a CSV artifact.

Usage:
    python3 scripts/run_corpus.py [--config configs/corpus.txt] [--jobs 4]
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from ringlab.cli import _corpus_row, _parse_corpus_config
from ringlab.reports import REPORT_FIELDS, PropertyReport


@dataclass
class SweepConfig:
    config_path: Path = Path("configs/corpus.txt")
    out_csv: Path = Path("corpus_results.csv")
    out_json: Path = Path("corpus_results.json")
    max_ring_size: int = 4096
    jobs: int = 1
    extra_specs: list[str] = field(default_factory=list)


def run_sweep(cfg: SweepConfig) -> dict:
    text = cfg.config_path.read_text()
    if cfg.extra_specs:
        text += "\n" + "\n".join(cfg.extra_specs)
    specs = _parse_corpus_config(text)
    print(f"{len(specs)} specs from {cfg.config_path}")

    t0 = time.perf_counter()
    jobs = [(s, cfg.max_ring_size) for s in specs]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            rows = list(pool.map(_corpus_row, jobs))
    else:
        rows = [_corpus_row(j) for j in jobs]
    elapsed = time.perf_counter() - t0

    violations = []
    for row in rows:
        if row.get("error"):
            violations.append((row["spec"], row["error"]))
            continue
        rep = PropertyReport(**{k: v for k, v in row.items()
                                if k not in ("error", "row_timing_seconds")})
        violations.extend((row["spec"], v) for v in rep.violations())

    with open(cfg.out_csv, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=REPORT_FIELDS, extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            if not row.get("error"):
                writer.writerow(row)
    with open(cfg.out_json, "w") as fh:
        json.dump({"rows": rows}, fh, sort_keys=True, indent=1)

    counts: dict[str, int] = {}
    for row in rows:
        if not row.get("error"):
            counts[row["bouvier_class"]] = counts.get(row["bouvier_class"], 0) + 1
    print(f"done in {elapsed:.2f}s: {len(rows)} rows, classes {counts}")
    for spec, v in violations:
        print(f"VIOLATION {spec}: {v}")
    print(f"wrote {cfg.out_csv} and {cfg.out_json}")
    return {"rows": rows, "violations": violations, "elapsed": elapsed}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--config", type=Path, default=SweepConfig.config_path)
    ap.add_argument("--out-csv", type=Path, default=SweepConfig.out_csv)
    ap.add_argument("--out-json", type=Path, default=SweepConfig.out_json)
    ap.add_argument("--max-ring-size", type=int, default=SweepConfig.max_ring_size)
    ap.add_argument("--jobs", type=int, default=SweepConfig.jobs)
    ap.add_argument("specs", nargs="*", help="extra ring specs to append")
    args = ap.parse_args()
    cfg = SweepConfig(config_path=args.config, out_csv=args.out_csv,
                      out_json=args.out_json, max_ring_size=args.max_ring_size,
                      jobs=args.jobs, extra_specs=args.specs)
    result = run_sweep(cfg)
    return 2 if result["violations"] else 0


if __name__ == "__main__":
    sys.exit(main())
