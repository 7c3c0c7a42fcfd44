"""Run the check registry for a few seeds and summarize statuses."""
from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from symsextic import checks
from symsextic.report import emit_json


@dataclass
class RunConfig:
    pattern: str | None = None
    seeds: tuple[int, ...] = (0,)
    out_dir: Path | None = None


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--filter", dest="pattern")
    ap.add_argument("--seeds", type=int, nargs="+", default=[0])
    ap.add_argument("--out-dir", type=Path)
    args = ap.parse_args()
    cfg = RunConfig(args.pattern, tuple(args.seeds), args.out_dir)
    for seed in cfg.seeds:
        reports, code = checks.verify_paper(cfg.pattern, seed)
        counts = Counter(r.status for r in reports)
        print(f"seed {seed}: exit {code}, " + ", ".join(f"{n} {s}" for s, n in sorted(counts.items())))
        for r in reports:
            if r.status != "match":
                print(f"    {r.id}: {r.status} (expected {r.expected}, computed {r.computed})")
        if cfg.out_dir:
            cfg.out_dir.mkdir(parents=True, exist_ok=True)
            (cfg.out_dir / f"report_seed{seed}.json").write_text(emit_json(reports))


if __name__ == "__main__":
    main()
