"""Run the invariant sweep over several root systems and print a timing table.

    python3 scripts/sweep.py                       # default sweeps
    python3 scripts/sweep.py --types B2 G2 --max-len 7
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from tiltchar import RootDatum, TablePair
from tiltchar.verify import sweep

DEFAULT_BOUNDS = {"A1": 12, "A2": 8, "B2": 8, "G2": 6, "A3": 5}


@dataclass
class SweepConfig:
    types: list[str] = field(default_factory=lambda: list(DEFAULT_BOUNDS))
    max_len: int | None = None  # None: per-type default bound

    def bound(self, label: str) -> int:
        return self.max_len if self.max_len is not None else DEFAULT_BOUNDS.get(label, 6)


def run(cfg: SweepConfig) -> bool:
    all_ok = True
    for label in cfg.types:
        L = cfg.bound(label)
        start = time.perf_counter()
        tables = TablePair(RootDatum.builtin(label), L)
        results = list(sweep(tables))
        elapsed = time.perf_counter() - start
        print(f"{label} up to length {L}: {len(tables.elements())} alcoves, {elapsed:.2f}s")
        for r in results:
            print(f"  {'PASS' if r.ok else 'FAIL'}  {r.name:<42} {r.passed:>6} ok {r.failed:>4} bad")
            all_ok &= r.ok
    return all_ok


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--types", nargs="+", default=list(DEFAULT_BOUNDS))
    parser.add_argument("--max-len", type=int, default=None)
    args = parser.parse_args()
    return 0 if run(SweepConfig(args.types, args.max_len)) else 1


if __name__ == "__main__":
    raise SystemExit(main())
