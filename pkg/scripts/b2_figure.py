"""Reproduce the B2 balancing figure and find alcoves with the same layer profile.

Prints the step-by-step trace for the abstract blocks in data/b2_figure_blocks.json,
the final diagram, and every B2 alcove up to --max-len whose tilting character
has layer sizes (2, 5, 6, 5, 2).  With --latex the final diagram is written
as a TikZ matrix with the placed Weyl blocks outlined.
"""
from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from tiltchar import RootDatum, TablePair
from tiltchar import characters as ch
from tiltchar.balance import BalanceState, balance_from_alcove, balance_run
from tiltchar.cli import load_blocks
from tiltchar.render import ascii_rows, latex_blocks

HERE = Path(__file__).resolve().parent


@dataclass
class FigureConfig:
    blocks: Path = HERE / "data" / "b2_figure_blocks.json"
    max_len: int = 8
    profile: tuple[int, ...] = (2, 5, 6, 5, 2)
    latex: Path | None = None


def replay(blocks, order, top) -> BalanceState:
    """Run the algorithm and print the diagram after every insertion."""
    final = balance_run(blocks, top, order=order)
    rank = {lab: -i for i, lab in enumerate(order)}
    partial = BalanceState(top)
    for step, (label, head) in enumerate(final.trace):
        partial.place(blocks[label], head)
        print(f"step {step}: place block {label} with head at {head}")
        print(ascii_rows(partial.rows(), rank.get))
        print()
    return final


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--blocks", type=Path, default=FigureConfig.blocks)
    parser.add_argument("--max-len", type=int, default=FigureConfig.max_len)
    parser.add_argument("--latex", type=Path, default=None)
    args = parser.parse_args()
    cfg = FigureConfig(args.blocks, args.max_len, latex=args.latex)

    blocks, order, top = load_blocks(cfg.blocks)
    final = replay(blocks, order, top)
    print("trace:", final.trace)
    if cfg.latex:
        rank = {lab: -i for i, lab in enumerate(order)}
        cfg.latex.write_text(latex_blocks(final, blocks, rank.get) + "\n")
        print(f"wrote {cfg.latex}")

    tables = TablePair(RootDatum.builtin("B2"), cfg.max_len)
    print(f"\nB2 alcoves with layer profile {cfg.profile}:")
    for A in tables.elements():
        g = ch.tilting_layers(tables, A)
        if g.layer_sizes() != cfg.profile:
            continue
        report = balance_from_alcove(tables, A)
        factors = Counter(ch.tilting_weyl_mults(tables, A))
        print(f"  {A.word_str}: {sum(factors.values())} Weyl factors, balance equal = {report.equal}")
        print("    trace:", [(x.word_str, h) for x, h in report.state.trace])


if __name__ == "__main__":
    main()
