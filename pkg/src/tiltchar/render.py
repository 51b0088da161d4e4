"""ASCII and LaTeX renderings of layered characters and balancing runs."""
from __future__ import annotations

from collections import Counter
from typing import Callable, Hashable, Iterable

from .balance import BalanceState


def label_str(label: Hashable) -> str:
    return getattr(label, "word_str", None) or str(label)


def _expand(layer: Counter, key: Callable) -> list[str]:
    out = []
    for lab in sorted(layer, key=key, reverse=True):
        out += [label_str(lab)] * layer[lab]
    return out


def ascii_rows(rows: Iterable[tuple[int, Counter]], key: Callable) -> str:
    """One line per offset, most negative offset first; labels highest first."""
    lines = []
    for off, layer in rows:
        lines.append(f"{off:>3} | " + " ".join(_expand(layer, key)))
    return "\n".join(lines)


def ascii_trace(state: BalanceState) -> str:
    return ", ".join(f"({label_str(lab)},{off})" for lab, off in state.trace)


def latex_rows(rows: list[tuple[int, Counter]], key: Callable) -> str:
    """Stacked rows in a TikZ matrix, one row per Loewy layer."""
    body = []
    for _, layer in rows:
        body.append("  " + " \\& ".join(_expand(layer, key)) + " \\\\")
    return "\n".join(
        [
            "\\begin{tikzpicture}[baseline]",
            "\\matrix(m)[matrix of math nodes, row sep=1em, column sep=0.75em,",
            "  ampersand replacement=\\&, font=\\scriptsize]",
            "{",
            *body,
            "};",
            "\\end{tikzpicture}",
        ]
    )


def latex_blocks(state: BalanceState, blocks: dict, key: Callable) -> str:
    """One matrix column per placed block, each outlined with a dashed box."""
    offsets = state.offsets()
    lo, hi = offsets[0], offsets[-1]
    cols = []
    for label, head in state.trace:
        col = {}
        for d, layer in enumerate(blocks[label].layers):
            col[head + d] = ", ".join(_expand(layer, key))
        cols.append(col)
    body = []
    for off in range(lo, hi + 1):
        body.append("  " + " \\& ".join(c.get(off, "") for c in cols) + " \\\\")
    outlines = []
    for j, (label, head) in enumerate(state.trace, start=1):
        top = head - lo + 1
        bottom = top + blocks[label].depth
        outlines.append(
            f"\\draw[weylcircles, rounded corners] (m-{top}-{j}.north west) rectangle (m-{bottom}-{j}.south east);"
        )
    return "\n".join(
        [
            "\\begin{tikzpicture}[baseline]",
            "\\tikzstyle{weylcircles}=[gray, thin, dashed]",
            "\\matrix(m)[matrix of math nodes, row sep=1em, column sep=0.75em,",
            "  nodes={minimum width=1em}, ampersand replacement=\\&, font=\\scriptsize]",
            "{",
            *body,
            "};",
            *outlines,
            "\\end{tikzpicture}",
        ]
    )
