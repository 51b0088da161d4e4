"""The layer-balancing algorithm for graded tilting characters.

Start from the parity filtration of the top Weyl module with its head in the
middle layer (offset 0; offsets grow towards the socle).  While some label
``mu`` occurs more often at offset ``p > 0`` than at ``-p``, take the highest
such label (smallest ``p`` on ties) and add the parity filtration of its Weyl
module with the head placed at ``-p``.  Stop once every layer is mirrored.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .affine_weyl import AlcoveElement
from .characters import GradedCharacter, parity_layers, tilting_layers, tilting_weyl_mults
from .errors import BalanceError, ConfigError
from .kl import TablePair

Label = Hashable


@dataclass(frozen=True)
class ParityBlock:
    """Parity filtration of one Weyl module: ``layers[d]`` is the multiset at depth ``d``."""

    label: Label
    layers: tuple[Counter, ...]

    def __post_init__(self):
        layers = tuple(Counter({k: m for k, m in layer.items() if m}) for layer in self.layers)
        while len(layers) > 1 and not layers[-1]:
            layers = layers[:-1]
        if not layers or layers[0] != Counter({self.label: 1}):
            raise ConfigError(f"block {self.label!r}: depth 0 must be exactly {{{self.label!r}}}")
        if any(m < 0 for layer in layers for m in layer.values()):
            raise ConfigError(f"block {self.label!r} has negative multiplicities")
        object.__setattr__(self, "layers", layers)

    @classmethod
    def from_lists(cls, label: Label, rows: Iterable[Iterable[Label]]) -> "ParityBlock":
        return cls(label, tuple(Counter(row) for row in rows))

    @property
    def depth(self) -> int:
        return len(self.layers) - 1


@dataclass
class BalanceState:
    top_label: Label
    layers: dict[int, Counter] = field(default_factory=dict)
    trace: list[tuple[Label, int]] = field(default_factory=list)

    def place(self, block: ParityBlock, head_offset: int) -> None:
        for d, layer in enumerate(block.layers):
            self.layers.setdefault(head_offset + d, Counter()).update(layer)
        self.trace.append((block.label, head_offset))

    def count(self, label: Label, offset: int) -> int:
        return self.layers.get(offset, Counter())[label]

    def deficits(self) -> dict[tuple[Label, int], int]:
        """Nonzero ``count(mu, p) - count(mu, -p)`` for ``p > 0``."""
        out = {}
        for p in {abs(o) for o in self.layers if o}:
            below = self.layers.get(p, Counter())
            above = self.layers.get(-p, Counter())
            for mu in set(below) | set(above):
                d = below[mu] - above[mu]
                if d:
                    out[(mu, p)] = d
        return out

    def is_balanced(self) -> bool:
        return not self.deficits()

    def offsets(self) -> list[int]:
        return sorted(o for o, layer in self.layers.items() if +layer)

    def rows(self) -> list[tuple[int, Counter]]:
        return [(o, +self.layers[o]) for o in self.offsets()]


def _order_key(order: Sequence[Label] | Callable | None) -> Callable[[Label], object]:
    if order is None:
        return lambda lab: lab
    if callable(order):
        return order
    rank = {lab: -i for i, lab in enumerate(order)}

    def key(lab):
        try:
            return rank[lab]
        except KeyError:
            raise ConfigError(f"label {lab!r} missing from the label order") from None

    return key


def balance_run(
    blocks: Mapping[Label, ParityBlock],
    top: Label,
    max_steps: int | None = None,
    order: Sequence[Label] | Callable | None = None,
) -> BalanceState:
    """Run the balancing algorithm starting from the block of ``top``.

    ``order`` is either a sequence of labels from highest to lowest, a key
    function (larger is higher), or ``None`` for the labels' own ordering.
    """
    key = _order_key(order)
    if top not in blocks:
        raise BalanceError("unknownLabel", f"no block for top label {top!r}")
    if max_steps is None:
        max_steps = 4 ** (len(blocks) + 2)
    state = BalanceState(top)
    state.place(blocks[top], 0)
    steps = 0
    while True:
        deficits = state.deficits()
        positive = [(mu, p) for (mu, p), d in deficits.items() if d > 0]
        if not positive:
            if deficits:
                (mu, p), d = min(deficits.items(), key=lambda kv: kv[0][1])
                raise BalanceError(
                    "unbalancedAbove", f"{-d} extra {mu!r} at offset {-p} with nothing to mirror", state
                )
            return state
        if steps >= max_steps:
            raise BalanceError("maxStepsExceeded", f"not balanced after {max_steps} insertions", state)
        mu = max((m for m, _ in positive), key=key)
        p = min(pp for m, pp in positive if m == mu)
        if mu not in blocks:
            raise BalanceError("unknownLabel", f"deficit names {mu!r}, which has no block", state)
        state.place(blocks[mu], -p)
        steps += 1


def state_to_character(state: BalanceState) -> GradedCharacter:
    return GradedCharacter({(mu, o): m for o, layer in state.layers.items() for mu, m in layer.items()})


def alcove_blocks(tables: TablePair, A: AlcoveElement) -> dict[AlcoveElement, ParityBlock]:
    """Parity blocks for every alcove of length at most ``l(A)``."""
    blocks = {}
    for mu in tables.elements(A.length):
        layers = parity_layers(tables, mu)
        blocks[mu] = ParityBlock(mu, tuple(Counter(layer) for layer in layers))
    return blocks


def alcove_order_key(tables: TablePair, max_len: int) -> Callable[[AlcoveElement], tuple]:
    """Longer is higher; within a length the ShortLex-smaller word is higher."""
    index = {x: i for i, x in enumerate(tables.elements(max_len))}
    return lambda x: (x.length, -index[x])


@dataclass
class BalanceReport:
    alcove: AlcoveElement
    state: BalanceState | None
    character: GradedCharacter | None
    expected: GradedCharacter
    equal: bool
    error: BalanceError | None = None

    def soergel_multiplicities(self) -> Counter:
        return Counter(mu for mu, _ in self.state.trace) if self.state else Counter()


def balance_from_alcove(
    tables: TablePair,
    A: AlcoveElement,
    order: Callable | None = None,
    max_steps: int | None = None,
) -> BalanceReport:
    """Balance the Weyl-module data below ``A`` and compare with the t-polynomial layers.

    Algorithm failures are reported in the result, not raised.
    """
    tables.sph._check_range(A)
    blocks = alcove_blocks(tables, A)
    key = order or alcove_order_key(tables, A.length)
    if max_steps is None:
        max_steps = 4 ** (A.length + 2)
    expected = tilting_layers(tables, A)
    try:
        state = balance_run(blocks, A, max_steps=max_steps, order=key)
    except BalanceError as err:
        return BalanceReport(A, err.state, None, expected, False, err)
    character = state_to_character(state)
    return BalanceReport(A, state, character, expected, character == expected)


def trace_matches_soergel(tables: TablePair, report: BalanceReport) -> bool:
    """Trace multiplicities equal ``n_{mu,A}(1)`` and head offsets equal ``-deg`` of ``n_{mu,A}``."""
    if report.state is None:
        return False
    A = report.alcove
    if dict(report.soergel_multiplicities()) != tilting_weyl_mults(tables, A):
        return False
    heads: dict = {}
    for mu, off in report.state.trace:
        heads.setdefault(mu, Counter())[off] += 1
    for mu, n in tables.asph.kl_basis(A).items():
        if heads.get(mu, Counter()) != Counter({-d: c for d, c in n.items()}):
            return False
    return True
