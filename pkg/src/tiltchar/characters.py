"""Character formulas for tilting, Weyl and simple modules in a regular block.

Characters are identified with vectors of the antispherical module: the
canonical basis element of ``A`` is the tilting character ``[T(A)]``, the
standard basis vector is the Weyl character ``[Delta(A)]`` and the Deodhar
(tilde) basis vector is the simple character ``[L(A)]``.

The graded tilting character places ``L(B)`` in layer ``i`` with
multiplicity the ``v^i`` coefficient of

    t_{B,A} = sum_C n_{C,A} * bar(m^{C,B}),

with ``n`` from the antispherical table and ``m^{.,.}`` the spherical inverse
polynomials.  Offsets grow towards the socle.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .affine_weyl import AlcoveElement, Step, right_mult
from .errors import RangeError
from .hecke import ModuleVector, act_underline_Hs, basis_vector
from .kl import KLTable, TablePair
from .laurent import QUANTUM_TWO, ZERO, LaurentPoly

BASES = ("standard", "canonical", "tilde")


def _sph(tables) -> KLTable:
    return tables.sph if isinstance(tables, TablePair) else tables


def _asph(tables) -> KLTable:
    return tables.asph if isinstance(tables, TablePair) else tables


@dataclass
class GradedCharacter:
    """Multiplicities of simple characters per Loewy layer, keyed by ``(alcove, offset)``."""

    entries: dict[tuple[AlcoveElement, int], int] = field(default_factory=dict)
    center: int = 0

    def __post_init__(self):
        bad = {k: m for k, m in self.entries.items() if m < 0}
        if bad:
            raise ValueError(f"negative multiplicities in graded character: {bad}")
        self.entries = {k: m for k, m in self.entries.items() if m}

    def __getitem__(self, key: tuple[AlcoveElement, int]) -> int:
        return self.entries.get(key, 0)

    def offsets(self) -> list[int]:
        return sorted({off for _, off in self.entries})

    def layer(self, offset: int) -> Counter:
        return Counter({b: m for (b, off), m in self.entries.items() if off == offset})

    def layer_sizes(self) -> tuple[int, ...]:
        offs = self.offsets()
        if not offs:
            return ()
        return tuple(sum(self.layer(o).values()) for o in range(offs[0], offs[-1] + 1))

    def is_balanced(self) -> bool:
        return all(self[(b, -off)] == m for (b, off), m in self.entries.items())

    def ungraded(self) -> Counter:
        out: Counter = Counter()
        for (b, _), m in self.entries.items():
            out[b] += m
        return out

    def to_json(self) -> list[dict]:
        rows = []
        for off in self.offsets():
            layer = self.layer(off)
            factors = [
                {"word": b.word_str, "mult": layer[b]}
                for b in sorted(layer, key=AlcoveElement.sort_key, reverse=True)
            ]
            rows.append({"offset": off, "factors": factors})
        return rows


# -- the polynomials t_{B,A} ------------------------------------------------


def tilting_column(tables: TablePair, A: AlcoveElement) -> dict[AlcoveElement, LaurentPoly]:
    """``{B: t_{B,A}}`` for all ``B`` with nonzero value."""
    tables.sph._check_range(A)
    acc: dict[AlcoveElement, LaurentPoly] = {}
    for C, n in tables.asph.kl_basis(A).items():
        for B, m in tables.sph.inverse_row(C).items():
            acc[B] = acc.get(B, ZERO) + n * m.bar()
    return {B: p for B, p in sorted(acc.items(), key=lambda kv: kv[0].sort_key()) if p}


def tilting_poly(tables: TablePair, B: AlcoveElement, A: AlcoveElement) -> LaurentPoly:
    tables.sph._check_range(A, B)
    return tilting_column(tables, A).get(B, ZERO)


def tilting_layers(tables: TablePair, A: AlcoveElement) -> GradedCharacter:
    entries = {}
    for B, t in tilting_column(tables, A).items():
        for i, c in t.items():
            # t is self-dual, so the |i| reading and the signed reading agree
            entries[(B, i)] = t.coeff(abs(i))
    return GradedCharacter(entries)


# -- ungraded multiplicities -----------------------------------------------


def weyl_simple_mults(tables, A: AlcoveElement) -> dict[AlcoveElement, int]:
    """``[Delta(A) : L(B)] = m^{A,B}(1)`` (nonzero values only)."""
    row = _sph(tables).inverse_row(A)
    return {B: k for B, p in row.items() if (k := p.eval_at_one())}


def tilting_weyl_mults(tables, A: AlcoveElement) -> dict[AlcoveElement, int]:
    """``(T(A) : Delta(B)) = n_{B,A}(1)`` (nonzero values only)."""
    table = _asph(tables)
    table._check_range(A)
    return {B: k for B, p in table.kl_basis(A).items() if (k := p.eval_at_one())}


def parity_layer(tables, A: AlcoveElement, i: int) -> dict[AlcoveElement, int]:
    """Layer ``i`` of the parity filtration of the Weyl module of ``A``: ``B -> (m^{A,B})_i``."""
    if i < 0:
        raise ValueError("parity layers are indexed by i >= 0")
    row = _sph(tables).inverse_row(A)
    return {B: c for B, p in sorted(row.items(), key=lambda kv: kv[0].sort_key()) if (c := p.coeff(i))}


def parity_layers(tables, A: AlcoveElement) -> list[dict[AlcoveElement, int]]:
    """All nonempty-prefix parity layers of the Weyl module of ``A``, depth 0 first."""
    row = _sph(tables).inverse_row(A)
    depth = max((p.max_degree() for p in row.values()), default=0)
    return [parity_layer(tables, A, d) for d in range(depth + 1)]


# -- change of basis -------------------------------------------------------


def _basis_element(table: KLTable, x: AlcoveElement, basis: str) -> ModuleVector:
    if basis == "standard":
        return basis_vector(table.parity, x)
    if basis == "canonical":
        return table.kl_basis(x)
    if basis == "tilde":
        return table.tilde_basis(x)
    raise ValueError(f"unknown basis {basis!r}; choose from {BASES}")


def to_standard(table: KLTable, coords: ModuleVector, basis: str) -> ModuleVector:
    table._check_range(*coords)
    out = ModuleVector(table.parity)
    for x, p in coords.items():
        out = out + _basis_element(table, x, basis).scale(p)
    return out


def from_standard(table: KLTable, vec: ModuleVector, basis: str) -> ModuleVector:
    """Coordinates of ``vec`` in ``basis`` by unitriangular back-substitution."""
    table._check_range(*vec)
    if basis == "standard":
        return vec
    coords: dict[AlcoveElement, LaurentPoly] = {}
    rest = vec
    while not rest.is_zero():
        x = max(rest, key=AlcoveElement.sort_key)
        c = rest[x]
        coords[x] = c
        rest = rest - _basis_element(table, x, basis).scale(c)
    return ModuleVector(table.parity, coords)


def basis_change(table: KLTable, vec: ModuleVector, source: str, target: str) -> ModuleVector:
    """Re-express coordinates of ``vec`` w.r.t. ``source`` in the ``target`` basis."""
    if source not in BASES or target not in BASES:
        raise ValueError(f"bases must be among {BASES}")
    return from_standard(table, to_standard(table, vec, source), target)


# -- wall crossing -----------------------------------------------------------


@dataclass
class WallCrossing:
    """Decomposition of ``[T(A)] * (H_s + v)`` over simple characters.

    Every simple ``L(B)`` in ``[T(A)]`` with ``Bs > B`` in W+ contributes
    ``(v+v^-1) L(B) + L(Bs) + sum_D c_{D,B} L(D)``; the other simples are
    killed.  ``scaled``, ``shifted`` and ``vogan`` collect the three parts
    weighted by ``t_{B,A}``; ``total`` is their sum and ``vogan_layers``
    records the integers ``c_{D,B}``.
    """

    alcove: AlcoveElement
    s: int
    simple_coords: dict[AlcoveElement, LaurentPoly]
    scaled: dict[AlcoveElement, LaurentPoly]
    shifted: dict[AlcoveElement, LaurentPoly]
    vogan: dict[AlcoveElement, LaurentPoly]
    vogan_layers: dict[AlcoveElement, dict[AlcoveElement, int]]
    total: dict[AlcoveElement, LaurentPoly]


def vogan_layer(table: KLTable, B: AlcoveElement, s: int) -> dict[AlcoveElement, int]:
    """Constants ``c_D`` in ``L~_B (H_s + v) = (v+v^-1) L~_B + L~_{Bs} + sum_D c_D L~_D``.

    Requires ``Bs > B`` in W+; these are the multiplicities of the middle
    Loewy layer of the wall-crossed simple module.
    """
    move = right_mult(B, s)
    if move.step is not Step.UP:
        raise ValueError(f"{B}*s{s} is {move.step.value}, need UpIn")
    table._check_range(move.target)
    coords = from_standard(table, act_underline_Hs(table.tilde_basis(B), s), "tilde")
    rest = coords - basis_vector(table.parity, move.target) - basis_vector(table.parity, B).scale(QUANTUM_TWO)
    out = {}
    for D, p in rest.items():
        if p.min_degree() != 0 or p.max_degree() != 0:
            raise AssertionError(f"non-constant wall-crossing coefficient {p} at {D}")
        out[D] = p.coeff(0)
    return out


def wall_cross_char(tables: TablePair, A: AlcoveElement, s: int) -> WallCrossing:
    tables.datum.check_generator(s)
    table = tables.asph
    coords = tilting_column(tables, A)
    scaled: dict[AlcoveElement, LaurentPoly] = {}
    shifted: dict[AlcoveElement, LaurentPoly] = {}
    vogan: dict[AlcoveElement, LaurentPoly] = {}
    layers: dict[AlcoveElement, dict[AlcoveElement, int]] = {}
    for B, t in coords.items():
        move = right_mult(B, s)
        if move.step is not Step.UP:
            continue
        if move.target.length > table.max_len:
            raise RangeError(f"wall crossing from {B} reaches length {move.target.length} > {table.max_len}")
        scaled[B] = QUANTUM_TWO * t
        shifted[move.target] = shifted.get(move.target, ZERO) + t
        layers[B] = vogan_layer(table, B, s)
        for D, c in layers[B].items():
            vogan[D] = vogan.get(D, ZERO) + t * c
    total: dict[AlcoveElement, LaurentPoly] = {}
    for part in (scaled, shifted, vogan):
        for D, p in part.items():
            total[D] = total.get(D, ZERO) + p
    total = {D: p for D, p in sorted(total.items(), key=lambda kv: kv[0].sort_key()) if p}
    return WallCrossing(A, s, coords, scaled, shifted, vogan, layers, total)


def wall_cross_direct(tables: TablePair, A: AlcoveElement, s: int) -> dict[AlcoveElement, LaurentPoly]:
    """``[T(A)] * (H_s + v)`` computed in the standard basis, then re-expressed in simples."""
    table = tables.asph
    vec = act_underline_Hs(table.kl_basis(A), s)
    return dict(from_standard(table, vec, "tilde").items())


# -- partial characters ------------------------------------------------------


def delta_order(tables: TablePair, A: AlcoveElement) -> list[AlcoveElement]:
    """Weyl factors of ``T(A)``: the support of its canonical vector, longest first, then ShortLex."""
    support = tables.asph.kl_basis(A).support()
    return sorted(support, key=lambda x: (-x.length, x.word))


def partial_polys(
    tables: TablePair, A: AlcoveElement, k: int, anchor: AlcoveElement | None = None
) -> dict[AlcoveElement, LaurentPoly]:
    """``lam -> sum_{j<=k} n_{lam_j, anchor} * bar(m^{lam_j, lam})`` with ``anchor`` defaulting to ``A``."""
    order = delta_order(tables, A)
    if not 0 <= k <= len(order):
        raise ValueError(f"k={k} out of range 1..{len(order)}")
    anchor = A if anchor is None else anchor
    tables.sph._check_range(A, anchor)
    n_col = tables.asph.kl_basis(anchor)
    acc: dict[AlcoveElement, LaurentPoly] = {}
    for lam_j in order[:k]:
        n = n_col[lam_j]
        if not n:
            continue
        for lam, m in tables.sph.inverse_row(lam_j).items():
            acc[lam] = acc.get(lam, ZERO) + n * m.bar()
    return {lam: p for lam, p in acc.items() if p}


def partial_character(
    tables: TablePair, A: AlcoveElement, k: int, i: int, anchor: AlcoveElement | None = None
) -> dict[AlcoveElement, int]:
    """Truncated sums ``(partial_polys)_{<= i}`` as a map ``lam -> int`` (zeros dropped).

    ``k`` counts Weyl factors in :func:`delta_order`; ``k = 0`` is the empty sum.
    """
    polys = partial_polys(tables, A, k, anchor)
    out = {}
    for lam in sorted(polys, key=AlcoveElement.sort_key):
        c = polys[lam].truncated_sum(i)
        if c:
            out[lam] = c
    return out


def telescoped(
    tables: TablePair, A: AlcoveElement, k: int, i: int, anchor: AlcoveElement | None = None
) -> dict[AlcoveElement, int]:
    """Four-term difference of partial characters at ``(k, i)``; ``k >= 1``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    out: Counter = Counter()
    for kk, ii, sign in ((k, i, 1), (k - 1, i, -1), (k, i - 1, -1), (k - 1, i - 1, 1)):
        for lam, c in partial_character(tables, A, kk, ii, anchor).items():
            out[lam] += sign * c
    return {lam: c for lam, c in out.items() if c}

