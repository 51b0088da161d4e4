"""Canonical bases of the spherical/antispherical modules and their polynomials.

``KLTable(datum, parity, max_len)`` computes, on demand and with memoization,

* the self-dual canonical basis ``x -> M_x + sum_y m_{y,x} M_y`` with
  ``m_{y,x}`` in ``vZ[v]`` (for the antispherical module, ``n_{y,x}``),
* the Deodhar variant with off-diagonal coefficients in ``v^-1 Z[v^-1]``,
* the inverse polynomials ``m^{z,x}`` defined by
  ``sum_z (-1)^{l(z)+l(x)} m^{z,x} m_{z,y} = delta_{x,y}``.

Canonical-basis elements can be computed for any length; inverse
polynomials need the whole length range and are limited to ``max_len``.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Callable, Iterable

from .affine_weyl import AlcoveElement, RootDatum, Step, right_mult
from .errors import ConfigError, RangeError
from .hecke import (
    ModuleVector,
    Parity,
    act_tilde_Hs,
    act_underline_Hs,
    basis_vector,
)
from .laurent import ONE, ZERO, LaurentPoly

PIVOTS = ("canonical", "max", "min")


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


class KLTable:
    def __init__(self, datum: RootDatum, parity: Parity, max_len: int, pivot: str = "canonical"):
        if max_len < 0:
            raise ConfigError("max_len must be non-negative")
        if pivot not in PIVOTS:
            raise ConfigError(f"unknown pivot rule {pivot!r}")
        self.datum = datum
        self.parity = parity
        self.max_len = max_len
        self.pivot = pivot
        self._basis: dict[AlcoveElement, ModuleVector] = {}
        self._tilde: dict[AlcoveElement, ModuleVector] = {}
        # column x -> {z: m^{z,x}}
        self._inverse: dict[AlcoveElement, dict[AlcoveElement, LaurentPoly]] = {}

    def __repr__(self):
        return f"KLTable({self.datum.label}, {self.parity.value}, max_len={self.max_len})"

    def elements(self, max_len: int | None = None) -> list[AlcoveElement]:
        return self.datum.alcoves.elements(self.max_len if max_len is None else max_len)

    def _pivot(self, x: AlcoveElement) -> tuple[int, AlcoveElement]:
        if self.pivot == "canonical":
            s = x.word[-1]
            return s, right_mult(x, s).target
        down = [
            (s, m.target) for s in self.datum.generators if (m := right_mult(x, s)).step is Step.DOWN
        ]
        return down[-1] if self.pivot == "max" else down[0]

    def _build(
        self,
        x: AlcoveElement,
        cache: dict,
        act: Callable[[ModuleVector, int], ModuleVector],
        positive: bool,
    ) -> ModuleVector:
        hit = cache.get(x)
        if hit is not None:
            return hit
        if x.length == 0:
            result = basis_vector(self.parity, x)
        else:
            s, prev = self._pivot(x)
            result = self._correct(act(self._build(prev, cache, act, positive), s), x, cache, act, positive)
        cache[x] = result
        return result

    def _correct(self, vec: ModuleVector, x, cache, act, positive: bool) -> ModuleVector:
        """Remove constant terms below ``x``, longest support element first."""
        pending = {y for y in vec if y != x}
        while pending:
            y = max(pending, key=AlcoveElement.sort_key)
            pending.discard(y)
            c = vec[y].coeff(0)
            if c:
                lower = self._build(y, cache, act, positive)
                vec = vec - lower.scale(c)
                pending.update(z for z in lower if z != y and z in vec)
        for y, p in vec.items():
            if y == x:
                assert p == ONE, f"diagonal coefficient at {x} is {p}"
            elif positive:
                assert p.min_degree() >= 1, f"coefficient at ({y},{x}) is {p}, not in vZ[v]"
            else:
                assert p.max_degree() <= -1, f"coefficient at ({y},{x}) is {p}, not in v^-1 Z[v^-1]"
        return vec

    # -- canonical basis ---------------------------------------------------

    def kl_basis(self, x: AlcoveElement) -> ModuleVector:
        self._check_range(x)
        return self._build(x, self._basis, act_underline_Hs, True)

    def kl_poly(self, y: AlcoveElement, x: AlcoveElement) -> LaurentPoly:
        return self.kl_basis(x)[y]

    def ws_coeffs(self, x: AlcoveElement, s: int) -> dict[AlcoveElement, LaurentPoly]:
        """Coefficients of ``(canonical x) * (H_s + v)`` away from ``xs``; requires ``xs > x`` in W+."""
        move = right_mult(x, s)
        if move.step is not Step.UP:
            raise ValueError(f"{x}*s{s} is {move.step.value}, need UpIn")
        vec = act_underline_Hs(self.kl_basis(x), s)
        return {y: p for y, p in vec.items() if y != move.target}

    def kl_basis_along(self, word: Iterable[int]) -> ModuleVector:
        """Canonical basis element rebuilt along an arbitrary increasing word.

        Each step multiplies by ``H_s + v`` and removes constant terms using
        the table's own lower canonical elements.
        """
        x = self.datum.alcoves.identity
        vec = basis_vector(self.parity, x)
        for s in word:
            move = right_mult(x, s)
            if move.step is not Step.UP:
                raise ValueError(f"word is not an increasing path in W+ at letter {s}")
            x = move.target
            vec = self._correct(act_underline_Hs(vec, s), x, self._basis, act_underline_Hs, True)
        return vec

    # -- Deodhar basis -----------------------------------------------------

    def tilde_basis(self, x: AlcoveElement) -> ModuleVector:
        self._check_range(x)
        return self._build(x, self._tilde, act_tilde_Hs, False)

    def tilde_poly(self, y: AlcoveElement, x: AlcoveElement) -> LaurentPoly:
        return self.tilde_basis(x)[y]

    # -- inverse polynomials -----------------------------------------------

    def _check_range(self, *xs: AlcoveElement) -> None:
        for x in xs:
            if x.length > self.max_len:
                raise RangeError(f"{x} has length {x.length} > table bound {self.max_len}")

    def inverse_column(self, x: AlcoveElement) -> dict[AlcoveElement, LaurentPoly]:
        """``{z: m^{z,x}}`` for all nonzero values with ``l(z) <= max_len``."""
        self._check_range(x)
        col = self._inverse.get(x)
        if col is not None:
            return col
        col = {x: ONE}
        for y in self.elements():
            if y.length <= x.length:
                continue
            acc = ZERO
            for z, m in self.kl_basis(y).items():
                if z != y and z in col:
                    term = col[z] * m
                    acc = acc + term if _sign(y.length + z.length) < 0 else acc - term
            if acc:
                col[y] = acc
        self._inverse[x] = col
        return col

    def inverse_poly(self, z: AlcoveElement, x: AlcoveElement) -> LaurentPoly:
        self._check_range(z, x)
        return self.inverse_column(x).get(z, ZERO)

    def inverse_row(self, z: AlcoveElement) -> dict[AlcoveElement, LaurentPoly]:
        """``{x: m^{z,x}}`` over all ``x`` with nonzero value."""
        self._check_range(z)
        out = {}
        for x in self.elements(z.length):
            p = self.inverse_column(x).get(z)
            if p:
                out[x] = p
        return out

    def materialize(self) -> "KLTable":
        for x in self.elements():
            self.kl_basis(x)
            self.tilde_basis(x)
        for x in self.elements():
            self.inverse_column(x)
        return self

    # -- persistence -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "label": self.datum.label,
            "cartan": [list(r) for r in self.datum.cartan],
            "parity": self.parity.value,
            "max_len": self.max_len,
            "basis": {x.word_str: self._basis[x].to_json() for x in sorted(self._basis)},
            "tilde": {x.word_str: self._tilde[x].to_json() for x in sorted(self._tilde)},
        }

    def load_json(self, data: dict) -> None:
        """Seed the caches from :meth:`to_json` output of a compatible table."""
        if [list(r) for r in self.datum.cartan] != data["cartan"] or data["parity"] != self.parity.value:
            raise ConfigError("cached table does not match this root datum / parity")
        parse = self.datum.alcoves.parse
        for key, cache in (("basis", self._basis), ("tilde", self._tilde)):
            for word, vec in data.get(key, {}).items():
                x = parse(word)
                if x not in cache:
                    cache[x] = ModuleVector.from_json(self.parity, self.datum, vec)

    def save(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), sort_keys=True))

    def load(self, path) -> None:
        self.load_json(json.loads(Path(path).read_text()))


class TablePair:
    """The spherical and antispherical tables over one datum and length bound."""

    def __init__(self, datum: RootDatum, max_len: int, pivot: str = "canonical"):
        self.datum = datum
        self.max_len = max_len
        self.sph = KLTable(datum, Parity.SPHERICAL, max_len, pivot)
        self.asph = KLTable(datum, Parity.ANTISPHERICAL, max_len, pivot)

    def table(self, parity: Parity) -> KLTable:
        return self.sph if parity is Parity.SPHERICAL else self.asph

    def elements(self, max_len: int | None = None) -> list[AlcoveElement]:
        return self.sph.elements(max_len)

    def materialize(self) -> "TablePair":
        self.sph.materialize()
        self.asph.materialize()
        return self


def kl_basis(table: KLTable, x: AlcoveElement) -> ModuleVector:
    return table.kl_basis(x)


def kl_poly(table: KLTable, y: AlcoveElement, x: AlcoveElement) -> LaurentPoly:
    return table.kl_poly(y, x)


def ws_coeffs(table: KLTable, x: AlcoveElement, s: int) -> dict[AlcoveElement, LaurentPoly]:
    return table.ws_coeffs(x, s)


def tilde_basis(table: KLTable, x: AlcoveElement) -> ModuleVector:
    return table.tilde_basis(x)


def inverse_poly(table: KLTable, z: AlcoveElement, x: AlcoveElement) -> LaurentPoly:
    return table.inverse_poly(z, x)
