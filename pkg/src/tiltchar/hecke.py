"""Vectors in the spherical module M and the antispherical module N.

Both modules have the standard basis indexed by W+.  The right action of
``H_s`` on a basis vector depends only on whether ``xs`` is a longer
element of W+, a shorter one, or leaves W+; the two modules differ only in
the last case.
"""
from __future__ import annotations

import enum
from typing import Iterable, Mapping

from .affine_weyl import AlcoveElement, Step, right_mult
from .laurent import ONE, QUANTUM_TWO, V, V_INV, ZERO, LaurentPoly


class Parity(enum.Enum):
    SPHERICAL = "sph"
    ANTISPHERICAL = "asph"

    @classmethod
    def parse(cls, text: str) -> "Parity":
        t = text.strip().lower()
        if t in ("sph", "spherical", "m"):
            return cls.SPHERICAL
        if t in ("asph", "antispherical", "n"):
            return cls.ANTISPHERICAL
        raise ValueError(f"unknown parity {text!r}")

    @property
    def other(self) -> "Parity":
        return Parity.ANTISPHERICAL if self is Parity.SPHERICAL else Parity.SPHERICAL

    @property
    def out_scalar(self) -> LaurentPoly:
        """Image of ``H_s + v`` under the parabolic character for ``s`` in the finite Weyl group."""
        return QUANTUM_TWO if self is Parity.SPHERICAL else ZERO


class ModuleVector:
    """A finitely supported W+-indexed vector of Laurent polynomials."""

    __slots__ = ("parity", "_entries")

    def __init__(self, parity: Parity, entries: Mapping[AlcoveElement, LaurentPoly] | None = None):
        self.parity = parity
        self._entries = {x: p for x, p in (entries or {}).items() if p}

    @classmethod
    def _raw(cls, parity, entries):
        m = cls.__new__(cls)
        m.parity = parity
        m._entries = entries
        return m

    @property
    def entries(self) -> dict[AlcoveElement, LaurentPoly]:
        return dict(self._entries)

    def __getitem__(self, x: AlcoveElement) -> LaurentPoly:
        return self._entries.get(x, ZERO)

    def __contains__(self, x):
        return x in self._entries

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def items(self):
        return self._entries.items()

    def support(self) -> list[AlcoveElement]:
        return sorted(self._entries, key=AlcoveElement.sort_key)

    def _check(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        if other.parity is not self.parity:
            raise ValueError("cannot combine spherical and antispherical vectors")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return ModuleVector._raw(self.parity, _accumulate(self._entries, other._entries.items()))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return ModuleVector._raw(
            self.parity, _accumulate(self._entries, ((x, -p) for x, p in other._entries.items()))
        )

    def __neg__(self):
        return ModuleVector._raw(self.parity, {x: -p for x, p in self._entries.items()})

    def scale(self, c: LaurentPoly | int) -> "ModuleVector":
        if isinstance(c, int):
            c = LaurentPoly.const(c)
        if not c:
            return ModuleVector(self.parity)
        return ModuleVector._raw(self.parity, {x: c * p for x, p in self._entries.items()})

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.parity is other.parity and self._entries == other._entries

    def __hash__(self):
        return hash((self.parity, frozenset(self._entries.items())))

    def is_zero(self) -> bool:
        return not self._entries

    def __repr__(self):
        body = ", ".join(f"{x}: {self._entries[x]}" for x in reversed(self.support()))
        return f"ModuleVector({self.parity.value}, {{{body}}})"

    def to_json(self) -> dict[str, list[list[int]]]:
        return {x.word_str: self._entries[x].to_json() for x in self.support()}

    @classmethod
    def from_json(cls, parity: Parity, datum, data: Mapping[str, list]) -> "ModuleVector":
        return cls(parity, {datum.alcoves.parse(w): LaurentPoly.from_json(p) for w, p in data.items()})


def _accumulate(base: dict, items: Iterable) -> dict:
    out = dict(base)
    for x, p in items:
        q = out.get(x, ZERO) + p
        if q:
            out[x] = q
        else:
            out.pop(x, None)
    return out


def basis_vector(parity: Parity, x: AlcoveElement) -> ModuleVector:
    return ModuleVector._raw(parity, {x: ONE})


def _act(m: ModuleVector, s: int, up: LaurentPoly, down: LaurentPoly, out: LaurentPoly) -> ModuleVector:
    """Apply ``x -> xs + up*x`` / ``xs + down*x`` / ``out*x`` linearly."""
    contributions = []
    for x, p in m.items():
        move = right_mult(x, s)
        if move.step is Step.UP:
            contributions += [(move.target, p), (x, up * p)]
        elif move.step is Step.DOWN:
            contributions += [(move.target, p), (x, down * p)]
        else:
            contributions.append((x, out * p))
    return ModuleVector._raw(m.parity, _accumulate({}, contributions))


def act_underline_Hs(m: ModuleVector, s: int) -> ModuleVector:
    """Right action of ``H_s + v``."""
    return _act(m, s, V, V_INV, m.parity.out_scalar)


def act_tilde_Hs(m: ModuleVector, s: int) -> ModuleVector:
    """Right action of ``H_s - v^-1``, i.e. of ``(H_s + v) - (v + v^-1)``."""
    return _act(m, s, -V_INV, -V, m.parity.out_scalar - QUANTUM_TWO)


def act_Hs(m: ModuleVector, s: int) -> ModuleVector:
    """Right action of ``H_s`` itself."""
    return _act(m, s, ZERO, V_INV - V, m.parity.out_scalar - V)


def act_Hs_inverse(m: ModuleVector, s: int) -> ModuleVector:
    """Right action of ``H_s^-1 = H_s + v - v^-1``."""
    return _act(m, s, V - V_INV, ZERO, m.parity.out_scalar - V_INV)


def _dual_cache(datum) -> dict:
    cache = getattr(datum, "_dual_cache", None)
    if cache is None:
        cache = datum._dual_cache = {}
    return cache


def dual_of_basis(parity: Parity, x: AlcoveElement, word: Iterable[int] | None = None) -> ModuleVector:
    """``d(M_x)`` (or ``d(N_x)``) expanded in the standard basis.

    With ``word=None`` the canonical word of ``x`` is used and results are
    memoized.  Passing another word (every prefix of which must be a longer
    element of W+ than the previous one) recomputes along that word.
    """
    if word is not None:
        letters = list(word)
        y = x.datum.alcoves.identity
        vec = basis_vector(parity, y)
        for s in letters:
            move = right_mult(y, s)
            if move.step is not Step.UP:
                raise ValueError(f"word {letters} is not an increasing path in W+")
            y = move.target
            vec = act_Hs_inverse(vec, s)
        if y != x:
            raise ValueError(f"word {letters} does not spell {x}")
        return vec

    cache = _dual_cache(x.datum)
    key = (parity, x)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if x.length == 0:
        result = basis_vector(parity, x)
    else:
        s = x.word[-1]
        prev = right_mult(x, s).target
        # M_x = M_{x'} H_s, and d(H_s) = H_s^-1
        result = act_Hs_inverse(dual_of_basis(parity, prev), s)
    cache[key] = result
    return result


def dualize(m: ModuleVector) -> ModuleVector:
    terms = []
    for x, p in m.items():
        pb = p.bar()
        terms += [(y, pb * q) for y, q in dual_of_basis(m.parity, x).items()]
    return ModuleVector._raw(m.parity, _accumulate({}, terms))


def is_self_dual(m: ModuleVector) -> bool:
    return dualize(m) == m
