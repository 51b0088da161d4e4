"""Sparse integer Laurent polynomials in one variable ``v``.

A polynomial is stored as a mapping ``{exponent: coefficient}`` with no zero
coefficients, so structural equality is polynomial equality.
"""
from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """An immutable element of Z[v, v^-1]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = dict(sorted(terms.items()))
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if not q._terms:
            return self
        if not self._terms:
            return q
        out = dict(self._terms)
        for e, c in q._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if not self._terms or not q._terms:
            return ZERO
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in q._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use shift()")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``v**k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    # -- queries ------------------------------------------------------------

    def bar(self) -> "LaurentPoly":
        """The involution v -> v^-1."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def coeff(self, i: int) -> int:
        return self._terms.get(i, 0)

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    def is_self_dual(self) -> bool:
        return self == self.bar()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def min_degree(self) -> int | None:
        return next(iter(self._terms), None)

    def max_degree(self) -> int | None:
        return next(reversed(self._terms), None) if self._terms else None

    def truncated_sum(self, i: int) -> int:
        """Sum of the coefficients of ``v**j`` for ``j <= i``."""
        return sum(c for e, c in self._terms.items() if e <= i)

    def items(self):
        return self._terms.items()

    # -- protocol -----------------------------------------------------------

    def __eq__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._terms == q._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            if e == 0:
                mono = str(abs(c))
            else:
                base = "v" if e == 1 else f"v^{e}"
                mono = base if abs(c) == 1 else f"{abs(c)}*{base}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        head_sign, head = parts[0]
        s = ("-" if head_sign == "-" else "") + head
        for sign, mono in parts[1:]:
            s += f" {sign} {mono}"
        return s

    # -- serialization ------------------------------------------------------

    def to_json(self) -> list[list[int]]:
        """``v + 2v^3`` becomes ``[[1, 1], [3, 2]]``."""
        return [[e, c] for e, c in self._terms.items()]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        return cls((int(e), int(c)) for e, c in data)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
V = LaurentPoly.monomial(1)
V_INV = LaurentPoly.monomial(-1)
QUANTUM_TWO = V + V_INV


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


def coeff(p: LaurentPoly, i: int) -> int:
    return p.coeff(i)


def eval_at_one(p: LaurentPoly) -> int:
    return p.eval_at_one()


def is_self_dual(p: LaurentPoly) -> bool:
    return p.is_self_dual()
