"""Batch invariant checks over every alcove up to a length bound."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .affine_weyl import AlcoveElement
from .balance import balance_from_alcove, trace_matches_soergel
from .characters import tilting_column
from .hecke import dualize
from .kl import TablePair
from .laurent import ONE, ZERO, LaurentPoly


@dataclass
class PropertyResult:
    name: str
    passed: int = 0
    failed: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, detail: Callable[[], dict]) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.counterexamples) < 5:
                self.counterexamples.append(detail())


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def check_kl_self_duality(tables: TablePair) -> PropertyResult:
    res = PropertyResult("canonical and tilde bases self-dual")
    for table in (tables.sph, tables.asph):
        for x in table.elements():
            for name, vec in (("canonical", table.kl_basis(x)), ("tilde", table.tilde_basis(x))):
                res.record(dualize(vec) == vec, lambda: {"x": x.word_str, "parity": table.parity.value, "basis": name})
    return res


def check_degrees(tables: TablePair) -> PropertyResult:
    res = PropertyResult("degree constraints")
    for table in (tables.sph, tables.asph):
        for x in table.elements():
            for y, p in table.kl_basis(x).items():
                ok = p == ONE if y == x else p.min_degree() >= 1
                res.record(ok, lambda: {"x": x.word_str, "y": y.word_str, "poly": p.to_json()})
            for y, p in table.tilde_basis(x).items():
                ok = p == ONE if y == x else p.max_degree() <= -1
                res.record(ok, lambda: {"x": x.word_str, "y": y.word_str, "tilde": p.to_json()})
    return res


def check_deodhar(tables: TablePair) -> PropertyResult:
    """Tilde coefficients are signed bars of the opposite parity's polynomials."""
    res = PropertyResult("Deodhar identities")
    for table, other in ((tables.sph, tables.asph), (tables.asph, tables.sph)):
        for x in table.elements():
            tilde = table.tilde_basis(x)
            canon = other.kl_basis(x)
            for y in set(tilde) | set(canon):
                expected = canon[y].bar() * _sign(x.length + y.length)
                res.record(
                    tilde[y] == expected,
                    lambda: {"parity": table.parity.value, "x": x.word_str, "y": y.word_str},
                )
    return res


def orthogonality_residual(table, x: AlcoveElement, y: AlcoveElement) -> LaurentPoly:
    acc = ZERO
    col = table.inverse_column(x)
    for z, m in table.kl_basis(y).items():
        if z in col:
            acc = acc + col[z] * m * _sign(z.length + x.length)
    return acc


def check_orthogonality(tables: TablePair) -> PropertyResult:
    res = PropertyResult("orthogonality of inverse polynomials")
    for table in (tables.sph, tables.asph):
        elements = table.elements()
        for x in elements:
            for y in elements:
                r = orthogonality_residual(table, x, y)
                res.record(r == (ONE if x == y else ZERO), lambda: {"x": x.word_str, "y": y.word_str, "residual": r.to_json()})
    return res


def check_tilting_self_duality(tables: TablePair) -> PropertyResult:
    res = PropertyResult("t_{B,A} self-dual")
    for A in tables.elements():
        column = tilting_column(tables, A)
        for B in tables.elements():
            t = column.get(B, ZERO)
            res.record(t.is_self_dual(), lambda: {"A": A.word_str, "B": B.word_str, "t": t.to_json()})
    return res


def check_balance(tables: TablePair) -> PropertyResult:
    res = PropertyResult("balancing algorithm equals t-layers")
    for A in tables.elements():
        report = balance_from_alcove(tables, A)
        ok = report.equal and trace_matches_soergel(tables, report)
        res.record(ok, lambda: {"A": A.word_str, "error": str(report.error) if report.error else None})
    return res


def check_a1_closed_forms(tables: TablePair) -> PropertyResult:
    res = PropertyResult("A1 closed forms")
    elements = tables.elements()
    for x in elements:
        for y in elements:
            d = x.length - y.length
            m = tables.sph.kl_poly(y, x)
            n = tables.asph.kl_poly(y, x)
            inv = tables.sph.inverse_poly(x, y)
            want_m = LaurentPoly.monomial(d) if d >= 0 else ZERO
            want_n = ONE if d == 0 else LaurentPoly.monomial(1) if d == 1 else ZERO
            res.record(m == want_m and n == want_n and inv == want_n, lambda: {"x": x.word_str, "y": y.word_str})
    return res


def sweep(tables: TablePair) -> Iterator[PropertyResult]:
    yield check_kl_self_duality(tables)
    yield check_degrees(tables)
    yield check_deodhar(tables)
    yield check_orthogonality(tables)
    yield check_tilting_self_duality(tables)
    yield check_balance(tables)
    if tables.datum.cartan == ((2,),):
        yield check_a1_closed_forms(tables)
