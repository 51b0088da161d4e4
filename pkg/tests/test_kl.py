import pytest

from conftest import datum, tables
from oracles import brute_force_inverse, brute_force_self_dual
from tiltchar import affine_weyl as aw
from tiltchar.errors import RangeError
from tiltchar.hecke import ModuleVector, Parity, dualize
from tiltchar.kl import KLTable, TablePair
from tiltchar.laurent import ONE, V, ZERO, LaurentPoly

SPH, ASPH = Parity.SPHERICAL, Parity.ANTISPHERICAL


def el(label, w):
    return aw.parse_alcove(datum(label), w)


def as_dict(label, data):
    return {el(label, w): p for w, p in data.items()}


def test_a1_examples():
    T = tables("A1", 6)
    assert dict(T.asph.kl_basis(el("A1", "e")).items()) == as_dict("A1", {"e": ONE})
    assert dict(T.asph.kl_basis(el("A1", "01")).items()) == as_dict("A1", {"01": ONE, "0": V})
    assert dict(T.sph.kl_basis(el("A1", "01")).items()) == as_dict("A1", {"01": ONE, "0": V, "e": V * V})
    assert T.asph.kl_poly(el("A1", "e"), el("A1", "01")) == ZERO
    assert T.sph.kl_poly(el("A1", "e"), el("A1", "01")) == V * V
    assert T.sph.kl_poly(el("A1", "010"), el("A1", "010")) == ONE


def test_ws_coeffs_examples():
    T = tables("A1", 6)
    assert T.sph.ws_coeffs(el("A1", "e"), 0) == as_dict("A1", {"e": V})
    assert T.sph.ws_coeffs(el("A1", "0"), 1) == as_dict("A1", {"0": V, "e": V * V + ONE})
    with pytest.raises(ValueError):
        T.sph.ws_coeffs(el("A1", "0"), 0)


def test_tilde_and_inverse_examples():
    T = tables("A1", 6)
    assert dict(T.asph.tilde_basis(el("A1", "e")).items()) == as_dict("A1", {"e": ONE})
    v_inv = LaurentPoly({-1: 1})
    assert dict(T.asph.tilde_basis(el("A1", "0")).items()) == as_dict("A1", {"0": ONE, "e": -v_inv})
    assert T.sph.inverse_poly(el("A1", "0"), el("A1", "e")) == V
    assert T.sph.inverse_poly(el("A1", "01"), el("A1", "e")) == ZERO
    for x in T.elements():
        assert T.sph.inverse_poly(x, x) == ONE


@pytest.mark.parametrize("label, max_len", [("A1", 7), ("A2", 5), ("B2", 5), ("G2", 5)])
def test_against_brute_force_solver(label, max_len):
    T = TablePair(datum(label), max_len)
    elements = T.elements()
    for table in (T.sph, T.asph):
        for x in elements:
            assert brute_force_self_dual(table.parity, x, elements) == dict(table.kl_basis(x).items())
            assert brute_force_self_dual(table.parity, x, elements, positive=False) == dict(
                table.tilde_basis(x).items()
            )
        inverse = brute_force_inverse({x: dict(table.kl_basis(x).items()) for x in elements}, elements)
        for x in elements:
            for z in elements:
                assert table.inverse_poly(z, x) == inverse.get((z, x), ZERO)


@pytest.mark.parametrize("label, max_len", [("A2", 7), ("B2", 7), ("G2", 7), ("A3", 4)])
def test_self_duality_and_degrees(label, max_len):
    T = tables(label, max_len)
    for table in (T.sph, T.asph):
        for x in T.elements():
            canon, tilde = table.kl_basis(x), table.tilde_basis(x)
            assert dualize(canon) == canon and dualize(tilde) == tilde
            for y, p in canon.items():
                assert p == ONE if y == x else p.min_degree() >= 1
                assert y.length <= x.length
                assert y == x or p.max_degree() <= x.length - y.length
            for y, p in tilde.items():
                assert p == ONE if y == x else p.max_degree() <= -1


@pytest.mark.parametrize("pivot", ["max", "min"])
def test_pivot_rules_agree(pivot):
    ref = tables("B2", 7)
    other = TablePair(datum("B2"), 7, pivot=pivot)
    for x in ref.elements():
        assert other.asph.kl_basis(x) == ref.asph.kl_basis(x)
        assert other.sph.kl_basis(x) == ref.sph.kl_basis(x)
        assert other.sph.tilde_basis(x) == ref.sph.tilde_basis(x)


def test_memoization_returns_identical_objects():
    T = tables("B2", 6)
    x = el("B2", "0102")
    assert T.asph.kl_basis(x) is T.asph.kl_basis(x)
    assert T.sph.inverse_column(x) is T.sph.inverse_column(x)


def test_range_errors():
    T = TablePair(datum("A1"), 2)
    far = el("A1", "0101")
    with pytest.raises(RangeError):
        T.asph.kl_basis(far)
    with pytest.raises(RangeError):
        T.sph.inverse_poly(far, el("A1", "e"))


def test_persistence_round_trip(tmp_path):
    T = TablePair(datum("G2"), 5).materialize()
    path = tmp_path / "g2.json"
    T.asph.save(path)
    fresh = KLTable(datum("G2"), ASPH, 5)
    fresh.load(path)
    for x in T.elements():
        assert fresh._basis[x] == T.asph.kl_basis(x)
        assert fresh.tilde_basis(x) == T.asph.tilde_basis(x)


def test_kl_basis_along_rejects_bad_words():
    T = tables("A1", 6)
    with pytest.raises(ValueError):
        T.asph.kl_basis_along([1])
    assert T.asph.kl_basis_along([0, 1]) == T.asph.kl_basis(el("A1", "01"))
    assert isinstance(T.asph.kl_basis_along([]), ModuleVector)
