import json
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import datum, tables
from tiltchar import affine_weyl as aw
from tiltchar import balance as bal
from tiltchar.characters import tilting_layers
from tiltchar.errors import BalanceError, ConfigError

FIGURE_ORDER = [9, 7, 6, 5, 4, 3, 2, 1]
FIGURE_BLOCKS = {
    9: [[9], [7, 6, 3, 1], [2, 5]],
    7: [[7], [5, 4, 2], [3]],
    6: [[6], [5]],
    5: [[5], [3]],
    3: [[3], [2]],
    2: [[2], [1]],
}


def blocks_of(spec):
    return {k: bal.ParityBlock.from_lists(k, rows) for k, rows in spec.items()}


def layers_of(state):
    return {o: dict(layer) for o, layer in state.rows()}


def test_b2_figure_blocks():
    state = bal.balance_run(blocks_of(FIGURE_BLOCKS), 9, order=FIGURE_ORDER)
    assert state.trace == [(9, 0), (7, -1), (6, -1), (5, -2), (3, -1), (2, -2)]
    assert layers_of(state) == {
        -2: {2: 1, 5: 1},
        -1: {7: 1, 1: 1, 6: 1, 3: 2},
        0: {9: 1, 5: 2, 4: 1, 2: 2},
        1: {3: 2, 7: 1, 6: 1, 1: 1},
        2: {2: 1, 5: 1},
    }


def test_figure_file_matches_inline_data(figure_blocks_path):
    data = json.loads(figure_blocks_path.read_text())
    assert data["order"] == [str(x) for x in FIGURE_ORDER]
    assert data["blocks"] == {str(k): [[str(x) for x in row] for row in v] for k, v in FIGURE_BLOCKS.items()}


def test_single_block():
    state = bal.balance_run({"x": bal.ParityBlock.from_lists("x", [["x"]])}, "x")
    assert state.trace == [("x", 0)]
    assert layers_of(state) == {0: {"x": 1}}


@given(st.integers(2, 30))
def test_sl2_chain(K):
    blocks = {k: bal.ParityBlock.from_lists(k, [[k], [k - 1]]) for k in range(1, K + 1)}
    blocks[0] = bal.ParityBlock.from_lists(0, [[0]])
    state = bal.balance_run(blocks, K)
    assert state.trace == [(K, 0), (K - 1, -1)]
    assert layers_of(state) == {-1: {K - 1: 1}, 0: {K: 1, K - 2: 1}, 1: {K - 1: 1}}


def test_errors():
    with pytest.raises(BalanceError) as err:
        bal.balance_run(blocks_of({2: [[2], [1]]}), 2)
    assert err.value.kind == "unknownLabel"
    with pytest.raises(BalanceError) as err:
        bal.balance_run(blocks_of({2: [[2]]}), 3)
    assert err.value.kind == "unknownLabel"
    # 1 heads a block whose own tail names 1 again deeper down: never balances
    runaway = {2: [[2], [1]], 1: [[1], [], [1]]}
    with pytest.raises(BalanceError) as err:
        bal.balance_run(blocks_of(runaway), 2, max_steps=10)
    assert err.value.kind == "maxStepsExceeded"
    assert len(err.value.state.trace) == 11


def test_unbalanced_above():
    state = bal.BalanceState(1)
    state.place(bal.ParityBlock.from_lists(1, [[1]]), 0)
    state.layers[-1] = Counter({0: 1})
    assert state.deficits() == {(0, 1): -1}
    # 2 is pulled up to offset -2 and drags 5 into offset -1 with no mirror below
    blocks = blocks_of({3: [[3], [], [2]], 2: [[2], [5]]})
    with pytest.raises(BalanceError) as err:
        bal.balance_run(blocks, 3)
    assert err.value.kind == "unbalancedAbove"


def test_block_validation():
    with pytest.raises(ConfigError):
        bal.ParityBlock.from_lists(1, [[2]])
    with pytest.raises(ConfigError):
        bal.ParityBlock.from_lists(1, [[1, 1]])
    assert bal.ParityBlock.from_lists(1, [[1], [0], [], []]).depth == 1


def test_order_key_requires_known_labels():
    with pytest.raises(ConfigError):
        bal.balance_run(blocks_of({2: [[2], [1]], 1: [[1]]}), 2, order=[2])


# -- alcove inputs -----------------------------------------------------------


def test_alcove_examples():
    T = tables("A1", 12)
    e = aw.identity(datum("A1"))
    report = bal.balance_from_alcove(T, e)
    assert report.equal and report.state.trace == [(e, 0)]
    A = aw.parse_alcove(datum("A1"), "01")
    report = bal.balance_from_alcove(T, A)
    assert report.equal
    assert [(x.word_str, o) for x, o in report.state.trace] == [("01", 0), ("0", -1)]


@pytest.mark.parametrize("label, max_len", [("A1", 12), ("A2", 7), ("B2", 7), ("G2", 6), ("A3", 4)])
def test_balance_equals_tilting_layers(label, max_len):
    T = tables(label, max_len)
    for A in T.elements():
        report = bal.balance_from_alcove(T, A)
        assert report.error is None
        assert report.equal, A
        assert bal.trace_matches_soergel(T, report)
        layer0 = report.state.layers[0]
        assert layer0[A] == 1
        assert report.character.is_balanced()


def test_balance_is_deterministic():
    T = tables("B2", 7)
    for A in T.elements():
        first = bal.balance_from_alcove(T, A).state.trace
        assert bal.balance_from_alcove(T, A).state.trace == first


def test_order_linearization_does_not_matter_on_b2():
    """Reverse the tie-break inside each length and compare final characters."""
    T = tables("B2", 8)
    index = {x: i for i, x in enumerate(T.elements())}
    flipped = lambda x: (x.length, index[x])
    for A in T.elements():
        report = bal.balance_from_alcove(T, A, order=flipped)
        assert report.error is None and report.equal
        assert report.character == tilting_layers(T, A)


def test_alcove_order_key_prefers_longer_then_shortlex_smaller():
    T = tables("A2", 4)
    key = bal.alcove_order_key(T, 4)
    xs = T.elements()
    ranked = sorted(xs, key=key, reverse=True)
    assert ranked[-1].length == 0
    same = [x for x in ranked if x.length == 4]
    assert [x.word for x in same] == sorted(x.word for x in same)
