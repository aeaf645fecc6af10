import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SHI_ROWS
from ratcat.tableau import StaircaseTableau


@st.composite
def tableaux(draw):
    n = draw(st.integers(1, 6))
    rows = tuple(tuple(draw(st.lists(st.integers(0, 5), min_size=n - i, max_size=n - i)))
                 for i in range(1, n))
    return StaircaseTableau(n, rows)


def test_indexing():
    t = StaircaseTableau(7, SHI_ROWS)
    assert t[1, 6] == 3 and t[6, 7] == 2
    assert t.total() == sum(map(sum, SHI_ROWS))
    with pytest.raises(KeyError):
        t[3, 3]


def test_shape_validation():
    with pytest.raises(ValueError, match="row 1"):
        StaircaseTableau(3, ((1,), (1,)))
    with pytest.raises(ValueError, match="negative"):
        StaircaseTableau(2, ((-1,),))


@given(tableaux())
def test_transpose_is_involution(t):
    assert t.transpose().transpose() == t
    n = t.n
    for (i, j), v in t.items():
        assert t.transpose()[n + 1 - j, n + 1 - i] == v


@given(tableaux())
def test_serialisation_round_trips(t):
    assert StaircaseTableau.from_json(t.to_json()) == t
    assert StaircaseTableau.from_text(t.to_text(), t.n) == t
    assert json.loads(t.to_json())["n"] == t.n


@given(tableaux())
def test_entrywise_order(t):
    assert t.entrywise_le(t)
