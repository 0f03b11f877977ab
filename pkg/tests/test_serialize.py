from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rootableaux.errors import InvalidShape, NotDominant
from rootableaux.roots import build_root_system
from rootableaux.serialize import (
    dumps,
    parse_rational,
    parse_simple_coords,
    parse_vector,
    shape_from_json,
    shape_to_json,
    tableau_set_to_json,
)
from rootableaux.shapes import dominant_grid, enumerate_standard_tableaux, nonempty_labels, placed_shape


def test_parse_vector():
    assert parse_vector("0, 1/2,-3") == (0, Fraction(1, 2), -3)
    with pytest.raises(InvalidShape):
        parse_rational("x")


def test_parse_simple_coords():
    R = build_root_system("C", 2)
    assert parse_simple_coords(R, "0,1;1,1") == [(-1, 1), (1, 1)]
    with pytest.raises(InvalidShape):
        parse_simple_coords(R, "1,1,1")
    with pytest.raises(InvalidShape):
        parse_simple_coords(R, "2,2")


def test_shape_json_layout():
    R = build_root_system("C", 2)
    data = shape_to_json(placed_shape(R, (0, 1), [(-1, 1), (1, 1)]))
    assert data == {"type": "C", "rank": 2, "gamma": ["0", "1"], "J": [[-1, 1], [1, 1]]}


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2), ("C", 3), ("D", 3)])
def test_round_trip_every_grid_shape(family, rank):
    R = build_root_system(family, rank)
    for gamma in dominant_grid(R, (0, Fraction(1, 2), 1)):
        for J in nonempty_labels(R, gamma):
            shape = placed_shape(R, gamma, J)
            assert shape_from_json(dumps(shape_to_json(shape))) == shape


@given(st.lists(st.fractions(-4, 4, max_denominator=6), min_size=3, max_size=3))
def test_round_trip_any_weight(xs):
    R = build_root_system("B", 3)
    shape = placed_shape(R, xs, dominant=False)
    back = shape_from_json(shape_to_json(shape), dominant=False)
    assert back.gamma == shape.gamma


def test_bad_json():
    with pytest.raises(InvalidShape):
        shape_from_json("{not json")
    with pytest.raises(InvalidShape):
        shape_from_json({"type": "A"})
    with pytest.raises(NotDominant):
        shape_from_json({"type": "A", "rank": 1, "gamma": ["1", "0"]})


def test_tableau_set_json():
    R = build_root_system("C", 2)
    ts = enumerate_standard_tableaux(placed_shape(R, (0, 1), [(-1, 1)]))
    data = tableau_set_to_json(ts)
    assert data["count"] == 2 and data["elements"] == ["(2,1)", "(2,-1)"]
