import pytest
from hypothesis import assume, given, settings, strategies as st

from reflexpoly.errors import ParseError, WrongDimension
from reflexpoly.lattice import affine_rank
from reflexpoly.polyio import dumps, loads, parse_points, parse_vector


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9)),
                min_size=4, max_size=10, unique=True))
def test_round_trip(points):
    assume(affine_rank(points) == 3)
    from reflexpoly.polytope import Polytope

    p = Polytope(points)
    q = loads(dumps(p, comment="round trip"))
    assert q.vertices == p.vertices


def test_comments_and_blank_lines():
    d, pts = parse_points("# header\n\n2 3  # dims\n1 0\n0 1 # vertex\n-1 -1\n")
    assert d == 2 and pts == [(1, 0), (0, 1), (-1, -1)]


@pytest.mark.parametrize("text, line, column", [
    ("", 1, 1),
    ("2\n", 1, 2),
    ("2 3\n1 0\n0 x\n-1 -1\n", 3, 3),
    ("2 3\n1 0\n0 1\n", 4, 1),
    ("2 2\n1 0 5\n0 1\n", 2, 5),
])
def test_parse_errors_carry_positions(text, line, column):
    with pytest.raises(ParseError) as err:
        parse_points(text)
    assert (err.value.line, err.value.column) == (line, column)
    assert err.value.exit_code == 2


def test_parse_vector():
    assert parse_vector("1, -2,3") == (1, -2, 3)
    with pytest.raises(WrongDimension):
        parse_vector("1,2", 3)
    with pytest.raises(ParseError):
        parse_vector("1,a")
