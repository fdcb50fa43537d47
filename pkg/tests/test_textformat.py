import pytest
from hypothesis import given, settings, strategies as st

from lsalg.algebra import FiniteLSAlgebra
from lsalg.errors import ParseError
from lsalg.fixtures import C3, LOLLI, SHIFT2
from lsalg.textformat import (
    dump_algebra,
    dump_boundary_set,
    parse_algebra,
    parse_boundary_set,
    parse_document,
    parse_partition,
)


@pytest.mark.parametrize("alg", [C3, LOLLI, SHIFT2])
def test_round_trip_fixtures(alg):
    assert parse_algebra(dump_algebra(alg)) == alg


@st.composite
def algebras(draw):
    n = draw(st.integers(1, 6))
    k = draw(st.integers(1, 3))
    trans = tuple(tuple(draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))) for _ in range(k))
    return FiniteLSAlgebra(n, draw(st.integers(0, n - 1)), ("a", "b", "c")[:k], trans)


@given(algebras())
@settings(max_examples=100)
def test_round_trip_property(alg):
    assert parse_algebra(dump_algebra(alg)) == alg
    text = dump_algebra(alg, classes=[0] * alg.n)
    assert parse_document(text) == (alg, (0,) * alg.n)


def test_comments_and_blank_lines():
    text = "# cyclic\n\nstates: 3  # three\nbase: 0\nalphabet: s\ntrans s: 1 2 0\n"
    assert parse_algebra(text) == C3


@pytest.mark.parametrize(
    "text, line",
    [
        ("states: 3\nbase: 0\nalphabet: s\ntrans s: 1 2\n", 4),
        ("states: 3\nbase: 0\nalphabet: s\ntrans s: 1 2 3\n", 4),
        ("states: 3\nstates: 3\n", 2),
        ("states: x\nbase: 0\nalphabet: s\ntrans s: 0\n", 1),
        ("states: 3\nbase: 0\nalphabet: s\ntrans t: 1 2 0\n", 4),
        ("states: 3\nfoo: 1\n", 2),
        ("states 3\n", 1),
        ("states: 3\nbase: 5\nalphabet: s\ntrans s: 1 2 0\n", 2),
        ("states: 3\nbase: 0\nalphabet: s\ntrans s: 1 2 0\nclasses: 0 1\n", 5),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_algebra(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_missing_directive():
    with pytest.raises(ParseError):
        parse_algebra("states: 3\nbase: 0\nalphabet: s\n")


def test_partition_file():
    assert parse_partition("# mod 3\nclasses: 0 1 2 0 1 2\n") == (0, 1, 2, 0, 1, 2)
    with pytest.raises(ParseError):
        parse_partition("")
    with pytest.raises(ParseError) as info:
        parse_partition("classes: 0\nclasses: 1\n")
    assert info.value.line == 2


def test_boundary_set_file():
    words = parse_boundary_set("-\na\nb a\n")
    assert words == [(), ("a",), ("b", "a")]
    assert parse_boundary_set(dump_boundary_set(words)) == words
    with pytest.raises(ParseError) as info:
        parse_boundary_set("# c\na\n-\n")
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_boundary_set("")
