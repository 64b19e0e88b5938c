import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from detcert.errors import BadSymbol, NonSquare, ParseError
from detcert.exact import Matrix01, MatrixPM1
from detcert.matio import export_pbm, parse_matrix, serialize_matrix


def test_parse_examples():
    assert parse_matrix(b"10\n01\n", "grid01") == [[1, 0], [0, 1]]
    assert parse_matrix(b"++\n+-\n", "gridpm") == [[1, 1], [1, -1]]
    assert parse_matrix(b"P1\n2 2\n1 0\n0 1\n", "pbm") == [[1, 0], [0, 1]]
    assert parse_matrix(b"P1\n2 2\n1 1\n1 0\n", "pbm", "pm1") == [[1, 1], [1, -1]]


def test_pbm_variants():
    text = "P1\n# a comment\n3 3\n100\n01 0\n0\n0 1 # trailing\n"
    assert parse_matrix(text, "pbm") == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert parse_matrix("P1 1 1 1", "pbm") == [[1]]
    assert parse_matrix(b"10\r\n01\r\n", "grid01") == [[1, 0], [0, 1]]


def test_export_examples():
    assert export_pbm(Matrix01([[1, 0], [0, 1]])) == b"P1\n2 2\n1 0\n0 1\n"
    assert export_pbm(MatrixPM1([[1, 1], [1, -1]])) == b"P1\n2 2\n1 1\n1 0\n"
    assert export_pbm(Matrix01([[0]])) == b"P1\n1 1\n0\n"


@pytest.mark.parametrize(
    "data, kind, exc, line, column",
    [
        (b"10\n0x\n", "grid01", BadSymbol, 2, 2),
        (b"10\n011\n", "grid01", NonSquare, 2, None),
        (b"101\n010\n", "grid01", NonSquare, None, None),
        (b"+-\n+0\n", "gridpm", BadSymbol, 2, 2),
        (b"", "grid01", ParseError, 1, None),
        (b"10\n\n01\n", "grid01", ParseError, 2, None),
        (b"P2\n1 1\n1\n", "pbm", ParseError, 1, 1),
        (b"P1\n2 3\n", "pbm", NonSquare, None, None),
        (b"P1\n2 2\n1 0 1\n", "pbm", ParseError, None, None),
        (b"P1\n1 1\n1 1\n", "pbm", ParseError, 3, 3),
        (b"P1\n2 2\n1 2\n0 1\n", "pbm", BadSymbol, 3, 3),
    ],
)
def test_parse_errors(data, kind, exc, line, column):
    with pytest.raises(exc) as info:
        parse_matrix(data, kind)
    assert info.value.line == line
    assert info.value.column == column


def test_unknown_format():
    with pytest.raises(ValueError):
        parse_matrix(b"1\n", "csv")


matrices01 = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=n, max_size=n)
).map(Matrix01)
matricespm = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.sampled_from((-1, 1)), min_size=n, max_size=n),
                       min_size=n, max_size=n)
).map(MatrixPM1)


@settings(max_examples=200)
@given(matrices01)
def test_round_trip_01(m):
    assert parse_matrix(serialize_matrix(m, "grid01"), "grid01") == m
    assert parse_matrix(serialize_matrix(m, "pbm"), "pbm", "01") == m


@settings(max_examples=200)
@given(matricespm)
def test_round_trip_pm(m):
    assert parse_matrix(serialize_matrix(m, "gridpm"), "gridpm") == m
    assert parse_matrix(export_pbm(m, "pm1"), "pbm", "pm1") == m
