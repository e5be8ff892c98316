"""Positive roots, coefficient vectors, graphs, parsing."""

import pytest

from rootsig.errors import UsageError
from rootsig.rootsystem import (
    PositiveRoot,
    coefficient_matrix,
    coefficient_vector,
    parse_root_tuple,
    positive_roots,
    root_tuple,
    serialize_root_tuple,
    to_graph,
)


def test_positive_roots_count_and_order():
    roots = positive_roots(3)
    assert len(roots) == 6
    assert roots == [
        PositiveRoot(1, 2),
        PositiveRoot(1, 3),
        PositiveRoot(1, 4),
        PositiveRoot(2, 3),
        PositiveRoot(2, 4),
        PositiveRoot(3, 4),
    ]


def test_positive_roots_rejects_bad_rank():
    with pytest.raises(UsageError):
        positive_roots(0)


def test_coefficient_vector_consecutive_ones():
    assert coefficient_vector(PositiveRoot(1, 4), 3) == (1, 1, 1)
    assert coefficient_vector(PositiveRoot(2, 3), 3) == (0, 1, 0)
    assert coefficient_vector(PositiveRoot(2, 4), 3) == (0, 1, 1)


def test_coefficient_matrix_shape():
    s = root_tuple(3, [(1, 2), (2, 3), (1, 4), (2, 4)])
    m = coefficient_matrix(s)
    assert (m.rows, m.cols) == (3, 4)
    assert m.column(0) == (1, 0, 0)
    assert m.column(2) == (1, 1, 1)


def test_root_tuple_validation():
    with pytest.raises(UsageError):
        root_tuple(2, [(1, 4)])  # j exceeds n+1
    with pytest.raises(UsageError):
        root_tuple(2, [(2, 2)])  # needs i < j


def test_to_graph_edges():
    s = root_tuple(3, [(1, 2), (2, 3), (1, 4), (2, 4)])
    g = to_graph(s)
    assert g.vertex_count == 4
    assert sorted(g.edges) == [(1, 2), (1, 4), (2, 3), (2, 4)]


def test_parse_serialize_roundtrip():
    s = root_tuple(3, [(1, 2), (2, 3), (1, 4), (2, 4)])
    text = serialize_root_tuple(s)
    assert text == "1,2;2,3;1,4;2,4"
    assert parse_root_tuple(text, 3) == s


def test_parse_rejects_malformed():
    for bad in ("", "1", "1,2;x,3", "0,2", "2,1"):
        with pytest.raises(UsageError):
            parse_root_tuple(bad, 3)
