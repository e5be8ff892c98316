"""Deformation matrices for the named cone families."""

import pytest

from rootsig.deformation import (
    CONE_LABEL,
    build_catalan,
    build_family,
    build_general,
    build_ish,
    build_linial,
    build_shi,
    build_uniform,
    decone,
    to_csv,
    to_json_object,
)
from rootsig.errors import HypothesisError, UsageError
from rootsig.rootsystem import PositiveRoot


def _columns(dm):
    return [dm.matrix.column(j) for j in range(dm.p)]


def test_uniform_01_rank2_exact():
    dm = build_uniform(2, 0, 1)
    assert dm.labels == ("1,2|0", "1,2|1", "1,3|0", "1,3|1", "2,3|0", "2,3|1", CONE_LABEL)
    assert _columns(dm) == [
        (1, 0, 0),
        (1, 0, -1),
        (1, 1, 0),
        (1, 1, -1),
        (0, 1, 0),
        (0, 1, -1),
        (0, 0, 1),
    ]


def test_uniform_01_matches_display_as_multiset():
    # the same seven columns, listed in a different order elsewhere
    display = {
        (1, 0, -1),
        (1, 0, 0),
        (0, 1, -1),
        (0, 1, 0),
        (1, 1, -1),
        (1, 1, 0),
        (0, 0, 1),
    }
    assert set(_columns(build_uniform(2, 0, 1))) == display


def test_shi_equals_uniform_interval():
    assert _columns(build_shi(2)) == _columns(build_uniform(2, 0, 1))
    assert _columns(build_shi(3, 2)) == _columns(build_uniform(3, -1, 2))
    assert _columns(build_catalan(2)) == _columns(build_uniform(2, -1, 1))
    assert _columns(build_linial(2)) == _columns(build_uniform(2, 1, 1))


def test_ish_columns():
    dm = build_ish(2)
    assert dm.labels == ("1,2|0", "1,2|1", "1,3|0", "1,3|1", "1,3|2", "2,3|0", CONE_LABEL)
    assert _columns(dm) == [
        (1, 0, 0),
        (1, 0, -1),
        (1, 1, 0),
        (1, 1, -1),
        (1, 1, -2),
        (0, 1, 0),
        (0, 0, 1),
    ]


def test_ish_column_count_matches_shi():
    # ish trades the shifted columns one for one with shi's
    for n in (2, 3, 4):
        assert build_ish(n).p == build_shi(n).p


def test_cone_column_is_last():
    for dm in (build_shi(3), build_ish(3), build_catalan(2), build_uniform(2, -2, 2)):
        assert dm.cone_index() == dm.p - 1
        assert dm.matrix.column(dm.p - 1) == (0,) * dm.n + (1,)
        assert dm.labels[-1] == CONE_LABEL


def test_label_parsing_roundtrip():
    dm = build_uniform(2, -1, 2)
    for j in range(dm.p - 1):
        root = dm.root_of_column(j)
        shift = dm.shift_of_column(j)
        assert isinstance(root, PositiveRoot)
        assert -1 <= shift <= 2
        assert dm.labels[j] == f"{root.i},{root.j}|{shift}"


def test_build_general_sorted_dedup():
    # one shift set per root in lexicographic order, duplicates collapse
    dm = build_general(2, [[1, 0, 1], [2], [0]])
    assert dm.labels == ("1,2|0", "1,2|1", "1,3|2", "2,3|0", CONE_LABEL)
    with pytest.raises(UsageError):
        build_general(2, [[0], [1]])
    with pytest.raises(UsageError):
        build_general(2, [[0], [], [1]])


def test_build_errors():
    with pytest.raises(HypothesisError):
        build_uniform(2, 2, 1)  # empty interval
    with pytest.raises(HypothesisError):
        build_shi(2, 0)
    with pytest.raises(UsageError):
        build_family("uniform", 2)  # interval flags missing
    with pytest.raises(UsageError):
        build_family("nope", 2)


def test_json_object_shape():
    dm = build_shi(2)
    obj = to_json_object(dm)
    assert obj["n"] == 2 and obj["p"] == 7 and obj["rows"] == 3
    assert len(obj["entries"]) == 21
    assert obj["labels"][-1] == CONE_LABEL
    # entries are row-major
    assert obj["entries"][:7] == [1, 1, 1, 1, 0, 0, 0]


def test_csv_rows():
    lines = to_csv(build_shi(2)).strip().splitlines()
    assert lines == ["1,1,1,1,0,0,0", "0,0,1,1,1,1,0", "0,-1,0,-1,0,-1,1"]


def test_decone_shape_and_rhs():
    mat, rhs = decone(build_shi(2))
    assert (mat.rows, mat.cols) == (2, 6)
    assert rhs == (0, 1, 0, 1, 0, 1)
    # root parts survive unchanged
    assert mat.column(1) == (1, 0)
    assert mat.column(3) == (1, 1)
