"""Smoke tests for the selfdesc extension module."""

import pytest

import selfdesc


def test_parse_and_format():
    ds = selfdesc.parse("2020", 4)
    assert ds.digits == [2, 0, 2, 0]
    assert ds.base == 4
    assert ds.text == "2020"
    assert str(ds) == "2020"
    assert len(ds) == 4


def test_values_are_python_ints():
    ds = selfdesc.parse("2020", 4)
    assert ds.value == 136
    big = selfdesc.construct_canonical(36)
    assert big.value == (36 - 4) * 36**35 + 2 * 36**34 + 36**33 + 36**3


def test_digit_string_from_value_round_trip():
    value = 2 * 5**4 + 1 * 5**3 + 2 * 5**2
    ds = selfdesc.digit_string_from_value(value, 5)
    assert ds.text == "21200"
    assert selfdesc.digit_string_from_value(ds.value, 5) == ds


def test_descriptor():
    ds = selfdesc.parse("6210001000", 10)
    assert selfdesc.descriptor_counts(ds) == [6, 2, 1, 0, 0, 0, 1, 0, 0, 0]
    assert selfdesc.is_self_descriptive(ds)
    assert selfdesc.satisfies_sum_lemma(ds)
    assert selfdesc.verify("1210", 4)
    assert not selfdesc.verify("1111", 4)


def test_restricted_partition():
    assert selfdesc.restricted_partition(2) == [2]
    assert selfdesc.restricted_partition(5) == [2, 1, 1, 1]
    with pytest.raises(selfdesc.Error):
        selfdesc.restricted_partition(1)


def test_enumeration_agreement():
    oracle = selfdesc.brute_force_enumerate(4)
    solver, trace = selfdesc.solver_enumerate(4)
    assert [ds.text for ds in oracle.numbers] == ["1210", "2020"]
    assert [ds.text for ds in solver.numbers] == ["1210", "2020"]
    assert oracle.method == "oracle"
    assert oracle.work_count == 19
    assert solver.work_count is None
    assert len(trace.branches) == 5
    labels = [branch.case_label for branch in trace.branches]
    assert labels == ["m=1-impossible", "j1=0", "j1=1", "j1=2/J=1", "j1=2/J!=1"]
    open_candidates = [b.candidate.text for b in trace.branches if b.open]
    assert sorted(open_candidates) == ["1210", "2020"]


def test_construct_canonical():
    assert selfdesc.construct_canonical(10).text == "6210001000"
    with pytest.raises(selfdesc.Error):
        selfdesc.construct_canonical(6)


def test_autobiographical():
    listing = [ds.text for ds in selfdesc.autobiographical(10)]
    assert listing == [
        "1210",
        "2020",
        "21200",
        "3211000",
        "42101000",
        "521001000",
        "6210001000",
    ]
    assert selfdesc.autobiographical(2) == []


def test_cross_check():
    report = selfdesc.cross_check(2, 8)
    assert report.all_agree
    assert [row.oracle_count for row in report.rows] == [0, 0, 2, 1, 0, 1, 1]


def test_errors():
    with pytest.raises(selfdesc.Error):
        selfdesc.parse("9", 4)
    with pytest.raises(selfdesc.Error):
        selfdesc.parse("", 10)
    with pytest.raises(selfdesc.Error):
        selfdesc.DigitString(1, [0])
    with pytest.raises(selfdesc.Error) as excinfo:
        selfdesc.brute_force_enumerate(17)
    assert "601080390" in str(excinfo.value)
    # Error is a ValueError subclass.
    with pytest.raises(ValueError):
        selfdesc.parse("z", 10)
