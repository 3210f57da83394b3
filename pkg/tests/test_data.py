"""Containers, CSV round trips, and the built-in datasets."""

import math
import tempfile
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from resamplekit.data import (
    GroupedSample,
    PairedSample,
    PopulationVector,
    Sample,
    fixtures,
    get_fixture,
    load_csv,
    load_paired_csv,
    write_csv,
)


def test_sample_basics():
    s = Sample((5, 5, 5))
    assert s.n == 3
    assert s.mean == 5
    assert s.values == (5.0, 5.0, 5.0)


def test_sample_rejects_empty_and_nonfinite():
    with pytest.raises(ValueError):
        Sample(())
    with pytest.raises(ValueError):
        Sample((1.0, float("nan")))
    with pytest.raises(ValueError):
        Sample((1.0, float("inf")))


def test_grouped_sample_group_order_is_first_appearance():
    g = GroupedSample.from_rows([(1, "b"), (2, "a"), (3, "b")])
    assert g.group_names == ("b", "a")
    assert g.group_values("b") == (1.0, 3.0)
    assert g.group_count("a") == 1
    assert g.group_mean("b") == 2.0


def test_grouped_sample_needs_exactly_two_groups():
    with pytest.raises(ValueError):
        GroupedSample.from_rows([(1, "a"), (2, "a")])
    with pytest.raises(ValueError):
        GroupedSample.from_rows([(1, "a"), (2, "b"), (3, "c")])
    with pytest.raises(ValueError):
        GroupedSample(values=(1.0, 2.0), groups=("a",))


def test_paired_sample_validation():
    p = PairedSample((1, 2), (3, 4))
    assert p.n == 2
    with pytest.raises(ValueError):
        PairedSample((1, 2), (3,))
    with pytest.raises(ValueError):
        PairedSample((), ())


def test_population_vector():
    p = PopulationVector((1, 0, 1, 1))
    assert p.n == 4
    assert p.ones == 3
    assert p.proportion == 0.75
    with pytest.raises(ValueError):
        PopulationVector((1, 2))
    with pytest.raises(ValueError):
        PopulationVector(())


def test_load_csv_grouped(tmp_path):
    path = tmp_path / "wellbeing.csv"
    path.write_text(
        "score,diet\n74,Vegetarian\n65,Vegetarian\n69,Omnivore\n"
        "37,Omnivore\n57,Vegetarian\n26,Omnivore\n"
    )
    data = load_csv(path, "score", "diet")
    assert isinstance(data, GroupedSample)
    assert data.group_names == ("Vegetarian", "Omnivore")
    # Group means exactly 196/3 and 44 in exact arithmetic.
    veg = [Fraction(v) for v in data.group_values("Vegetarian")]
    omni = [Fraction(v) for v in data.group_values("Omnivore")]
    assert sum(veg) / len(veg) == Fraction(196, 3)
    assert sum(omni) / len(omni) == Fraction(44)
    assert data.group_mean("Vegetarian") == pytest.approx(65.33, abs=0.01)
    assert data.group_mean("Omnivore") == 44.0


def test_load_csv_single_column(tmp_path):
    path = tmp_path / "flat.csv"
    path.write_text("value\n5\n5\n5\n")
    data = load_csv(path, "value")
    assert isinstance(data, Sample)
    assert data.mean == 5.0


def test_load_csv_blank_cell_names_row(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("value,group\n1,a\n,b\n3,a\n")
    with pytest.raises(ValueError, match="row 2"):
        load_csv(path, "value", "group")


def test_load_csv_unparseable_names_row(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("value\n1\ntwo\n")
    with pytest.raises(ValueError, match="row 2"):
        load_csv(path, "value")


def test_load_csv_missing_file():
    with pytest.raises(FileNotFoundError):
        load_csv("/nonexistent/nope.csv", "value")


def test_load_csv_missing_column(tmp_path):
    path = tmp_path / "cols.csv"
    path.write_text("a,b\n1,2\n")
    with pytest.raises(ValueError, match="column 'value'"):
        load_csv(path, "value")


def test_load_csv_empty_data(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("value\n")
    with pytest.raises(ValueError, match="no data rows"):
        load_csv(path, "value")


def test_load_csv_wrong_group_count(tmp_path):
    path = tmp_path / "one_group.csv"
    path.write_text("value,group\n1,a\n2,a\n")
    with pytest.raises(ValueError, match="exactly two distinct groups"):
        load_csv(path, "value", "group")


def test_load_paired_csv(tmp_path):
    path = tmp_path / "pairs.csv"
    path.write_text("x,y\n1,2\n3,4\n")
    p = load_paired_csv(path, "x", "y")
    assert p.xs == (1.0, 3.0)
    assert p.ys == (2.0, 4.0)
    with pytest.raises(ValueError, match="column 'z'"):
        load_paired_csv(path, "x", "z")


finite_floats = st.floats(
    allow_nan=False, allow_infinity=False, min_value=-1e12, max_value=1e12
)


@given(st.lists(finite_floats, min_size=1, max_size=40))
def test_sample_csv_round_trip(values):
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "sample.csv"
        original = Sample(tuple(values))
        write_csv(original, path)
        loaded = load_csv(path, "value")
    assert loaded.values == original.values


@given(
    st.lists(finite_floats, min_size=1, max_size=20),
    st.lists(finite_floats, min_size=1, max_size=20),
)
def test_grouped_csv_round_trip(a_vals, b_vals):
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "grouped.csv"
        rows = [(v, "first") for v in a_vals] + [(v, "second") for v in b_vals]
        original = GroupedSample.from_rows(rows)
        write_csv(original, path)
        loaded = load_csv(path, "value", "group")
    assert loaded.values == original.values
    assert loaded.groups == original.groups


def test_fixture_veg9():
    s = get_fixture("veg9").payload
    assert s.values == (74, 65, 57, 78, 54, 47, 38, 34, 93)
    assert Fraction(int(sum(s.values)), s.n) == Fraction(60)
    assert s.mean == 60.0


def test_fixture_skewed9():
    s = get_fixture("skewed9").payload
    assert s.values == (96, 100, 35, 95, 97, 99, 50, 95, 98)
    assert s.mean == 85.0


def test_fixture_veg6():
    g = get_fixture("veg6").payload
    assert g.rows[0] == (74.0, "Vegetarian")
    assert g.group_names == ("Vegetarian", "Omnivore")
    veg = [Fraction(v) for v in g.group_values("Vegetarian")]
    omni = [Fraction(v) for v in g.group_values("Omnivore")]
    veg_mean = sum(veg) / 3
    omni_mean = sum(omni) / 3
    assert veg_mean == Fraction(196, 3)
    assert omni_mean == 44
    assert veg_mean - omni_mean == Fraction(64, 3)


def test_fixture_poll500():
    p = get_fixture("poll500").payload
    assert p.n == 500
    assert p.ones == 300
    assert p.proportion == 0.6


def test_fixtures_are_stable():
    first = fixtures()
    second = fixtures()
    assert first == second
    assert [f.name for f in first] == ["veg9", "skewed9", "veg6", "poll500"]


def test_unknown_fixture():
    with pytest.raises(ValueError, match="unknown fixture"):
        get_fixture("nope")


def test_containers_are_immutable():
    s = get_fixture("veg9").payload
    with pytest.raises(AttributeError):
        s.values = (1.0,)
    assert math.isfinite(s.mean)
