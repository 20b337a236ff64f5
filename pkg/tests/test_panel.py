import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from varchain.errors import (DivisionByZero, DuplicateYear, MissingValue, NonNumericCell, NonPositiveLog,
                             UnknownLabel, YearGap)
from varchain.panel import (DEMO_LABELS, SeriesPanel, first_difference, load_panel, log_difference,
                            percent_change, subpanel, synthetic_demo_panel, transform)

from conftest import make_panel


def test_load_small_panel():
    p = load_panel("year,A,B\n2000,1.0,2.0\n2001,1.5,2.5\n")
    assert (p.nobs, p.nvars) == (2, 2)
    assert p.labels == ("A", "B")
    assert_allclose(p.column("B"), [2.0, 2.5])


def test_empty_cell_is_missing_value():
    with pytest.raises(MissingValue):
        load_panel("year,A,B\n2000,1.0,\n2001,1.5,2.5\n")


def test_non_numeric_cell():
    with pytest.raises(NonNumericCell):
        load_panel("year,A\n2000,abc\n2001,1\n")


def test_duplicate_and_gap_years():
    with pytest.raises(DuplicateYear):
        load_panel("year,A\n2000,1\n2000,2\n2001,3\n")
    with pytest.raises(YearGap):
        load_panel("year,A\n2000,1\n2002,2\n2003,3\n")


def test_annual_five_series_panel(demo_panel):
    assert (demo_panel.nobs, demo_panel.nvars) == (29, 5)
    assert demo_panel.years[0] == 1995 and demo_panel.years[-1] == 2023
    assert demo_panel.labels == DEMO_LABELS


def test_demo_panel_is_reproducible():
    assert synthetic_demo_panel() == synthetic_demo_panel()


def test_percent_change_examples():
    assert_allclose(percent_change([100, 110]), [10.0])
    assert_allclose(percent_change([100, 100, 90]), [0.0, -10.0])


def test_percent_change_division_by_zero():
    with pytest.raises(DivisionByZero):
        percent_change([0.0, 1.0])


def test_log_difference_needs_positive_values():
    assert_allclose(log_difference([1.0, np.e]), [1.0])
    with pytest.raises(NonPositiveLog):
        log_difference([1.0, -1.0])


def test_identity_transform(demo_panel):
    assert transform(demo_panel, "identity") == demo_panel


def test_transform_drops_first_year(demo_panel):
    out = transform(demo_panel, {"GSYIH": "first-difference"})
    assert out.nobs == demo_panel.nobs - 1
    assert out.years[0] == 1996
    assert_allclose(out.column("GSYIH"), np.diff(demo_panel.column("GSYIH")))
    assert_allclose(out.column("IMALAT"), demo_panel.column("IMALAT")[1:])


def test_subpanel_examples(demo_panel):
    one = subpanel(demo_panel, ["GSYIH"])
    assert one.nvars == 1
    assert subpanel(demo_panel, list(demo_panel.labels)) == demo_panel
    with pytest.raises(UnknownLabel, match="XYZ"):
        subpanel(demo_panel, ["XYZ"])


def test_expected_labels_select_columns(demo_panel):
    p = load_panel(demo_panel.to_csv(), expected_labels=["MADEN", "GSYIH"])
    assert p.labels == ("MADEN", "GSYIH")


def test_panel_values_are_read_only(demo_panel):
    with pytest.raises(ValueError):
        demo_panel.values[0, 0] = 1.0


finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_subnormal=False)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 12), st.integers(1, 4), st.data())
def test_csv_round_trip(T, m, data):
    vals = np.array(data.draw(st.lists(finite, min_size=T * m, max_size=T * m))).reshape(T, m)
    p = make_panel(vals)
    assert load_panel(p.to_csv()) == p


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(-1e3, 1e3, allow_nan=False), min_size=3, max_size=40))
def test_difference_then_cumsum_reconstructs(x):
    x = np.array(x)
    back = np.concatenate([[x[0]], x[0] + np.cumsum(first_difference(x))])
    scale = max(np.max(np.abs(x)), 1.0)
    assert np.max(np.abs(back - x)) <= 1e-12 * scale * len(x)


@settings(max_examples=30, deadline=None)
@given(st.permutations(list(DEMO_LABELS)))
def test_subpanel_inverse_permutation(perm):
    panel = synthetic_demo_panel()
    shuffled = subpanel(panel, perm)
    assert subpanel(shuffled, panel.labels) == panel
