import csv
import io
import json

import numpy as np
import pytest

from varchain.cointegration import JohansenResult
from varchain.errors import EmptyResult, UnsupportedFormat
from varchain.render import fmt_number, render_table, table_blocks
from varchain.structural import fevd, irf
from varchain.var import VarModel, estimate_var, lag_order_selection


def _johansen_result():
    mu = np.array([0.852411, 0.556673])
    return JohansenResult(("A", "B"), mu, np.array([98.0405, 46.02958]), np.array([49.74645, 21.14966]),
                          np.array([69.81889, 47.85613]), np.array([33.87687, 27.58434]),
                          np.array([0.0001, 0.0735]), np.array([0.0003, 0.2673]), 1, 1, 26, 3, 2)


def test_number_format():
    assert fmt_number(3.14159265358979) == "3.14159"
    assert fmt_number(1234567.0) == "1.23457e+06"
    assert fmt_number(-0.000123456789) == "-0.000123457"
    assert fmt_number(float("nan")) == "NA"
    assert fmt_number(7) == "7"


def test_johansen_two_blocks():
    blocks = table_blocks(_johansen_result())
    assert len(blocks) == 2
    assert [row[0] for row in blocks[0][2]] == ["Yoktur", "En az 1"]
    text = render_table(_johansen_result(), "text")
    assert "49.7465" in text and "0.852411" in text


def test_fevd_period_column():
    model = VarModel.from_params([np.diag([0.5, 0.2])], np.eye(2), labels=["GSYIH", "B"])
    text = render_table(fevd(model, 10), "text")
    assert "Dönem" in text
    rows = list(csv.reader(io.StringIO(render_table(fevd(model, 10), "csv"))))
    assert rows[0] == ["table", "Dönem", "GSYIH", "B"]
    assert rows[1][1:] == ["1", "100", "0"]


def test_empty_result():
    with pytest.raises((EmptyResult, UnsupportedFormat)):
        render_table([], "text")
    with pytest.raises((EmptyResult, UnsupportedFormat)):
        render_table(None, "csv")


def test_unknown_format_and_type():
    with pytest.raises(UnsupportedFormat):
        render_table(_johansen_result(), "xlsx")
    with pytest.raises(UnsupportedFormat):
        render_table({"a": 1}, "text")


def test_formats_agree(demo_panel):
    sel = lag_order_selection(demo_panel, 2)
    payload = json.loads(render_table(sel, "json"))
    rows = list(csv.reader(io.StringIO(render_table(sel, "csv"))))
    assert payload[0]["records"][2]["AIC"] == "29.8738*"
    assert rows[3][4] == "29.8738*"
    assert "29.8738*" in render_table(sel, "text")


def test_output_is_deterministic(demo_panel):
    model = estimate_var(demo_panel, 2)
    res = irf(model, 10)
    for fmt in ("text", "csv", "json"):
        assert render_table(res, fmt) == render_table(irf(estimate_var(demo_panel, 2), 10), fmt)


def test_period_decimal_separator(demo_panel):
    text = render_table(estimate_var(demo_panel, 2), "csv")
    assert "," not in "".join(c for row in csv.reader(io.StringIO(text)) for c in row)
