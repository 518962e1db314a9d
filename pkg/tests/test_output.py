"""
Testes da serialização CSV/JSON
"""

import orjson

from models.response_models import BoundStateRecord, PhaseShiftRecord
from services.output_service import format_number, render_csv, render_json


def _records():
    return [
        PhaseShiftRecord(l=0, k=1.0151970252, delta=-0.123456789012345, normalization=2.5,
                         lam=0.999873, validity_score=0.049),
        PhaseShiftRecord(l=1, status="evanescent_channel"),
    ]


class TestFormatting:

    def test_significant_digits(self):
        assert format_number(1 / 3, 5) == "0.33333"
        assert format_number(123456.789, 4) == "1.235e+05"

    def test_passthrough(self):
        assert format_number(None) == ""
        assert format_number(7) == "7"
        assert format_number(True) == "true"
        assert format_number("ok") == "ok"


class TestCsv:

    def test_header_and_rows(self):
        lines = render_csv(_records(), digits=6).split("\n")
        assert lines[0] == "l,k,delta,normalization,lambda,validity_score,status"
        assert lines[1] == "0,1.0152,-0.123457,2.5,0.999873,0.049,ok"
        assert lines[2] == "1,,,,,,evanescent_channel"
        assert lines[3] == ""

    def test_empty_with_columns(self):
        assert render_csv([], columns=["n", "l", "E", "residual"]) == "n,l,E,residual\n"

    def test_alias_column(self):
        text = render_csv([BoundStateRecord(n=0, l=0, energy=0.14996, residual=1e-14)])
        assert text.splitlines()[0] == "n,l,E,residual"

    def test_deterministic(self):
        assert render_csv(_records()) == render_csv(_records())


class TestJson:

    def test_round_trip_values(self):
        data = orjson.loads(render_json(_records(), digits=6))
        assert data[0]["lambda"] == 0.999873
        assert data[0]["delta"] == -0.123457
        assert data[1]["k"] is None

    def test_trailing_newline_and_indent(self):
        text = render_json({"a": [1.0, 2.0]})
        assert text.endswith("}\n")
        assert "\n  " in text
