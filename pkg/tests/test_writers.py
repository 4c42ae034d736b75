import io
import json

import pandas as pd
import pytest

from dipising.output.writers import CsvWriter, JsonWriter, TableWriter


@pytest.fixture
def frame():
    return pd.DataFrame({"name": ["a", "b"], "value": [8.5e-3, 3.6e-6], "ratio": [2470.0, None]})


@pytest.mark.parametrize("writer,expected", [(TableWriter(), False), (CsvWriter(), True), (JsonWriter(), True)])
def test_machine_readable(writer, expected):
    assert writer.machine_readable is expected


def test_csv_writer_header_and_empty_fields(frame):
    text = CsvWriter().render(frame)
    lines = text.splitlines()
    assert lines[0] == "name,value,ratio"
    assert lines[2].endswith(",")
    parsed = pd.read_csv(io.StringIO(text))
    assert parsed["value"].tolist() == pytest.approx([8.5e-3, 3.6e-6], rel=1e-12)


def test_csv_writer_uses_scientific_notation(frame):
    assert "8.500000000000e-03" in CsvWriter().render(frame)


def test_csv_writer_drops_footer(frame):
    assert "PASS" not in CsvWriter().render(frame, footer="PASS")


def test_table_writer_footer(frame):
    text = TableWriter().render(frame, footer="PASS")
    assert text.splitlines()[-1] == "PASS"
    assert "8.500000e-03" in text


def test_json_writer_nulls(frame):
    records = json.loads(JsonWriter().render(frame))
    assert records[1]["ratio"] is None
    assert records[0]["ratio"] == pytest.approx(2470.0)
