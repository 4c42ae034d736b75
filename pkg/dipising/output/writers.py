"""
Output writers selected through the `format` config group. Each turns a pandas DataFrame of results into
text for the output stream; numbers are always written in locale-independent scientific notation.
"""

import json
import math
from abc import ABC, abstractmethod

import pandas as pd


class ResultWriter(ABC):
    """
    Interface for result writers.
    """

    @abstractmethod
    def render(self, frame: pd.DataFrame, footer: str | None = None) -> str:
        pass

    @property
    def machine_readable(self) -> bool:
        raise NotImplementedError()


class TableWriter(ResultWriter):
    """
    TableWriter renders an aligned human-readable table, followed by an optional footer line.
    """

    def __init__(self, significant_digits: int = 7):
        self.float_format = f"{{:.{significant_digits - 1}e}}".format

    def render(self, frame: pd.DataFrame, footer: str | None = None) -> str:
        table = frame.to_string(index=False, float_format=self.float_format, na_rep="-")
        return f"{table}\n{footer}\n" if footer else f"{table}\n"

    @property
    def machine_readable(self) -> bool:
        return False


class CsvWriter(ResultWriter):
    """
    CsvWriter emits RFC-4180 style CSV with a mandatory header row. Missing values are empty fields;
    footers are dropped to keep the stream machine-clean.
    """

    def __init__(self, significant_digits: int = 13):
        self.float_format = f"%.{significant_digits - 1}e"

    def render(self, frame: pd.DataFrame, footer: str | None = None) -> str:
        return frame.to_csv(index=False, float_format=self.float_format, lineterminator="\n")

    @property
    def machine_readable(self) -> bool:
        return True


class JsonWriter(ResultWriter):
    """
    JsonWriter emits a JSON array with one object per row; missing values become null.
    """

    def __init__(self, indent: int | None = 2):
        self.indent = indent

    @staticmethod
    def _clean(value):
        if isinstance(value, float) and math.isnan(value):
            return None
        if hasattr(value, "item"):
            return value.item()
        return value

    def render(self, frame: pd.DataFrame, footer: str | None = None) -> str:
        records = [
            {key: self._clean(value) for key, value in record.items()}
            for record in frame.to_dict(orient="records")
        ]
        return json.dumps(records, indent=self.indent) + "\n"

    @property
    def machine_readable(self) -> bool:
        return True
