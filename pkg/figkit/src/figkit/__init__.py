"""Deterministic figure rendering for morphic-drive laboratory CSVs."""

from .csvread import CsvFormatError, column, read_lab_csv
from .render import FigureSpec, FigureSpecError, PanelSpec, render

__version__ = "0.1.0"

__all__ = [
    "FigureSpec",
    "PanelSpec",
    "FigureSpecError",
    "CsvFormatError",
    "render",
    "read_lab_csv",
    "column",
]
