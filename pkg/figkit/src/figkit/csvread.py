"""Reader for laboratory CSV outputs.

Files start with `# config: {...}` and `# version: ...` comment lines, then
a header row and data rows. Columns arrive as strings; numeric coercion is
the caller's business (empty fields become None).
"""

from __future__ import annotations

import csv
import io
import json


class CsvFormatError(Exception):
    pass


def read_lab_csv(path: str):
    """Returns (config dict or None, header list, rows as string lists)."""
    config = None
    body = []
    with open(path) as fh:
        for line in fh:
            if line.startswith("#"):
                if line.startswith("# config:"):
                    config = json.loads(line[len("# config:"):])
                continue
            body.append(line)
    rows = [r for r in csv.reader(io.StringIO("".join(body))) if r]
    if len(rows) < 2:
        raise CsvFormatError(f"{path}: no data rows")
    return config, rows[0], rows[1:]


def column(header: list, rows: list, name: str, cast=float):
    """Extract one column by name; empty strings map to None."""
    if name not in header:
        raise CsvFormatError(f"missing column {name!r} (have {header})")
    i = header.index(name)
    out = []
    for row in rows:
        cell = row[i]
        out.append(None if cell == "" else cast(cell))
    return out
