"""Text renderings of count sequences: table, CSV, JSON and OEIS b-file."""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

FORMATS = ("table", "csv", "json", "bfile")


def to_csv(rows: Sequence[tuple[int, int]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "count"])
    writer.writerows(rows)
    return buf.getvalue()


def to_json(rows: Sequence[tuple[int, int]]) -> str:
    return json.dumps([{"n": n, "count": c} for n, c in rows]) + "\n"


def to_bfile(rows: Sequence[tuple[int, int]]) -> str:
    # the offset is simply the first n of the range
    return "".join(f"{n} {c}\n" for n, c in rows)


def to_table(rows: Sequence[tuple[int, int]]) -> str:
    width = max([len(str(c)) for _, c in rows] + [5])
    lines = [f"{'n':>3}  {'count':>{width}}"]
    lines += [f"{n:>3}  {c:>{width}}" for n, c in rows]
    return "\n".join(lines) + "\n"


def render(rows: Sequence[tuple[int, int]], fmt: str) -> str:
    return {"table": to_table, "csv": to_csv, "json": to_json, "bfile": to_bfile}[fmt](rows)


def parse_bfile(text: str) -> list[tuple[int, int]]:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n, c = line.split()
        rows.append((int(n), int(c)))
    return rows
