"""Text, CSV and JSON forms of Betti tables."""
from __future__ import annotations

import csv
import io
import json

import numpy as np

from .engine import BettiTable, MultigradedBetti

FORMATS = ("text", "csv", "json")


def render_table(t: BettiTable, fmt: str = "text") -> str:
    """Trimmed table; row ``j`` column ``i`` holds beta_{i,i+j}."""
    data = t.trimmed()
    rows, cols = data.shape
    if fmt == "text":
        cells = [[str(int(x)) if x else "." for x in row] for row in data]
        totals = [str(int(x)) for x in data.sum(axis=0)]
        width = max(len(c) for c in [str(cols - 1)] + totals + [c for row in cells for c in row])
        label_w = max(len("total:"), len(f"{rows - 1}:"))
        fmt_row = lambda lab, xs: lab.rjust(label_w) + " " + " ".join(x.rjust(width) for x in xs)
        lines = [fmt_row("", [str(i) for i in range(cols)]), fmt_row("total:", totals)]
        lines += [fmt_row(f"{j}:", cells[j]) for j in range(rows)]
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["strand"] + list(range(cols)))
        for j in range(rows):
            w.writerow([j] + data[j].tolist())
        return buf.getvalue()
    if fmt == "json":
        return json.dumps({
            "projdim": cols - 1,
            "regularity": rows - 1,
            "table": data.tolist(),
            "totals": data.sum(axis=0).tolist(),
        })
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def parse_table(text: str, fmt: str) -> BettiTable:
    """Inverse of :func:`render_table` for ``csv`` and ``json``."""
    if fmt == "json":
        return BettiTable(np.array(json.loads(text)["table"], dtype=np.int64))
    if fmt == "csv":
        rows = list(csv.reader(io.StringIO(text)))
        return BettiTable(np.array([[int(x) for x in row[1:]] for row in rows[1:]], dtype=np.int64))
    raise ValueError(f"cannot parse format {fmt!r}")


def render_multigraded(mb: MultigradedBetti, fmt: str = "text") -> str:
    items = sorted(mb.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]), kv[0][1]))
    if fmt == "json":
        return json.dumps([{"i": i, "multidegree": list(a), "beta": c} for (i, a), c in items])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "multidegree", "beta"])
        for (i, a), c in items:
            w.writerow([i, " ".join(map(str, a)), c])
        return buf.getvalue()
    return "".join(f"{i}  ({','.join(map(str, a))})  {c}\n" for (i, a), c in items)


def render_homology(dims: list[int], fmt: str = "text") -> str:
    pairs = [(k - 1, d) for k, d in enumerate(dims)]
    if fmt == "json":
        return json.dumps({"reduced_homology": {str(i): d for i, d in pairs}})
    if fmt == "csv":
        return "dimension,rank\n" + "".join(f"{i},{d}\n" for i, d in pairs)
    return "".join(f"H~_{i}: {d}\n" for i, d in pairs)
