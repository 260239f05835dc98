"""Timing harness over a grid of random-ideal shapes."""
from __future__ import annotations

import csv
import io
import multiprocessing as mp
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .engine import compute_betti_table
from .faces import LYUBEZNIK
from .fields import QQ, Field
from .kernels import BACKEND
from .random_ideals import PROTOCOL, random_ideal


@dataclass(frozen=True)
class Cell:
    n: int
    r: int
    d: int | tuple[int, int]

    @property
    def degree_text(self) -> str:
        return str(self.d) if isinstance(self.d, int) else f"{self.d[0]}-{self.d[1]}"


@dataclass
class CellResult:
    cell: Cell
    times: list[float] = field(default_factory=list)
    failures: dict[int, str] = field(default_factory=dict)

    @property
    def mean(self) -> float | None:
        return statistics.fmean(self.times) if self.times else None

    @property
    def median(self) -> float | None:
        return statistics.median(self.times) if self.times else None


def parse_degree(text: str) -> int | tuple[int, int]:
    if "-" in text:
        lo, hi = (int(x) for x in text.split("-", 1))
        return (lo, hi)
    return int(text)


def parse_grid(text: str) -> list[Cell]:
    """``n,r,d;n,r,d;...`` where ``d`` may be a range like ``5-8``."""
    cells = []
    for chunk in text.replace(" ", "").split(";"):
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 3:
            raise ValueError(f"grid cell {chunk!r} is not n,r,d")
        cells.append(Cell(int(parts[0]), int(parts[1]), parse_degree(parts[2])))
    return cells


def instance_seed(seed: int, cell: Cell, rep: int) -> list[int]:
    lo, hi = (cell.d, cell.d) if isinstance(cell.d, int) else cell.d
    return [seed, cell.n, cell.r, lo, hi, rep]


def _time_one(cell: Cell, seed: int, rep: int, field: Field, start: str, backend) -> float:
    ideal = random_ideal(cell.n, cell.r, cell.d, seed=instance_seed(seed, cell, rep))
    t0 = time.perf_counter()
    compute_betti_table(ideal, field, start, backend=backend)
    return time.perf_counter() - t0


def _child(conn, *args):
    try:
        conn.send(("ok", _time_one(*args)))
    except MemoryError:
        conn.send(("oom", None))
    except Exception as exc:  # failures are data
        conn.send(("error", f"{type(exc).__name__}: {exc}"))
    finally:
        conn.close()


def _run_instance(cell, seed, rep, field, start, backend, timeout):
    if timeout is None:
        try:
            return "ok", _time_one(cell, seed, rep, field, start, backend)
        except MemoryError:
            return "oom", None
        except Exception as exc:
            return "error", f"{type(exc).__name__}: {exc}"
    ctx = mp.get_context("fork")
    parent, child = ctx.Pipe(duplex=False)
    proc = ctx.Process(target=_child, args=(child, cell, seed, rep, field, start, backend))
    proc.start()
    child.close()
    ready = parent.poll(timeout)
    if not ready:
        proc.kill()
        proc.join()
        return "timeout", None
    try:
        status, value = parent.recv()
    except EOFError:
        status, value = "crashed", f"exit code {proc.exitcode}"
    proc.join()
    return status, value


def run_cell(cell: Cell, reps: int, seed: int = 0, field: Field = QQ, start: str = LYUBEZNIK,
             backend=None, timeout: float | None = None) -> CellResult:
    res = CellResult(cell)
    for rep in range(reps):
        status, value = _run_instance(cell, seed, rep, field, start, backend, timeout)
        if status == "ok":
            res.times.append(value)
        else:
            res.failures[rep] = status if value is None else f"{status} ({value})"
    return res


def bench(cells: list[Cell], reps: int, seed: int = 0, field: Field = QQ, start: str = LYUBEZNIK,
          backend=None, timeout: float | None = None, parallel: bool = False) -> list[CellResult]:
    """Time ``reps`` seeded ideals per cell. ``reps == 0`` gives an empty report."""
    if reps <= 0:
        return []
    args = [(c, reps, seed, field, start, backend, timeout) for c in cells]
    if parallel and len(cells) > 1:
        with ProcessPoolExecutor(mp_context=mp.get_context("fork")) as pool:
            return list(pool.map(run_cell, *zip(*args)))
    return [run_cell(*a) for a in args]


def report_csv(results: list[CellResult], backend=None, start: str = LYUBEZNIK,
               field: Field = QQ, seed: int = 0) -> str:
    buf = io.StringIO()
    buf.write(f"# random ideals: {PROTOCOL}\n")
    buf.write(f"# kernel={backend or BACKEND} start={start} field={field.name} seed={seed}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "r", "d", "reps", "completed", "failures", "mean_s", "median_s", "max_s", "failure_detail"])
    for res in results:
        c = res.cell
        fmt = lambda x: "" if x is None else f"{x:.6f}"
        w.writerow([
            c.n, c.r, c.degree_text, len(res.times) + len(res.failures), len(res.times), len(res.failures),
            fmt(res.mean), fmt(res.median), fmt(max(res.times) if res.times else None),
            "; ".join(f"rep {k}: {v}" for k, v in sorted(res.failures.items())),
        ])
    return buf.getvalue()
