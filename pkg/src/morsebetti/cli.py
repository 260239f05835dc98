"""Command-line front end.

Data goes to stdout, diagnostics to stderr. Exit status: 0 on success,
1 when ``--oracle`` or ``--verify`` finds a problem, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bench as benchmod
from .engine import compute_both
from .faces import LYUBEZNIK, STARTS
from .fields import FieldError, parse_field
from .homology import ComplexError, NonfaceComplex, clique_complex, homology_dims, parse_edge_list
from .invariants import verify_all
from .kernels import available_backends
from .monomials import MonomialError, MonomialIdeal
from .oracle import oracle_multigraded
from .random_ideals import InfeasibleError, random_ideal
from .render import FORMATS, render_homology, render_multigraded, render_table


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="morsebetti",
        description="Minimal graded Betti tables of monomial ideals.",
    )
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="FILE", help="ideal (text or JSON) or, with --homology, a nonface JSON; '-' for stdin")
    src.add_argument("--random", metavar="n,r,d[,count]", help="seeded random ideal(s); d may be a range like 5-8")
    src.add_argument("--graph", metavar="FILE", help="edge list 'u v' per line; computes clique complex homology")
    src.add_argument("--bench", metavar="GRID", help="benchmark grid 'n,r,d;n,r,d;...'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--nvars", type=int, help="number of variables for text input (default: largest index used)")
    p.add_argument("--field", default="rational", help="rational | prime:P (default rational)")
    p.add_argument("--start", default=LYUBEZNIK, choices=STARTS)
    p.add_argument("--kernel", default="auto", choices=["auto"] + available_backends())
    p.add_argument("--multigraded", action="store_true", help="print multigraded Betti numbers")
    p.add_argument("--homology", action="store_true", help="input is a complex given by minimal nonfaces")
    p.add_argument("--oracle", action="store_true", help="also compute with the brute-force oracle and diff")
    p.add_argument("--verify", action="store_true", help="check bounds and vanishing theorems on each table")
    p.add_argument("--reps", type=int, default=10)
    p.add_argument("--timeout", type=float, help="per-instance benchmark timeout in seconds")
    p.add_argument("--parallel", action="store_true", help="run benchmark cells in parallel")
    p.add_argument("--format", default="text", choices=FORMATS)
    return p


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _load_ideal(text: str, nvars: int | None) -> MonomialIdeal:
    if text.lstrip().startswith("{"):
        return MonomialIdeal.from_json(text)
    return MonomialIdeal.parse(text, nvars)


def _random_ideals(text: str, seed: int) -> list[MonomialIdeal]:
    parts = text.replace(" ", "").split(",")
    if len(parts) not in (3, 4):
        raise ValueError(f"--random expects n,r,d[,count], got {text!r}")
    n, r = int(parts[0]), int(parts[1])
    d = benchmod.parse_degree(parts[2])
    count = int(parts[3]) if len(parts) == 4 else 1
    return [random_ideal(n, r, d, seed=[seed, k]) for k in range(count)]


def _table_output(ideal, table, mb, fmt, multigraded) -> str:
    if multigraded:
        return render_multigraded(mb, fmt)
    return render_table(table, fmt)


def _run_ideals(ideals, args, field, out, err) -> int:
    status = 0
    backend = None if args.kernel == "auto" else args.kernel
    json_items = []
    for k, ideal in enumerate(ideals):
        table, mb = compute_both(ideal, field, args.start, backend=backend)
        if args.format == "json":
            item = {"ideal": ideal.to_json(), "result": json.loads(_table_output(ideal, table, mb, "json", args.multigraded))}
            json_items.append(item)
        else:
            if len(ideals) > 1:
                out.write(f"# ideal {k}: {ideal}\n")
            out.write(_table_output(ideal, table, mb, args.format, args.multigraded))
        if args.oracle:
            expect = oracle_multigraded(ideal, field)
            if dict(expect) != dict(mb):
                status = 1
                err.write(f"oracle mismatch for {ideal}:\n  engine {table.entries()}\n  oracle {expect.graded().entries()}\n")
            else:
                err.write(f"oracle agrees for {ideal}\n")
        if args.verify:
            problems = verify_all(table, ideal, mb)
            for v in problems:
                err.write(f"violation for {ideal}: {v}\n")
            if problems:
                status = 1
    if args.format == "json":
        out.write(json.dumps(json_items[0] if len(json_items) == 1 else json_items) + "\n")
    return status


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        field = parse_field(args.field)
        backend = None if args.kernel == "auto" else args.kernel
        if args.bench:
            cells = benchmod.parse_grid(args.bench)
            results = benchmod.bench(cells, args.reps, args.seed, field, args.start,
                                     backend=backend, timeout=args.timeout, parallel=args.parallel)
            out.write(benchmod.report_csv(results, backend, args.start, field, args.seed))
            return 0
        if args.graph or args.homology:
            if args.graph:
                cx, labels = clique_complex(parse_edge_list(_read(args.graph)))
                err.write(f"clique complex on {cx.n} vertices ({' '.join(labels)}), {len(cx.nonfaces)} minimal nonfaces\n")
            elif args.input:
                cx = NonfaceComplex.from_json(_read(args.input))
            else:
                raise ValueError("--homology needs --input FILE with {\"n\": ..., \"nonfaces\": [...]}")
            dims = homology_dims(cx, field, args.start, backend=backend)
            out.write(render_homology(dims, args.format))
            return 0
        if args.input:
            ideals = [_load_ideal(_read(args.input), args.nvars)]
        elif args.random:
            ideals = _random_ideals(args.random, args.seed)
        else:
            raise ValueError("one of --input, --random, --graph or --bench is required")
        return _run_ideals(ideals, args, field, out, err)
    except (MonomialError, FieldError, ComplexError, InfeasibleError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
