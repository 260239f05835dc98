"""Reduced simplicial homology from minimal nonfaces.

The Stanley-Reisner ideal of the complex is reduced with the same engine,
but only faces whose generators cover every vertex take part; those are the
faces labelled ``x_1 ... x_n`` and they carry the top multidegree, whose
Betti numbers are the reduced homology.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .engine import deform, init_graph
from .faces import LYUBEZNIK
from .fields import QQ, Field
from .monomials import MonomialIdeal


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class NonfaceComplex:
    """Simplicial complex on vertices ``0..n-1`` given by its minimal nonfaces."""

    n: int
    nonfaces: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ComplexError("need at least one vertex")
        gs = tuple(tuple(sorted(set(g))) for g in self.nonfaces)
        object.__setattr__(self, "nonfaces", gs)
        for g in gs:
            if not g:
                raise ComplexError("empty nonface: the complex would be void")
            if g[0] < 0 or g[-1] >= self.n:
                raise ComplexError(f"nonface {g} outside vertices 0..{self.n - 1}")
        sets = [set(g) for g in gs]
        for a in range(len(sets)):
            for b in range(len(sets)):
                if a != b and sets[a] <= sets[b]:
                    raise ComplexError(f"nonfaces not minimal: {gs[a]} is contained in {gs[b]}")

    @classmethod
    def from_json(cls, text: str | dict) -> "NonfaceComplex":
        data = json.loads(text) if isinstance(text, str) else text
        try:
            return cls(int(data["n"]), tuple(tuple(g) for g in data["nonfaces"]))
        except (KeyError, TypeError) as exc:
            raise ComplexError("expected JSON object with 'n' and 'nonfaces'") from exc

    def stanley_reisner_ideal(self) -> MonomialIdeal:
        gens = tuple(tuple(1 if v in g else 0 for v in range(self.n)) for g in self.nonfaces)
        return MonomialIdeal(self.n, gens)

    def faces(self) -> list[tuple[int, ...]]:
        bad = [set(g) for g in self.nonfaces]
        return [f for k in range(self.n + 1) for f in combinations(range(self.n), k)
                if not any(g <= set(f) for g in bad)]

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.faces()) - 1


def clique_complex(edges, vertices=None) -> tuple[NonfaceComplex, list]:
    """Clique complex of a graph; minimal nonfaces are the non-adjacent pairs.

    Returns the complex and the vertex labels in index order.
    """
    edges = [tuple(e) for e in edges]
    labels = sorted({v for e in edges for v in e} | set(vertices or ()), key=_vertex_key)
    index = {v: k for k, v in enumerate(labels)}
    adj = {frozenset((index[a], index[b])) for a, b in edges if a != b}
    non = tuple((a, b) for a, b in combinations(range(len(labels)), 2) if frozenset((a, b)) not in adj)
    return NonfaceComplex(len(labels), non), labels


def _vertex_key(v):
    return (0, int(v), "") if str(v).lstrip("-").isdigit() else (1, 0, str(v))


def parse_edge_list(text: str) -> list[tuple[str, str]]:
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ComplexError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((parts[0], parts[1]))
    return edges


def homology_dims(cx: NonfaceComplex, field: Field = QQ, start: str = LYUBEZNIK,
                  backend: str | None = None) -> list[int]:
    """Reduced homology dimensions, entry ``k`` holding dimension ``k - 1``.

    dim H_i equals the number of surviving faces of size ``n - i - 1`` that
    cover all vertices.
    """
    n = cx.n
    I = cx.stanley_reisner_ideal()
    r = I.r
    dims = [0] * (n + 1)
    if r == 0:
        return dims
    G = init_graph(I, start, field, backend=backend, target_degree=n)
    counts = {0: len(G.current)}
    top = min(n, r)
    while G.level < top:
        deform(G)
        counts[G.level] = len(G.current)
    for i in range(-1, n):
        dims[i + 1] = counts.get(n - i - 1, 0)
    return dims


def homology_dict(dims: list[int]) -> dict[int, int]:
    return {k - 1: d for k, d in enumerate(dims)}
