"""Betti tables by single-pair Morse cancellation on a simplicial resolution.

The resolution (Taylor or Lyubeznik) is reduced one homological level at a
time. At level ``i`` the graph holds the finished layer ``current`` (faces of
size ``i``) and the layer ``lower`` (size ``i + 1``) whose pairings with the
next layer are still open. :func:`deform` walks the faces of size ``i + 2``
in lexicographic order and cancels each against the smallest face of
``lower`` it reaches through a unit weight, updating the remaining weights.

Only weights between faces with equal labels are tracked: those are the
scalar parts that can ever become units, and no other entry feeds into them.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .faces import LYUBEZNIK, check_start, from_mask
from .fields import QQ, Field
from .kernels import Layer, expand, build_layer, first_layers, next_layer
from .monomials import MonomialIdeal

STOP_ADD_BOTH = "stop_add_both"
STOP_ADD_CURRENT = "stop_add_current"
STOP_ADD_NOTHING = "stop_add_nothing"
CONTINUE_ADD_CURRENT = "continue_add_current"


class BettiTable:
    """Graded Betti numbers of S/I.

    ``data[j, i]`` is beta_{i, i+j}: columns are homological degrees, rows
    are strands. Comparison and rendering ignore trailing zero rows/columns.
    """

    def __init__(self, data):
        data = np.asarray(data, dtype=np.int64)
        if data.ndim != 2:
            raise ValueError("Betti table must be two-dimensional")
        if (data < 0).any():
            raise ValueError("negative Betti number")
        self.data = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BettiTable":
        return cls(np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def from_entries(cls, entries: dict[tuple[int, int], int]) -> "BettiTable":
        """Build from ``{(i, j): beta_{i,j}}`` with j the internal degree."""
        entries = {k: v for k, v in entries.items() if v}
        rows = max((j - i for i, j in entries), default=0) + 1
        cols = max((i for i, _ in entries), default=0) + 1
        data = np.zeros((rows, cols), dtype=np.int64)
        for (i, j), v in entries.items():
            if j < i:
                raise ValueError(f"beta_{{{i},{j}}} lies below the table")
            data[j - i, i] += v
        return cls(data)

    def beta(self, i: int, j: int) -> int:
        s = j - i
        if 0 <= s < self.data.shape[0] and 0 <= i < self.data.shape[1]:
            return int(self.data[s, i])
        return 0

    def entries(self) -> dict[tuple[int, int], int]:
        rows, cols = np.nonzero(self.data)
        return {(int(i), int(i + s)): int(self.data[s, i]) for s, i in zip(rows, cols)}

    def trimmed(self) -> np.ndarray:
        nz = np.argwhere(self.data)
        if nz.size == 0:
            return np.zeros((1, 1), dtype=np.int64)
        rows, cols = nz.max(axis=0) + 1
        return self.data[:rows, :cols].copy()

    @property
    def projdim(self) -> int:
        return self.trimmed().shape[1] - 1

    @property
    def regularity(self) -> int:
        return self.trimmed().shape[0] - 1

    def totals(self) -> list[int]:
        return self.trimmed().sum(axis=0).tolist()

    def is_zero(self) -> bool:
        return not self.data.any()

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        a, b = self.trimmed(), other.trimmed()
        return a.shape == b.shape and bool((a == b).all())

    def __repr__(self):
        return f"BettiTable({self.entries()})"


class MultigradedBetti(dict):
    """``{(i, multidegree): count}`` with zero counts omitted."""

    def add(self, i: int, multidegree: Iterable[int], count: int = 1):
        key = (i, tuple(int(e) for e in multidegree))
        self[key] = self.get(key, 0) + count

    def graded(self) -> BettiTable:
        entries: dict[tuple[int, int], int] = defaultdict(int)
        for (i, a), c in self.items():
            entries[i, sum(a)] += c
        return BettiTable.from_entries(entries)

    def at(self, i: int, multidegree: Iterable[int]) -> int:
        return self.get((i, tuple(multidegree)), 0)


def table_bounds(ideal: MonomialIdeal) -> tuple[int, int]:
    """``(a, b)``: column and row counts that always contain the table."""
    m = min(ideal.r, ideal.n)
    return m + 1, m * max(ideal.max_degree - 1, 0) + 1


@dataclass
class LayeredGraph:
    """Mutable state of the reduction.

    ``current`` and ``lower`` are sets of bitmask faces (sizes ``level`` and
    ``level + 1``); ``current_layer`` / ``lower_layer`` hold every admissible
    face of those sizes with their kernel data. ``edges[alpha][beta]`` is the
    scalar weight of a tracked pair; it is empty between passes.
    """

    ideal: MonomialIdeal
    field: Field
    start: str
    gens: np.ndarray
    level: int
    current: set[int]
    lower: set[int]
    current_layer: Layer
    lower_layer: Layer
    edges: dict[int, dict[int, object]] = field(default_factory=dict)
    target_degree: int | None = None
    backend: str | None = None
    expand_from: str = "all"
    cancellations: int = 0

    @property
    def lyubeznik(self) -> bool:
        return self.start == LYUBEZNIK

    def faces(self, which: str = "current") -> list[tuple[int, ...]]:
        layer = self.current_layer if which == "current" else self.lower_layer
        members = getattr(self, which)
        return [from_mask(m) for m in layer.masks if m in members]


def _participating(layer: Layer, target: int | None) -> set[int]:
    if target is None:
        return set(layer.masks)
    return {m for m, d in zip(layer.masks, layer.degree) if d == target}


def init_graph(ideal: MonomialIdeal, start: str = LYUBEZNIK, field: Field = QQ,
               backend: str | None = None, target_degree: int | None = None,
               expand_from: str = "all") -> LayeredGraph:
    """Level-0 graph: the empty face, the admissible singletons, no edges."""
    check_start(start)
    if ideal.r == 0:
        raise ValueError("the zero ideal has no generators to build a graph from")
    if expand_from not in ("all", "survivors"):
        raise ValueError(f"expand_from must be 'all' or 'survivors', got {expand_from!r}")
    gens = np.asarray(ideal.generators, dtype=np.int64)
    layer0, layer1 = first_layers(gens, start == LYUBEZNIK, backend)
    return LayeredGraph(
        ideal=ideal, field=field, start=start, gens=gens, level=0,
        current=_participating(layer0, target_degree),
        lower=_participating(layer1, target_degree),
        current_layer=layer0, lower_layer=layer1,
        target_degree=target_degree, backend=backend, expand_from=expand_from,
    )


def strand_counts(degrees: Iterable[int], i: int, shape: tuple[int, int]) -> np.ndarray:
    """Matrix counting faces of homological degree ``i`` by strand."""
    rows, cols = shape
    out = np.zeros((rows, cols), dtype=np.int64)
    for d in degrees:
        s = d - i
        if not (0 <= s < rows and 0 <= i < cols):
            raise AssertionError(f"face of size {i} and label degree {d} falls outside the {rows}x{cols} bound")
        out[s, i] += 1
    return out


def _layer_degrees(layer: Layer, members: set[int]) -> list[int]:
    rank = layer.rank
    return [layer.degree[rank[m]] for m in members]


def step_decision(i: int, r: int, n: int, current: set | list, lower: set | list) -> str:
    """Which branch of the stopping rule applies, tested in order."""
    if i == r - 1:
        return STOP_ADD_BOTH
    if i == n:
        return STOP_ADD_CURRENT
    if not current:
        return STOP_ADD_NOTHING
    if not lower:
        return STOP_ADD_CURRENT
    return CONTINUE_ADD_CURRENT


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low, low.bit_length() - 1
        mask ^= low


def _parity_below(mask: int, v: int) -> int:
    return bin(mask & ((1 << v) - 1)).count("1") & 1


def deform(G: LayeredGraph) -> LayeredGraph:
    """One pass of the reduction; moves the graph from level i to i + 1.

    Faces of size i + 2 are visited in lexicographic order. A face with no
    nonzero weight into ``lower`` survives; otherwise it is cancelled against
    the smallest such face ``tau`` and every pair (alpha, beta) reachable
    through the cancelled pair gets weight
    ``w(alpha, beta) - w(alpha, tau) * w(sigma, beta) / w(sigma, tau)``.
    """
    one = G.field(1)
    signs = (one, -one)
    zero = G.field(0)
    target = G.target_degree

    lower_layer = G.lower_layer
    if G.expand_from == "survivors":
        src = np.asarray([m for m in lower_layer.masks if m in G.lower], dtype=np.uint64)
        cand = build_layer(expand(src, G.ideal.r), lower_layer.size + 1, G.gens, G.lyubeznik, G.backend)
    else:
        cand = next_layer(lower_layer, G.gens, G.lyubeznik, G.backend)

    lower = G.lower
    lrank = lower_layer.rank
    lcover = lower_layer.cover
    crank = cand.rank
    upper: set[int] = set()
    out: dict[int, dict[int, object]] = {}
    inc: dict[int, set[int]] = defaultdict(set)
    cancelled = 0

    for s, sigma in enumerate(cand.masks):
        if target is not None and cand.degree[s] != target:
            continue
        row = out.get(sigma)
        reach = []
        if row:
            reach = [beta for beta, w in row.items() if w and beta in lower]
        fresh = []
        for low, v in _bits(cand.unit[s]):
            beta = sigma ^ low
            if beta in lower and (row is None or beta not in row):
                fresh.append((beta, v))
        if not reach and not fresh:
            upper.add(sigma)
            continue

        if row is None:
            row = out[sigma] = {}
        for beta, v in fresh:
            row[beta] = signs[_parity_below(sigma, v)]
            inc[beta].add(sigma)
            reach.append(beta)

        tau = min(reach, key=lrank.__getitem__)
        reach.remove(tau)
        w_st = row[tau]
        assert w_st, "cancellation through a zero weight"

        # faces above tau that share its label and come after sigma
        for low, v in _bits(lcover[lrank[tau]]):
            alpha = tau | low
            k = crank.get(alpha)
            if k is None or k <= s:
                continue
            arow = out.get(alpha)
            if arow is None:
                arow = out[alpha] = {}
            if alpha not in upper or tau not in arow:
                arow[tau] = signs[_parity_below(alpha, v)]
                inc[tau].add(alpha)
            upper.add(alpha)

        partners = [(alpha, out[alpha][tau]) for alpha in inc.get(tau, ())
                    if alpha in upper and crank[alpha] > s]
        if reach:
            for alpha, w_at in partners:
                if not w_at:
                    continue
                coef = w_at / w_st
                arow = out[alpha]
                for beta in reach:
                    delta = coef * row[beta]
                    cur = arow.get(beta)
                    if cur is None:
                        if alpha & beta == beta:
                            cur = signs[_parity_below(alpha, (alpha ^ beta).bit_length() - 1)]
                        else:
                            cur = zero
                        inc[beta].add(alpha)
                    arow[beta] = cur - delta

        upper.discard(sigma)
        lower.discard(tau)
        for beta in out.pop(sigma, {}):
            inc[beta].discard(sigma)
        for alpha in inc.pop(tau, ()):
            if alpha in out:
                out[alpha].pop(tau, None)
        cancelled += 1

    for alpha in upper:
        for beta, w in out.get(alpha, {}).items():
            if beta in lower and w:
                raise AssertionError("nonzero unit weight left after the pass")

    G.level += 1
    G.current, G.lower = lower, upper
    G.current_layer, G.lower_layer = lower_layer, cand
    G.edges = {}
    G.cancellations += cancelled
    return G


def _record_multigraded(mb: MultigradedBetti, G: LayeredGraph, members: set[int], i: int):
    gens = G.gens
    for m in members:
        idx = [k for k in range(gens.shape[0]) if m >> k & 1]
        label = gens[idx].max(axis=0) if idx else np.zeros(gens.shape[1], dtype=np.int64)
        mb.add(i, label.tolist())


def _reduce(ideal: MonomialIdeal, field: Field, start: str, backend, expand_from,
            multigraded: bool):
    n, r = ideal.n, ideal.r
    a, b = table_bounds(ideal)
    total = np.zeros((b, a), dtype=np.int64)
    mb = MultigradedBetti()
    if r == 0:
        total[0, 0] = 1
        mb.add(0, [0] * n)
        return BettiTable(total), mb

    G = init_graph(ideal, start, field, backend=backend, expand_from=expand_from)

    def add(layer, members, i):
        total[...] += strand_counts(_layer_degrees(layer, members), i, (b, a))
        if multigraded:
            _record_multigraded(mb, G, members, i)

    while True:
        i = G.level
        decision = step_decision(i, r, n, G.current, G.lower)
        if decision == STOP_ADD_NOTHING:
            break
        add(G.current_layer, G.current, i)
        if decision == STOP_ADD_BOTH:
            add(G.lower_layer, G.lower, i + 1)
            break
        if decision == STOP_ADD_CURRENT:
            break
        deform(G)
    return BettiTable(total), mb


def compute_betti_table(ideal: MonomialIdeal, field: Field = QQ, start: str = LYUBEZNIK,
                        backend: str | None = None, expand_from: str = "all") -> BettiTable:
    """Minimal graded Betti table of S/I over ``field``."""
    return _reduce(ideal, field, check_start(start), backend, expand_from, False)[0]


def compute_multigraded(ideal: MonomialIdeal, field: Field = QQ, start: str = LYUBEZNIK,
                        backend: str | None = None) -> MultigradedBetti:
    """Multigraded Betti numbers: surviving faces counted by label."""
    return _reduce(ideal, field, check_start(start), backend, "all", True)[1]


def compute_both(ideal: MonomialIdeal, field: Field = QQ, start: str = LYUBEZNIK,
                 backend: str | None = None) -> tuple[BettiTable, MultigradedBetti]:
    return _reduce(ideal, field, check_start(start), backend, "all", True)
