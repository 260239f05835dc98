"""Brute-force ground truth.

Betti numbers are read off the Taylor complex tensored with the field: in
multidegree ``a`` that complex has a basis of faces labelled exactly ``a``
and keeps only the differential entries between equal labels, which are the
plain simplicial signs. Ranks are computed by exact elimination. Nothing here
shares code with the reduction engine.
"""
from __future__ import annotations

from collections import defaultdict
from itertools import combinations
from typing import Iterable, Sequence

from .engine import BettiTable, MultigradedBetti
from .fields import QQ, Field
from .monomials import MonomialIdeal

MAX_ORACLE_GENERATORS = 12
MAX_COMPLEX_VERTICES = 20


class OracleError(ValueError):
    pass


def rank_integer(rows: list[list[int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return 0
    m, n = len(A), len(A[0])
    rank = 0
    prev = 1
    for col in range(n):
        piv = next((k for k in range(rank, m) if A[k][col]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        p = A[rank][col]
        for k in range(rank + 1, m):
            a = A[k][col]
            row_k, row_p = A[k], A[rank]
            for c in range(col, n):
                row_k[c] = (p * row_k[c] - a * row_p[c]) // prev
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    A = [[x % p for x in r] for r in rows]
    A = [r for r in A if any(r)]
    if not A:
        return 0
    m, n = len(A), len(A[0])
    rank = 0
    for col in range(n):
        piv = next((k for k in range(rank, m) if A[k][col]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][col], -1, p)
        row_p = [x * inv % p for x in A[rank]]
        A[rank] = row_p
        for k in range(m):
            if k != rank and A[k][col]:
                f = A[k][col]
                A[k] = [(x - f * y) % p for x, y in zip(A[k], row_p)]
        rank += 1
        if rank == m:
            break
    return rank


def matrix_rank(rows: list[list[int]], field: Field = QQ) -> int:
    if field.characteristic == 0:
        return rank_integer(rows)
    return rank_mod_p(rows, field.characteristic)


def _simplicial_sign(v: int, face: Sequence[int]) -> int:
    return -1 if face.index(v) % 2 else 1


def boundary_matrix(faces_hi: Sequence[tuple], faces_lo: Sequence[tuple]) -> list[list[int]]:
    """Rows indexed by ``faces_hi``, columns by ``faces_lo``; entry is the sign
    of the deleted vertex when the low face is a facet of the high one."""
    index = {f: k for k, f in enumerate(faces_lo)}
    M = []
    for f in faces_hi:
        row = [0] * len(faces_lo)
        for v in f:
            g = tuple(x for x in f if x != v)
            k = index.get(g)
            if k is not None:
                row[k] = _simplicial_sign(v, f)
        M.append(row)
    return M


def chain_homology(layers: dict[int, list[tuple]], field: Field = QQ) -> dict[int, int]:
    """Homology dimensions of a complex whose degree-``k`` basis is ``layers[k]``
    (faces) and whose differential is the simplicial one restricted to it."""
    if not layers:
        return {}
    lo, hi = min(layers), max(layers)
    ranks = {}
    for k in range(lo + 1, hi + 1):
        a, b = layers.get(k, []), layers.get(k - 1, [])
        ranks[k] = matrix_rank(boundary_matrix(a, b), field) if a and b else 0
    out = {}
    for k in range(lo, hi + 1):
        dim = len(layers.get(k, []))
        out[k] = dim - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return out


def _taylor_labels(ideal: MonomialIdeal) -> dict[tuple, list[tuple]]:
    r, n = ideal.r, ideal.n
    if r > MAX_ORACLE_GENERATORS:
        raise OracleError(f"oracle limited to {MAX_ORACLE_GENERATORS} generators, got {r}")
    groups: dict[tuple, list[tuple]] = defaultdict(list)
    for size in range(r + 1):
        for face in combinations(range(r), size):
            label = [0] * n
            for k in face:
                for x, e in enumerate(ideal.generators[k]):
                    label[x] = max(label[x], e)
            groups[tuple(label)].append(face)
    return groups


def _betti_of_group(faces: list[tuple], field: Field) -> dict[int, int]:
    layers: dict[int, list[tuple]] = defaultdict(list)
    for f in faces:
        layers[len(f)].append(f)
    return chain_homology(dict(layers), field)


def oracle_multigraded_betti(ideal: MonomialIdeal, field: Field, multidegree: Sequence[int]) -> dict[int, int]:
    """``{i: beta_{i,a}}`` for one multidegree ``a`` (zeros omitted)."""
    a = tuple(multidegree)
    if len(a) != ideal.n:
        raise OracleError("multidegree length differs from the number of variables")
    faces = _taylor_labels(ideal).get(a, [])
    return {i: c for i, c in _betti_of_group(faces, field).items() if c}


def oracle_multigraded(ideal: MonomialIdeal, field: Field = QQ) -> MultigradedBetti:
    mb = MultigradedBetti()
    for label, faces in _taylor_labels(ideal).items():
        for i, c in _betti_of_group(faces, field).items():
            if c < 0:
                raise AssertionError("negative homology dimension")
            if c:
                mb.add(i, label, c)
    return mb


def oracle_betti_table(ideal: MonomialIdeal, field: Field = QQ) -> BettiTable:
    return oracle_multigraded(ideal, field).graded()


def _closed_faces(faces: Iterable[Iterable[int]]) -> set[tuple]:
    out = {tuple(sorted(f)) for f in faces}
    for f in out:
        for k in range(len(f)):
            if f[:k] + f[k + 1:] not in out:
                raise OracleError(f"face list not closed under subsets: {f} present, {f[:k] + f[k + 1:]} missing")
    return out


def reduced_cohomology(faces: Iterable[Iterable[int]], field: Field = QQ) -> dict[int, int]:
    """Reduced (co)homology dimensions, dimension ``-1`` up to the top face.

    ``faces`` must be closed under taking subsets; the empty face is added
    if missing (a nonempty complex always contains it).
    """
    fs = {tuple(sorted(f)) for f in faces}
    if fs:
        fs.add(())
    fs = _closed_faces(fs)
    verts = {v for f in fs for v in f}
    if len(verts) > MAX_COMPLEX_VERTICES:
        raise OracleError(f"more than {MAX_COMPLEX_VERTICES} vertices")
    if not fs:
        return {}
    layers: dict[int, list[tuple]] = defaultdict(list)
    for f in sorted(fs):
        layers[len(f) - 1].append(f)
    return chain_homology(dict(layers), field)


def faces_from_nonfaces(n: int, nonfaces: Iterable[Iterable[int]]) -> list[tuple]:
    """Expand a complex on ``range(n)`` given by its minimal nonfaces."""
    if n > MAX_COMPLEX_VERTICES:
        raise OracleError(f"more than {MAX_COMPLEX_VERTICES} vertices")
    bad = [frozenset(g) for g in nonfaces]
    out = []
    for size in range(n + 1):
        for f in combinations(range(n), size):
            s = set(f)
            if not any(g <= s for g in bad):
                out.append(f)
    return out
