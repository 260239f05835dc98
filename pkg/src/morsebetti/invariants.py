"""Critical sets, the bounds they force, and vanishing checks on Betti tables."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .engine import BettiTable, MultigradedBetti
from .faces import face_label
from .monomials import MonomialIdeal, degree

DEFAULT_CRITICAL_CAP = 20


class CapExceeded(ValueError):
    pass


@dataclass
class CriticalReport:
    critical: list[tuple[int, ...]]
    labels: list[tuple[int, ...]]
    p: int
    r: int


@dataclass
class Violation:
    kind: str
    detail: str
    where: tuple = field(default=())

    def __str__(self):
        return f"{self.kind}: {self.detail}"


def is_critical(face, ideal: MonomialIdeal) -> bool:
    """Label changes when removing any member or adding any non-member."""
    face = tuple(sorted(face))
    m = face_label(face, ideal)
    for v in face:
        if face_label(tuple(x for x in face if x != v), ideal) == m:
            return False
    for v in range(ideal.r):
        if v not in face and face_label(face + (v,), ideal) == m:
            return False
    return True


def _all_labels(ideal: MonomialIdeal) -> np.ndarray:
    r, n = ideal.r, ideal.n
    L = np.zeros((1 << r, n), dtype=np.int32)
    gens = np.asarray(ideal.generators, dtype=np.int32).reshape(r, n)
    for k in range(r):
        L[1 << k: 1 << (k + 1)] = np.maximum(L[: 1 << k], gens[k])
    return L


def pr_invariants(ideal: MonomialIdeal, cap: int = DEFAULT_CRITICAL_CAP) -> CriticalReport:
    """Exhaustive scan of all generator subsets for critical ones."""
    r = ideal.r
    if r > cap:
        raise CapExceeded(f"critical-set scan over 2^{r} subsets exceeds cap 2^{cap}")
    L = _all_labels(ideal)
    idx = np.arange(1 << r)
    critical = np.ones(1 << r, dtype=bool)
    for v in range(r):
        same = (L == L[idx ^ (1 << v)]).all(axis=1)
        critical &= ~same
    faces, labels = [], []
    p = rr = 0
    for mask in np.flatnonzero(critical).tolist():
        face = tuple(k for k in range(r) if mask >> k & 1)
        lab = tuple(L[mask].tolist())
        faces.append(face)
        labels.append(lab)
        p = max(p, len(face))
        rr = max(rr, degree(lab) - len(face))
    return CriticalReport(faces, labels, p, rr)


def check_bounds(table: BettiTable, report: CriticalReport) -> bool:
    """projdim >= p and reg >= r; a False return means a wrong table."""
    return table.projdim >= report.p and table.regularity >= report.r


def critical_nonvanishing(table: BettiTable, report: CriticalReport) -> list[Violation]:
    out = []
    for face, lab in zip(report.critical, report.labels):
        if table.beta(len(face), degree(lab)) == 0:
            out.append(Violation("critical", f"critical set {face} but beta_{{{len(face)},{degree(lab)}}} = 0", face))
    return out


def graded_window_violations(table: BettiTable, width: int) -> list[Violation]:
    """beta_{i,k} = 0 for k = j..j+width-1 must force beta_{i+1,j+width} = 0."""
    out = []
    for (i1, J), c in sorted(table.entries().items()):
        i = i1 - 1
        if i < 0:
            continue
        j = J - width
        if not any(table.beta(i, k) for k in range(j, j + width)):
            out.append(Violation("graded", f"beta_{{{i1},{J}}} = {c} but beta_{{{i},k}} = 0 for k in {j}..{J - 1}", (i1, J)))
    return out


def tail_shift_violations(table: BettiTable, d: int) -> list[Violation]:
    """beta_{i,k} = 0 for all k >= j must force beta_{i+1,k+d} = 0 for all k >= j."""
    out = []
    ent = table.entries()
    for i1 in range(1, table.data.shape[1]):
        top = max((J for (a, J) in ent if a == i1), default=None)
        if top is None:
            continue
        prev = max((J for (a, J) in ent if a == i1 - 1), default=None)
        if prev is None or top > prev + d:
            out.append(Violation("tail", f"column {i1} reaches degree {top}, column {i1 - 1} only {prev} (d={d})", (i1, top)))
    return out


def multigraded_violations(mb: MultigradedBetti, ideal: MonomialIdeal) -> list[Violation]:
    """beta_{i,b} = 0 for all a <= b < a + a_l must force beta_{i+1,a+a_l} = 0.

    Only nonzero beta_{i+1,c} can break the implication, so each is checked
    against every generator exponent a_l with a = c - a_l >= 0.
    """
    support: dict[int, list[tuple]] = {}
    for (i, a), cnt in mb.items():
        if cnt:
            support.setdefault(i, []).append(a)
    out = []
    for (i1, c), cnt in sorted(mb.items()):
        if not cnt or i1 == 0:
            continue
        lower = support.get(i1 - 1, [])
        for l, al in enumerate(ideal.generators):
            a = tuple(x - y for x, y in zip(c, al))
            if min(a) < 0:
                continue
            hit = any(all(ai <= bi <= ci for ai, bi, ci in zip(a, b, c)) and b != c for b in lower)
            if not hit:
                out.append(Violation("multigraded", f"beta_{{{i1},{c}}} = {cnt} with no support in [{a}, {c}) for generator {l}", (i1, c, l)))
    return out


def verify_vanishing(betti: BettiTable | MultigradedBetti, ideal: MonomialIdeal) -> list[Violation]:
    """All violations of the window vanishing; empty on every correct table."""
    d = ideal.max_degree
    if isinstance(betti, MultigradedBetti):
        return multigraded_violations(betti, ideal) + graded_window_violations(betti.graded(), d)
    return graded_window_violations(betti, d)


def verify_all(table: BettiTable, ideal: MonomialIdeal, mb: MultigradedBetti | None = None,
               cap: int = DEFAULT_CRITICAL_CAP) -> list[Violation]:
    """Every table check this module offers; the critical scan is skipped past ``cap``."""
    out = list(verify_vanishing(mb if mb is not None else table, ideal))
    out += tail_shift_violations(table, ideal.max_degree)
    if ideal.r <= cap:
        report = pr_invariants(ideal, cap)
        if not check_bounds(table, report):
            out.append(Violation("bounds", f"projdim={table.projdim} reg={table.regularity} vs p={report.p} r={report.r}"))
        out += critical_nonvanishing(table, report)
    return out
