"""Labelled faces of the Taylor and Lyubeznik simplicial resolutions.

Faces are sorted tuples of 0-based generator indices. The engine itself
works with bitmasks (bit ``k`` set when generator ``k`` is a member); the
helpers at the bottom convert between the two.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .monomials import Monomial, MonomialIdeal, divides, lcm_all, quotient

Face = tuple[int, ...]

TAYLOR = "taylor"
LYUBEZNIK = "lyubeznik"
STARTS = (LYUBEZNIK, TAYLOR)


class FaceError(ValueError):
    pass


def check_start(start: str) -> str:
    if start not in STARTS:
        raise FaceError(f"unknown start complex {start!r}; expected one of {STARTS}")
    return start


def make_face(members: Iterable[int]) -> Face:
    face = tuple(sorted(members))
    if len(set(face)) != len(face):
        raise FaceError(f"repeated member in {face}")
    return face


def face_label(face: Sequence[int], ideal: MonomialIdeal) -> Monomial:
    """lcm of the generators indexed by ``face``; the empty face gives 1."""
    r = ideal.r
    for k in face:
        if not 0 <= k < r:
            raise FaceError(f"index {k} out of range 0..{r - 1}")
    return lcm_all((ideal.generators[k] for k in face), ideal.n)


def sign(v: int, face: Sequence[int]) -> int:
    """(-1)**(q-1) where v is the q-th smallest member of ``face``."""
    face = sorted(face)
    try:
        q = face.index(v)
    except ValueError:
        raise FaceError(f"{v} is not a member of {tuple(face)}") from None
    return -1 if q % 2 else 1


def lyu_member(face: Sequence[int], ideal: MonomialIdeal) -> bool:
    """True when some generator ``u_k`` divides the label of ``{j in face : j > k}``.

    Such faces are excluded from the Lyubeznik complex. Suffix labels are
    accumulated right to left in a single pass.
    """
    gens = ideal.generators
    members = set(face)
    suffix = [0] * ideal.n
    nonempty = False
    for k in range(ideal.r - 1, -1, -1):
        if nonempty and divides(gens[k], tuple(suffix)):
            return True
        if k in members:
            nonempty = True
            for x, e in enumerate(gens[k]):
                if e > suffix[x]:
                    suffix[x] = e
    return False


def differential_coefficient(sigma: Sequence[int], tau: Sequence[int],
                             ideal: MonomialIdeal) -> tuple[int, Monomial]:
    """Coefficient of ``1_tau`` in the Taylor differential of ``1_sigma``.

    Returns ``(sign, m_sigma / m_tau)``; the coefficient is a field unit
    exactly when the quotient is 1.
    """
    sigma, tau = tuple(sorted(sigma)), tuple(sorted(tau))
    missing = set(sigma) - set(tau)
    if len(sigma) != len(tau) + 1 or not set(tau) <= set(sigma) or len(missing) != 1:
        raise FaceError(f"{tau} is not a facet of {sigma}")
    (v,) = missing
    return sign(v, sigma), quotient(face_label(sigma, ideal), face_label(tau, ideal))


def is_admissible(face: Sequence[int], ideal: MonomialIdeal, start: str) -> bool:
    return check_start(start) == TAYLOR or not lyu_member(face, ideal)


def enumerate_admissible_faces(i: int, ideal: MonomialIdeal, start: str) -> list[Face]:
    """All size-``i`` faces of the chosen complex, in lexicographic order."""
    check_start(start)
    if not 0 <= i <= ideal.r:
        return []
    return [f for f in combinations(range(ideal.r), i) if is_admissible(f, ideal, start)]


def to_mask(face: Iterable[int]) -> int:
    m = 0
    for k in face:
        m |= 1 << k
    return m


def from_mask(mask: int) -> Face:
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


def mask_sign(v: int, mask: int) -> int:
    """sign(v, face) for a bitmask face containing v."""
    return -1 if bin(mask & ((1 << v) - 1)).count("1") % 2 else 1
