"""Vectorized numpy fallback for the per-face kernel."""
from __future__ import annotations

import numpy as np

CHUNK = 2048


def face_data(masks, gens, lyubeznik):
    """Per-face combinatorial data for a batch of bitmask faces.

    Returns ``(keep, degree, unit, cover)``:

    keep
        False for faces in the Lyubeznik exclusion set (always True when
        ``lyubeznik`` is off).
    degree
        total degree of the face label.
    unit
        bitmask of members ``v`` with ``m_{face - v} == m_face``.
    cover
        bitmask of non-members ``v`` with ``u_v | m_face``.
    """
    masks = np.asarray(masks, dtype=np.uint64)
    gens = np.asarray(gens, dtype=np.int64)
    F = masks.shape[0]
    keep = np.ones(F, dtype=bool)
    deg = np.zeros(F, dtype=np.int64)
    unit = np.zeros(F, dtype=np.uint64)
    cover = np.zeros(F, dtype=np.uint64)
    if F == 0:
        return keep, deg, unit, cover
    r = gens.shape[0]
    bits = np.arange(r, dtype=np.uint64)
    weights = np.left_shift(np.uint64(1), bits)
    for lo in range(0, F, CHUNK):
        hi = min(F, lo + CHUNK)
        mem = ((masks[lo:hi, None] >> bits[None, :]) & np.uint64(1)).astype(bool)
        G = np.where(mem[:, :, None], gens[None, :, :], 0)
        lab = G.max(axis=1)
        deg[lo:hi] = lab.sum(axis=1)

        at_max = (G == lab[:, None, :]) & mem[:, :, None] & (G > 0)
        cnt = at_max.sum(axis=1)
        # removing v keeps the label iff v never holds a unique maximum
        unique_max = at_max & (cnt[:, None, :] == 1)
        is_unit = mem & ~unique_max.any(axis=2)
        unit[lo:hi] = (is_unit.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)

        divides = (gens[None, :, :] <= lab[:, None, :]).all(axis=2)
        is_cover = ~mem & divides
        cover[lo:hi] = (is_cover.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)

        if lyubeznik:
            # suffix[:, k] = lcm of members > k
            suf = np.maximum.accumulate(G[:, ::-1, :], axis=1)[:, ::-1, :]
            above = np.zeros_like(suf)
            above[:, :-1, :] = suf[:, 1:, :]
            has_above = np.zeros_like(mem)
            has_above[:, :-1] = np.logical_or.accumulate(mem[:, ::-1], axis=1)[:, ::-1][:, 1:]
            hit = (gens[None, :, :] <= above).all(axis=2) & has_above
            keep[lo:hi] = ~hit.any(axis=1)
    return keep, deg, unit, cover
