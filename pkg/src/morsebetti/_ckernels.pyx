# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled per-face kernel; same contract as ``_kernels_py.face_data``."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t

cnp.import_array()


def face_data(masks, gens, bint lyubeznik):
    cdef uint64_t[::1] m_view = np.ascontiguousarray(masks, dtype=np.uint64)
    cdef int64_t[:, ::1] g = np.ascontiguousarray(gens, dtype=np.int64)
    cdef Py_ssize_t F = m_view.shape[0]
    cdef Py_ssize_t r = g.shape[0]
    cdef Py_ssize_t n = g.shape[1] if r > 0 else 0

    keep_arr = np.ones(F, dtype=np.bool_)
    deg_arr = np.zeros(F, dtype=np.int64)
    unit_arr = np.zeros(F, dtype=np.uint64)
    cover_arr = np.zeros(F, dtype=np.uint64)
    cdef cnp.npy_bool[::1] keep = keep_arr
    cdef int64_t[::1] deg = deg_arr
    cdef uint64_t[::1] unit = unit_arr
    cdef uint64_t[::1] cover = cover_arr

    lab_arr = np.zeros(max(n, 1), dtype=np.int64)
    cnt_arr = np.zeros(max(n, 1), dtype=np.int64)
    suf_arr = np.zeros(max(n, 1), dtype=np.int64)
    cdef int64_t[::1] lab = lab_arr
    cdef int64_t[::1] cnt = cnt_arr
    cdef int64_t[::1] suf = suf_arr

    cdef Py_ssize_t f, k, x
    cdef uint64_t m, bit, um, cm
    cdef int64_t e, d
    cdef bint ok, nonempty

    for f in range(F):
        m = m_view[f]
        for x in range(n):
            lab[x] = 0
            cnt[x] = 0
        for k in range(r):
            if (m >> k) & 1:
                for x in range(n):
                    e = g[k, x]
                    if e > lab[x]:
                        lab[x] = e
                        cnt[x] = 1
                    elif e == lab[x] and e > 0:
                        cnt[x] += 1
        d = 0
        for x in range(n):
            d += lab[x]
        deg[f] = d

        um = 0
        cm = 0
        for k in range(r):
            bit = (<uint64_t>1) << k
            ok = True
            if m & bit:
                for x in range(n):
                    e = g[k, x]
                    if e > 0 and e == lab[x] and cnt[x] == 1:
                        ok = False
                        break
                if ok:
                    um |= bit
            else:
                for x in range(n):
                    if g[k, x] > lab[x]:
                        ok = False
                        break
                if ok:
                    cm |= bit
        unit[f] = um
        cover[f] = cm

        if lyubeznik:
            for x in range(n):
                suf[x] = 0
            nonempty = False
            for k in range(r - 1, -1, -1):
                if nonempty:
                    ok = True
                    for x in range(n):
                        if g[k, x] > suf[x]:
                            ok = False
                            break
                    if ok:
                        keep[f] = False
                        break
                if (m >> k) & 1:
                    nonempty = True
                    for x in range(n):
                        if g[k, x] > suf[x]:
                            suf[x] = g[k, x]
    return keep_arr, deg_arr, unit_arr, cover_arr
