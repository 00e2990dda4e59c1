# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled kernel for the Kazhdan-Lusztig table recursion.

Same contract as _klpure.build_table; the polynomial combination runs
on C buffers and only the interning touches Python objects.
"""

import numpy as np
cimport numpy as cnp
from libc.string cimport memset

NAME = "compiled"

DEF MAXDEG = 256


def build_table(ngens, lmul, length, left_desc, progress=None):
    cdef cnp.ndarray[cnp.int32_t, ndim=2] lm = np.ascontiguousarray(
        lmul, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] ln = np.ascontiguousarray(
        length, dtype=np.int32)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] ld = np.ascontiguousarray(
        left_desc, dtype=np.int64)
    cdef Py_ssize_t n = ln.shape[0]
    cdef list polys = [(), (1,)]
    cdef dict intern = {(): 0, (1,): 1}
    cdef list rows = []
    cdef list brows = []
    cdef list mus = []
    cdef list ptups
    cdef cnp.ndarray[cnp.int32_t, ndim=1] row, rowwp
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] br
    cdef cnp.int64_t[MAXDEG] c
    cdef Py_ssize_t w, y, sy, wp, k, clen, sh, plen, nz, i
    cdef int lw, s, pid
    cdef long m1
    cdef tuple a, b, p, t
    cdef object pidobj

    for w in range(n):
        lw = ln[w]
        if lw == 0:
            row = np.zeros(n, dtype=np.int32)
            row[0] = 1
            br8 = np.zeros(n, dtype=np.uint8)
            br8[0] = 1
            rows.append(row)
            brows.append(br8.view(np.bool_))
            mus.append((np.zeros(0, np.int32), np.zeros(0, np.int32)))
            continue
        d = int(ld[w])
        s = (d & -d).bit_length() - 1
        wp = lm[s, w]
        brwp = brows[wp]
        brv = brwp | brwp[lm[s]]
        brv[w] = True
        br = brv.view(np.uint8)
        row = np.zeros(n, dtype=np.int32)
        row[w] = 1      # the ascent case below may reference sy == w
        rowwp = rows[wp]
        zarr, marr = mus[wp]
        zrows = []
        zms = []
        zshs = []
        for i in range(len(zarr)):
            z = int(zarr[i])
            if (int(ld[z]) >> s) & 1:
                zrows.append(rows[z])
                zms.append(int(marr[i]))
                zshs.append((lw - ln[z]) >> 1)
        nz = len(zrows)
        cdef_ys = np.nonzero(brv)[0]
        for y in cdef_ys[::-1]:
            if y == w:
                continue
            sy = lm[s, y]
            if ln[sy] > ln[y]:
                row[y] = row[sy]
                continue
            a = polys[rowwp[sy]]
            b = polys[rowwp[y]]
            clen = len(a)
            if len(b) + 1 > clen:
                clen = len(b) + 1
            memset(c, 0, clen * sizeof(cnp.int64_t))
            for k in range(len(a)):
                c[k] = a[k]
            for k in range(len(b)):
                c[k + 1] += b[k]
            for i in range(nz):
                rowz = zrows[i]
                pid = rowz[y]
                if pid:
                    p = polys[pid]
                    sh = zshs[i]
                    m1 = zms[i]
                    plen = len(p)
                    if sh + plen > clen:
                        memset(c + clen, 0,
                               (sh + plen - clen) * sizeof(cnp.int64_t))
                        clen = sh + plen
                    for k in range(plen):
                        c[sh + k] -= m1 * p[k]
            while clen and c[clen - 1] == 0:
                clen -= 1
            t = tuple([c[k] for k in range(clen)])
            pidobj = intern.get(t)
            if pidobj is None:
                pidobj = len(polys)
                polys.append(t)
                intern[t] = pidobj
            row[y] = pidobj
        rows.append(row)
        brows.append(brv)
        zs = []
        ms = []
        for y in cdef_ys:
            if y == w:
                continue
            diff = lw - ln[y]
            if diff & 1:
                p = polys[row[y]]
                k = (diff - 1) >> 1
                if len(p) > k and p[k]:
                    zs.append(y)
                    ms.append(p[k])
        mus.append((np.array(zs, np.int32), np.array(ms, np.int32)))
        if progress is not None and w % 256 == 0:
            progress(w, n)
    return polys, rows, brows, mus
