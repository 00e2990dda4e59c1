"""Pure-python kernel for the Kazhdan-Lusztig table recursion.

Polynomials are interned coefficient tuples in the classical variable q
(so P_{y,w}(v) in the v-convention is the same tuple read at v^2).
build_table is the reference implementation; _klcore provides the same
function compiled.
"""

import numpy as np


def build_table(ngens, lmul, length, left_desc, progress=None):
    """Compute all KL polynomials of the group.

    lmul: (ngens, n) table of left generator multiplication; length:
    lengths; left_desc: left-descent bitmasks.  Elements must be
    indexed in a length-increasing order.

    Returns (polys, rows, brows, mus):
      polys: list of coefficient tuples, polys[0] = 0, polys[1] = 1
      rows:  rows[w][y] is the intern id of P_{y,w}
      brows: rows of the Bruhat order as bool arrays
      mus:   per w, a pair (z_indices, mu_values) of nonzero mu(z, w)
    """
    n = len(length)
    polys = [(), (1,)]
    intern = {(): 0, (1,): 1}
    rows = []
    brows = []
    mus = []
    for w in range(n):
        lw = int(length[w])
        if lw == 0:
            row = np.zeros(n, dtype=np.int32)
            row[0] = 1
            br = np.zeros(n, dtype=bool)
            br[0] = True
            rows.append(row)
            brows.append(br)
            mus.append((np.zeros(0, np.int32), np.zeros(0, np.int32)))
            continue
        d = int(left_desc[w])
        s = (d & -d).bit_length() - 1
        lmuls = lmul[s]
        wp = int(lmuls[w])
        br = brows[wp] | brows[wp][lmuls]
        br[w] = True
        row = np.zeros(n, dtype=np.int32)
        row[w] = 1          # before the loop: the ascent case may hit sy == w
        rowwp = rows[wp]
        zarr, marr = mus[wp]
        zlist = [(rows[int(z)], int(m), (lw - int(length[z])) >> 1)
                 for z, m in zip(zarr, marr) if (int(left_desc[z]) >> s) & 1]
        ys = np.nonzero(br)[0]
        for y in ys[::-1]:
            y = int(y)
            if y == w:
                continue
            sy = int(lmuls[y])
            if length[sy] > length[y]:
                row[y] = row[sy]
                continue
            a = polys[rowwp[sy]]
            b = polys[rowwp[y]]
            # c = a + q*b - sum_z mu(z,wp) q^((lw-lz)/2) P_{y,z}
            c = list(a) + [0] * max(0, len(b) + 1 - len(a))
            for k, v in enumerate(b):
                c[k + 1] += v
            for rowz, m, sh in zlist:
                pid = rowz[y]
                if pid:
                    p = polys[pid]
                    if sh + len(p) > len(c):
                        c.extend([0] * (sh + len(p) - len(c)))
                    for k, v in enumerate(p):
                        c[sh + k] -= m * v
            while c and not c[-1]:
                c.pop()
            t = tuple(c)
            pid = intern.get(t)
            if pid is None:
                pid = len(polys)
                polys.append(t)
                intern[t] = pid
            row[y] = pid
        rows.append(row)
        brows.append(br)
        zs, ms = [], []
        for y in ys:
            y = int(y)
            if y == w:
                continue
            diff = lw - int(length[y])
            if diff & 1:
                p = polys[row[y]]
                dd = (diff - 1) >> 1
                if len(p) > dd and p[dd]:
                    zs.append(y)
                    ms.append(p[dd])
        mus.append((np.array(zs, np.int32), np.array(ms, np.int32)))
        if progress is not None and w % 256 == 0:
            progress(w, n)
    return polys, rows, brows, mus
