"""Kazhdan-Lusztig polynomials, mu function, cells and cell characters.

The table kernel lives in _klcore (compiled) with _klpure as the
fallback; which one got picked is exposed as KERNEL.
"""

import numpy as np

from .laurent import LaurentPoly

try:  # pragma: no cover - depends on the build
    from . import _klcore as _kernel
    KERNEL = "compiled"
except ImportError:
    from . import _klpure as _kernel
    KERNEL = "pure"


class KLTable:
    """All KL polynomials P_{y,w} and mu values of a finite group.

    Polynomials use the classical variable q; ask kl_poly(..., var="v")
    for the coefficient ring at v with P(v) = P_q(v^2).
    """

    def __init__(self, group, backend=None):
        if backend == "pure":
            from . import _klpure as k
        elif backend == "compiled":
            from . import _klcore as k
        else:
            k = _kernel
        self.group = group
        self.backend = getattr(k, "NAME", KERNEL)
        self.polys, self.rows, self.brows, self.mus = k.build_table(
            group.ngens, group.lmul, group.length, group.left_desc)
        self._mu_dict = None

    def bruhat(self, y, w):
        return bool(self.brows[w][y])

    def poly(self, y, w):
        """Coefficient tuple of P_{y,w} in q (empty tuple = 0)."""
        return self.polys[self.rows[w][y]]

    def kl_poly(self, y, w, var="q"):
        p = LaurentPoly({e: c for e, c in enumerate(self.poly(y, w)) if c})
        if var == "v":
            return p.subs_square()
        if var != "q":
            raise ValueError("var must be 'q' or 'v'")
        return p

    def mu(self, y, w):
        """mu(y, w) for l(y) < l(w) (0 when not defined/zero)."""
        if self._mu_dict is None:
            md = {}
            for w2, (zs, ms) in enumerate(self.mus):
                for z, m in zip(zs, ms):
                    md[(int(z), w2)] = int(m)
            self._mu_dict = md
        return self._mu_dict.get((y, w), 0)

    def mu_tilde(self, x, z):
        """Symmetrized mu."""
        if self.group.length[x] < self.group.length[z]:
            return self.mu(x, z)
        return self.mu(z, x)


def _scc(n, adj):
    """Iterative Tarjan; returns component id per node (reverse
    topological numbering)."""
    index = np.full(n, -1, dtype=np.int64)
    low = np.zeros(n, dtype=np.int64)
    on = np.zeros(n, dtype=bool)
    comp = np.full(n, -1, dtype=np.int64)
    stack, counter, ncomp = [], 0, 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on[v] = True
            recurse = False
            nbrs = adj[v]
            for i in range(pi, len(nbrs)):
                u = nbrs[i]
                if index[u] < 0:
                    work[-1] = (v, i + 1)
                    work.append((u, 0))
                    recurse = True
                    break
                elif on[u]:
                    low[v] = min(low[v], index[u])
            if recurse:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                while True:
                    u = stack.pop()
                    on[u] = False
                    comp[u] = ncomp
                    if u == v:
                        break
                ncomp += 1
    return comp, ncomp


def left_edges(kl):
    """Left preorder edges w -> z meaning z <=_L w."""
    g = kl.group
    adj = [[] for _ in range(g.order)]
    full = (1 << g.ngens) - 1
    for w in range(g.order):
        dw = int(g.left_desc[w])
        for s in range(g.ngens):
            if not (dw >> s) & 1:
                adj[w].append(int(g.lmul[s, w]))
        zs, _ = kl.mus[w]
        for z in zs:
            z = int(z)
            if int(g.left_desc[z]) & ~dw & full:
                adj[w].append(z)
    return adj


def _cells_from_comp(comp, ncomp):
    cells = [[] for _ in range(ncomp)]
    for i, c in enumerate(comp):
        cells[c].append(i)
    cells.sort(key=lambda c: c[0])
    cid = np.empty(len(comp), dtype=np.int32)
    for k, c in enumerate(cells):
        cid[c] = k
    return [np.array(c, dtype=np.int32) for c in cells], cid


def left_cells(kl):
    """(cells, cell_id), cells ordered by minimal element index."""
    comp, ncomp = _scc(kl.group.order, left_edges(kl))
    return _cells_from_comp(comp, ncomp)


def right_cells(kl):
    cells, _ = left_cells(kl)
    inv = kl.group.inv
    rcells = sorted(
        (sorted(int(inv[x]) for x in c) for c in cells),
        key=lambda c: c[0])
    cid = np.empty(kl.group.order, dtype=np.int32)
    for k, c in enumerate(rcells):
        cid[c] = k
    return [np.array(c, dtype=np.int32) for c in rcells], cid


def two_sided_cells(kl):
    g = kl.group
    adj = left_edges(kl)
    both = [list(ws) for ws in adj]
    for w in range(g.order):
        iw = int(g.inv[w])
        for z in adj[iw]:
            both[w].append(int(g.inv[z]))
    comp, ncomp = _scc(g.order, both)
    return _cells_from_comp(comp, ncomp)


def cell_matrices(kl, cell):
    """Generator action matrices on the cell module at v = 1.

    s.e_x = -e_x when sx < x, otherwise e_x plus mu-neighbours of x in
    the cell that have s as a descent.
    """
    g = kl.group
    cell = [int(x) for x in cell]
    pos = {x: k for k, x in enumerate(cell)}
    nloc = len(cell)
    mats = []
    mu_in = {}
    for x in cell:
        zs, ms = kl.mus[x]
        for z, m in zip(zs, ms):
            if int(z) in pos:
                mu_in[(int(z), x)] = int(m)
                mu_in[(x, int(z))] = int(m)
    for s in range(g.ngens):
        M = np.zeros((nloc, nloc), dtype=np.int64)
        for x in cell:
            j = pos[x]
            if (int(g.left_desc[x]) >> s) & 1:
                M[j, j] = -1
            else:
                M[j, j] = 1
                for z in cell:
                    if (int(g.left_desc[z]) >> s) & 1 and (x, z) in mu_in:
                        M[pos[z], j] += mu_in[(x, z)]
        mats.append(M)
    return mats


def cell_character(kl, cell):
    """Character of the cell module, as values on the canonical
    conjugacy class reps (a list of ints)."""
    g = kl.group
    mats = cell_matrices(kl, cell)
    _, _, reps = g.conjugacy_classes()
    vals = []
    for r in reps:
        word = g.words[r]
        M = np.eye(len(cell), dtype=np.int64)
        for s in word:
            M = mats[s] @ M
        vals.append(int(np.trace(M)))
    return vals


def diamond_cell_image(dia, cell):
    """Image of a cell under a diagram automorphism (a sorted list)."""
    return sorted(int(dia.elem_map[int(x)]) for x in cell)
