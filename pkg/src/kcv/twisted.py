"""Diagram automorphisms, twisted conjugacy and twisted involutions.

An automorphism d (written ^diamond in the docs) permutes the simple
reflections and preserves the Coxeter matrix.  Twisted conjugation is
w -> x^d w x^-1, and w is a twisted involution when w^d = w^-1.
"""

import numpy as np

from .coxeter import build_group
from .errors import (UnsupportedType, NotInvolutionClass,
                     NotTwistedInvolution, GroupMismatch)


class DiagramAutomorphism:
    """An automorphism of W permuting the simple reflections.

    gen_map[s] is the image generator index; root_map the induced
    permutation of root indices; elem_map[i] the index of w_i^diamond.
    """

    def __init__(self, group, gen_map):
        gen_map = tuple(gen_map)
        if sorted(gen_map) != list(range(group.ngens)):
            raise UnsupportedType("gen_map is not a permutation of S")
        M = group.coxeter_matrix()
        for a in range(group.ngens):
            for b in range(group.ngens):
                if M[a][b] != M[gen_map[a]][gen_map[b]]:
                    raise UnsupportedType(
                        "map does not preserve the Coxeter matrix")
        self.group = group
        self.gen_map = gen_map
        self.root_map = self._derive_root_map()
        self.elem_map = self._derive_elem_map()
        self.is_identity = gen_map == tuple(range(group.ngens))

    def _derive_root_map(self):
        g = self.group
        n2 = 2 * g.npos
        rm = np.full(n2, -1, dtype=np.int32)
        frontier = []
        for s in range(g.ngens):
            a = g.simple_root_index[s]
            b = g.simple_root_index[self.gen_map[s]]
            rm[a] = b
            rm[(a + g.npos) % n2] = (b + g.npos) % n2
        frontier = [i for i in range(n2) if rm[i] >= 0]
        while frontier:
            nxt = []
            for r in frontier:
                for s in range(g.ngens):
                    r2 = int(g.gen_perms[s][r])
                    if rm[r2] < 0:
                        # d(s(r)) = d(s)(d(r))
                        rm[r2] = int(g.gen_perms[self.gen_map[s]][rm[r]])
                        nxt.append(r2)
            frontier = nxt
        assert (rm >= 0).all()
        return rm

    def _derive_elem_map(self):
        g = self.group
        if self.gen_map == tuple(range(g.ngens)):
            return np.arange(g.order, dtype=np.int32)
        out = np.empty(g.order, dtype=np.int32)
        for i in range(g.order):
            out[i] = g.word_to_index([self.gen_map[s] for s in g.words[i]])
        return out

    def __call__(self, i):
        return int(self.elem_map[i])

    @property
    def order(self):
        d, k = self.gen_map, 1
        cur = d
        while tuple(cur) != tuple(range(len(d))):
            cur = [d[x] for x in cur]
            k += 1
        return k

    def is_ordinary(self):
        """True when products over each diamond-orbit pair have order
        2 or 3 (so the extended group is again a Coxeter group)."""
        M = self.group.coxeter_matrix()
        for s in range(self.group.ngens):
            t = self.gen_map[s]
            if t != s and M[s][t] not in (2, 3):
                return False
        return True

    def __repr__(self):
        return "DiagramAutomorphism(%s, %s)" % (self.group, self.gen_map)


def identity_automorphism(group):
    return DiagramAutomorphism(group, range(group.ngens))


def diagram_automorphism(group):
    """The standard nontrivial diagram automorphism, when one exists.

    A_n (n>1): reversal; D_n: swap the fork u <-> s1; F4: reversal
    (long/short duality); I2(m): swap the two generators.  Type B has
    none; raises UnsupportedType there.
    """
    k = group.ngens
    if group.series == "A" and group.rank >= 2:
        return DiagramAutomorphism(group, range(k - 1, -1, -1))
    if group.series == "D":
        gm = list(range(k))
        gm[0], gm[1] = 1, 0
        return DiagramAutomorphism(group, gm)
    if group.series == "F4":
        return DiagramAutomorphism(group, (3, 2, 1, 0))
    if group.series == "I2":
        return DiagramAutomorphism(group, (1, 0))
    raise UnsupportedType(
        "%s has no nontrivial diagram automorphism" % (group,))


def w0_conjugation(group):
    """The automorphism s -> w0 s w0 (identity when w0 is central)."""
    w0 = group.longest_element()
    gm = []
    for s in range(group.ngens):
        x = group.mult(group.mult(w0, group.rmul[s, 0]), w0)
        word = group.words[x]
        if len(word) != 1:
            raise RuntimeError("w0 conjugation did not permute S")
        gm.append(word[0])
    return DiagramAutomorphism(group, gm)


def twisted_conjugacy_classes(dia):
    """Partition of W into twisted conjugacy classes.

    Returns (classes, class_id, reps) like conjugacy_classes; classes
    ordered by minimal element index.
    """
    g = dia.group
    n = g.order
    cid = np.full(n, -1, dtype=np.int32)
    classes = []
    dgen = [dia.gen_map[s] for s in range(g.ngens)]
    for start in range(n):
        if cid[start] >= 0:
            continue
        c = len(classes)
        cid[start] = c
        orbit = [start]
        stack = [start]
        while stack:
            x = stack.pop()
            for s in range(g.ngens):
                y = int(g.lmul[dgen[s], g.rmul[s, x]])
                if cid[y] < 0:
                    cid[y] = c
                    orbit.append(y)
                    stack.append(y)
        classes.append(np.array(sorted(orbit), dtype=np.int32))
    reps = [int(c[0]) for c in classes]
    return classes, cid, reps


def is_twisted_involution(dia, i):
    return int(dia.elem_map[i]) == int(dia.group.inv[i])


def twisted_involutions(dia):
    g = dia.group
    return [i for i in range(g.order) if is_twisted_involution(dia, i)]


def twisted_involution_classes(dia):
    """Twisted conjugacy classes consisting of twisted involutions."""
    classes, _, reps = twisted_conjugacy_classes(dia)
    return [c for c, r in zip(classes, reps) if is_twisted_involution(dia, r)]


def twisted_centralizer(dia, w):
    """Indices x with x^d * w = w * x."""
    g = dia.group
    out = []
    for x in range(g.order):
        if g.mult(int(dia.elem_map[x]), w) == g.mult(w, x):
            out.append(x)
    return out


def _stable_subsets(dia):
    """Diamond-stable subsets of S ordered by size then lex."""
    from itertools import combinations
    k = dia.group.ngens
    for size in range(k + 1):
        for I in combinations(range(k), size):
            if sorted(dia.gen_map[s] for s in I) == list(I):
                yield I


def minimal_twisted_rep(dia, C):
    """A minimal-length representative of the class C in standard form.

    Returns (I, w_I) with I a diamond-stable subset of S, w_I the
    longest element of W_I lying in C, satisfying s^d w_I = w_I s for
    all s in I.  Raises NotInvolutionClass when C does not consist of
    twisted involutions.
    """
    g = dia.group
    C = set(int(x) for x in C)
    for x in C:
        if not is_twisted_involution(dia, x):
            raise NotInvolutionClass(
                "element %d is not a twisted involution" % x)
    minlen = min(int(g.length[x]) for x in C)
    for I in _stable_subsets(dia):
        par = g.parabolic(I)
        wI = par.longest
        if int(g.length[wI]) != minlen or wI not in C:
            continue
        if all(int(g.lmul[dia.gen_map[s], wI]) == int(g.rmul[s, wI])
               for s in I):
            return I, wI
    raise RuntimeError("no standard minimal representative found")


def moved_roots(dia, w):
    """Indices of positive roots a with w(a) = -(a^d)."""
    g = dia.group
    n = g.npos
    neg_d = (dia.root_map[:n] + n) % (2 * n)
    return [a for a in range(n) if int(g.P[w][a]) == int(neg_d[a])]


def howlett_decomposition(dia, I, wI):
    """Split the twisted centralizer of w_I as Y . W_I.

    Returns (Y, WI, C) where Y is the set of centralizer elements
    permuting the simple roots of I, WI the parabolic subgroup
    elements, C the whole centralizer.  Every c in C factors uniquely
    as y*w with y in Y, w in W_I.
    """
    g = dia.group
    C = twisted_centralizer(dia, wI)
    simple_I = {g.simple_root_index[s] for s in I}
    Y = [y for y in C
         if {int(g.P[y][a]) for a in simple_I} == simple_I]
    WI = g.parabolic(I).elements
    return Y, WI, C


class BnPair:
    """D_n sitting inside B_n, giving the extended group of (D_n, swap).

    B_n plays the role of the extended group: its extra generator t
    realizes the diagram swap of D_n by conjugation.  embed maps D_n
    element indices to B_n indices (u -> t s1 t, s_i -> s_i); W_n
    denotes the image.  The extended length on B_n is just the B_n
    length, and it splits as (D-length) + (number of sign changes).
    """

    def __init__(self, n, max_order=10 ** 6):
        if n < 2:
            raise UnsupportedType("need n >= 2")
        self.n = n
        self.B = build_group("B", n, max_order=max_order)
        self.D = build_group("D", n, max_order=max_order)
        self.t = int(self.B.rmul[0, 0])
        emb = np.empty(self.D.order, dtype=np.int32)
        for i in range(self.D.order):
            word = []
            for s in self.D.words[i]:
                word.extend((0, 1, 0) if s == 0 else (s,))
            emb[i] = self.B.word_to_index(word)
        self.embed = emb
        back = {int(b): d for d, b in enumerate(emb)}
        self._back = back

    def in_Wn(self, b_idx):
        return int(b_idx) in self._back

    def to_D(self, b_idx):
        return self._back[int(b_idx)]

    def t_conj(self, b_idx):
        b = self.B
        return b.mult(self.t, b.mult(int(b_idx), self.t))

    def diamond_D(self):
        """The D_n diagram swap pulled back through the embedding."""
        dia = diagram_automorphism(self.D)
        for i in (0, 1):  # spot check against t-conjugation
            assert int(self.embed[dia.elem_map[self.D.rmul[i, 0]]]) == \
                self.t_conj(self.embed[self.D.rmul[i, 0]])
        return dia

    def sign_change_count(self, b_idx):
        _, signs = self.B.signed_perm(int(b_idx))
        return sum(1 for x in signs if x < 0)
