"""Kottwitz characters and the twisted involution modules.

Upsilon_w is induced from the sign-like linear character eps_w of the
twisted centralizer of w; the same character is afforded by the
Lusztig-Vogan module on the twisted class of w, and by the explicit
(-1)^l(w) description at a minimal-length representative.  All three
are implemented separately so they can be compared.
"""

from fractions import Fraction

import numpy as np

from .errors import NotTwistedInvolution, SubgroupMismatch
from .twisted import (twisted_centralizer, is_twisted_involution,
                      moved_roots, minimal_twisted_rep,
                      howlett_decomposition)


def epsilon_values(dia, w):
    """The linear character eps_w on the twisted centralizer of w.

    Returns (centralizer_elements, {x: +-1}).  eps_w(x) counts sign
    flips of x on the positive roots a with w(a) = -(a^diamond).
    """
    g = dia.group
    if not is_twisted_involution(dia, w):
        raise NotTwistedInvolution("w=%d" % w)
    C = twisted_centralizer(dia, w)
    phi = moved_roots(dia, w)
    vals = {}
    for x in C:
        k = sum(1 for a in phi if int(g.P[x][a]) >= g.npos)
        vals[x] = -1 if k % 2 else 1
    return C, vals


def induce_function(table, H, psi):
    """Induce a subgroup class function given elementwise to W.

    H: subgroup element indices; psi: dict index -> value.
    """
    g = table.group
    sums = [Fraction(0)] * len(table.class_sizes)
    for h in H:
        c = int(table.class_id[h])
        sums[c] += psi[h]
    return [s * g.order / (len(H) * sz)
            for s, sz in zip(sums, table.class_sizes)]


def upsilon(table, dia, w):
    """Kottwitz' character for the twisted involution w (class values)."""
    H, psi = epsilon_values(dia, w)
    return induce_function(table, H, psi)


def upsilon_minimal(table, dia, C):
    """Same character, from the minimal representative (I, w_I).

    Uses the splitting of the centralizer as Y x W_I, on which eps is
    (-1)^(length of the W_I part).
    """
    g = table.group
    I, wI = minimal_twisted_rep(dia, C)
    par = g.parabolic(I)
    H = twisted_centralizer(dia, wI)
    psi = {}
    for c in H:
        x = par.coset_rep(c)
        lw = int(g.length[c]) - int(g.length[x])
        psi[c] = -1 if lw % 2 else 1
    return induce_function(table, H, psi)


def upsilon_class_union(table, dia, classes):
    """Sum of upsilon over a union of twisted involution classes."""
    tot = None
    for C in classes:
        u = upsilon(table, dia, int(C[0]))
        tot = u if tot is None else [a + b for a, b in zip(tot, u)]
    return tot


class _SignedPermRep:
    """A representation where generators act by signed permutations of
    a fixed basis."""

    def __init__(self, group, basis, perms, signs):
        self.group = group
        self.basis = basis
        self.perms = perms      # per generator: list target position
        self.signs = signs      # per generator: list of +-1

    def trace(self, elem):
        word = self.group.words[elem]
        n = len(self.basis)
        tr = 0
        for b in range(n):
            pos, sg = b, 1
            for s in reversed(word):
                sg *= self.signs[s][pos]
                pos = self.perms[s][pos]
            if pos == b:
                tr += sg
        return tr

    def class_values(self, table):
        return [Fraction(self.trace(r)) for r in table.reps]

    def check_relations(self):
        """Generator order relations on a few random basis vectors."""
        g = self.group
        M = g.coxeter_matrix()
        n = len(self.basis)
        for a in range(g.ngens):
            for b in range(a, g.ngens):
                word = (a, b) * M[a][b]
                for start in range(min(n, 20)):
                    pos, sg = start, 1
                    for s in reversed(word):
                        sg *= self.signs[s][pos]
                        pos = self.perms[s][pos]
                    assert pos == start and sg == 1, (a, b)


def lv_representation(dia, C):
    """The Lusztig-Vogan module on a twisted involution class C."""
    g = dia.group
    basis = sorted(int(x) for x in C)
    pos = {x: k for k, x in enumerate(basis)}
    perms, signs = [], []
    for s in range(g.ngens):
        sd = dia.gen_map[s]
        p = [0] * len(basis)
        sg = [1] * len(basis)
        for x in basis:
            ws = int(g.rmul[s, x])
            if int(g.lmul[sd, x]) == ws and g.length[ws] < g.length[x]:
                p[pos[x]] = pos[x]
                sg[pos[x]] = -1
            else:
                p[pos[x]] = pos[int(g.lmul[sd, ws])]
        perms.append(p)
        signs.append(sg)
    return _SignedPermRep(g, basis, perms, signs)


def lv_character(table, dia, C):
    rep = lv_representation(dia, C)
    return rep.class_values(table)


def modified_representation(bgroup, C):
    """The modified involution module of the extended group (type B).

    C is an ordinary conjugacy class of involutions in B_n = the
    extended group; t acts by plain conjugation, s_i as in the
    Lusztig-Vogan module but with the extended length.
    """
    basis = sorted(int(x) for x in C)
    pos = {x: k for k, x in enumerate(basis)}
    for x in basis:
        if bgroup.mult(x, x) != 0:
            raise NotTwistedInvolution("class is not made of involutions")
    perms, signs = [], []
    for s in range(bgroup.ngens):
        p = [0] * len(basis)
        sg = [1] * len(basis)
        for x in basis:
            xs = int(bgroup.rmul[s, x])
            sx = int(bgroup.lmul[s, x])
            if s == 0:
                p[pos[x]] = pos[int(bgroup.lmul[s, xs])]
            elif sx == xs and bgroup.length[xs] < bgroup.length[x]:
                p[pos[x]] = pos[x]
                sg[pos[x]] = -1
            else:
                p[pos[x]] = pos[int(bgroup.lmul[s, xs])]
        perms.append(p)
        signs.append(sg)
    return _SignedPermRep(bgroup, basis, perms, signs)


def modified_upsilon(table, C):
    """Character of the modified involution module on a class of
    involutions of the extended group (table must be the B_n table)."""
    if table.group.series != "B":
        raise SubgroupMismatch("modified module lives in type B")
    rep = modified_representation(table.group, C)
    return rep.class_values(table)
