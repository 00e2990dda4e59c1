"""Finite Coxeter groups of types A, B, D, F4 and I2(m).

Elements are stored as permutations of the root indices.  Positive roots
get indices 0..N-1 and the negative of root i is root i+N, so the length
of w is the number of i < N with w(i) >= N.  Enumeration is breadth-first
by length with ties broken by the lexicographically smallest reduced
word, and that order is the canonical element index used everywhere else
in the package.

Roots of the crystallographic types are integer vectors (F4 scaled by 2
to avoid half-integers).  For I2(m) the roots are the angle indices
k = 0..2m-1, where root k sits at angle k*pi/m and the reflection
negating root a sends k to (2a + m - k) mod 2m.
"""

from fractions import Fraction
import numpy as np

from .errors import UnsupportedType, CapExceeded, GroupMismatch

_THEORETICAL_ORDER = {
    "A": lambda r, m: _factorial(r + 1),
    "B": lambda r, m: (1 << r) * _factorial(r),
    "D": lambda r, m: (1 << (r - 1)) * _factorial(r),
    "F4": lambda r, m: 1152,
    "I2": lambda r, m: 2 * m,
}


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _simple_roots(series, rank, m):
    """Simple roots as integer vectors, or None for I2 (combinatorial)."""
    if series == "A":
        if rank < 1:
            raise UnsupportedType("A_n needs rank >= 1")
        dim = rank + 1
        return [_unit(dim, i) - _unit(dim, i - 1) for i in range(1, dim)]
    if series == "B":
        if rank < 2:
            raise UnsupportedType("B_n needs rank >= 2")
        roots = [_unit(rank, 0)]
        roots += [_unit(rank, i) - _unit(rank, i - 1) for i in range(1, rank)]
        return roots
    if series == "D":
        if rank < 2:
            raise UnsupportedType("D_n needs rank >= 2")
        roots = [_unit(rank, 0) + _unit(rank, 1)]
        roots += [_unit(rank, i) - _unit(rank, i - 1) for i in range(1, rank)]
        return roots
    if series == "F4":
        if rank != 4:
            raise UnsupportedType("F4 has rank 4")
        return [np.array(v, dtype=object) for v in
                [(0, 2, -2, 0), (0, 0, 2, -2), (0, 0, 0, 2), (1, -1, -1, -1)]]
    raise UnsupportedType("unknown series %r" % (series,))


def _unit(dim, i):
    v = np.zeros(dim, dtype=object)
    v[i] = 1
    return v


def _close_roots(simples):
    """All roots from the simples, with simple-basis coefficients.

    Returns (pos_vectors, simple_perms) where simple_perms[s] is the
    permutation each generator induces on root indices 0..2N-1.
    """
    k = len(simples)
    norms = [int(np.dot(a, a)) for a in simples]
    # track (vector, coeffs in simple basis); coeffs stay one-signed
    seen = {}
    pos = []

    def key(v):
        return tuple(int(x) for x in v)

    frontier = []
    for i, a in enumerate(simples):
        c = [0] * k
        c[i] = 1
        seen[key(a)] = tuple(c)
        pos.append((a, tuple(c)))
        frontier.append((a, tuple(c)))
    while frontier:
        nxt = []
        for v, c in frontier:
            for s in range(k):
                coef = 2 * int(np.dot(v, simples[s]))
                if coef % norms[s]:
                    raise UnsupportedType("non-crystallographic root data")
                coef //= norms[s]
                w = v - coef * simples[s]
                cc = list(c)
                cc[s] -= coef
                if all(x >= 0 for x in cc):
                    kk = key(w)
                    if kk not in seen:
                        seen[kk] = tuple(cc)
                        pos.append((w, tuple(cc)))
                        nxt.append((w, tuple(cc)))
        frontier = nxt
    # canonical positive-root order: by height then coefficient tuple
    pos.sort(key=lambda vc: (sum(vc[1]), vc[1]))
    vectors = [v for v, _ in pos]
    n = len(vectors)
    idx = {key(v): i for i, v in enumerate(vectors)}
    for i, v in enumerate(vectors):
        idx[key(-v)] = i + n
    perms = []
    for s in range(k):
        p = np.empty(2 * n, dtype=np.int16)
        for i in range(2 * n):
            v = vectors[i] if i < n else -vectors[i - n]
            coef = 2 * int(np.dot(v, simples[s])) // norms[s]
            p[i] = idx[key(v - coef * simples[s])]
        perms.append(p)
    return vectors, perms


def _i2_perms(m):
    perms = []
    for a in (0, m - 1):
        p = np.array([(2 * a + m - kk) % (2 * m) for kk in range(2 * m)],
                     dtype=np.int16)
        perms.append(p)
    return perms


class CoxeterGroup:
    """A finite Coxeter group with its full element list.

    Heavy code works with integer element indices; the Element wrapper
    is a thin convenience layer.  Do not construct directly, use
    build_group().
    """

    def __init__(self, series, rank, m, max_order):
        if series not in _THEORETICAL_ORDER:
            raise UnsupportedType("unknown series %r" % (series,))
        if series == "I2":
            if rank != 2:
                raise UnsupportedType("I2 has rank 2")
            if m is None or m < 3:
                raise UnsupportedType("I2(m) needs m >= 3")
        elif m is not None:
            raise UnsupportedType("m only makes sense for I2")
        expected = _THEORETICAL_ORDER[series](rank, m)
        if expected > max_order:
            raise CapExceeded(
                "order %d exceeds cap %d" % (expected, max_order))
        self.series = series
        self.rank = rank
        self.m = m
        if series == "I2":
            self.root_vectors = None
            self.npos = m
            sperms = _i2_perms(m)
            self.simple_root_index = [0, m - 1]
            self.gen_names = ["s1", "s2"]
        else:
            vectors, sperms = _close_roots(_simple_roots(series, rank, m))
            self.root_vectors = vectors
            self.npos = len(vectors)
            vk = {tuple(int(x) for x in v): i for i, v in enumerate(vectors)}
            simples = _simple_roots(series, rank, m)
            self.simple_root_index = [
                vk[tuple(int(x) for x in a)] for a in simples]
            if series == "A":
                self.gen_names = ["s%d" % i for i in range(1, rank + 1)]
            elif series == "B":
                self.gen_names = ["t"] + ["s%d" % i for i in range(1, rank)]
            elif series == "D":
                self.gen_names = ["u"] + ["s%d" % i for i in range(1, rank)]
            else:
                self.gen_names = ["s%d" % i for i in range(4)]
        self.ngens = len(sperms)
        self.gen_perms = sperms
        self._enumerate(expected)
        self._build_tables()
        self._classes = None
        self._reflections = None

    # -- construction ------------------------------------------------

    def _enumerate(self, expected):
        n2 = 2 * self.npos
        ident = np.arange(n2, dtype=np.int16)
        perms = [ident]
        words = [()]
        index = {ident.tobytes(): 0}
        level = [0]
        while level:
            nxt = []
            for i in level:
                pi = perms[i]
                for s in range(self.ngens):
                    # l(ws) > l(w) iff w(alpha_s) is positive
                    if pi[self.simple_root_index[s]] < self.npos:
                        q = pi[self.gen_perms[s]]
                        b = q.tobytes()
                        if b not in index:
                            index[b] = len(perms)
                            perms.append(q)
                            words.append(words[i] + (s,))
                            nxt.append(index[b])
                            if len(perms) > expected:
                                raise CapExceeded("enumeration overran")
            level = nxt
        self.order = len(perms)
        if self.order != expected:
            raise RuntimeError(
                "enumerated %d elements, expected %d" % (self.order, expected))
        self.P = np.vstack(perms)
        self.words = words
        self._index = index
        self.length = np.array([len(w) for w in words], dtype=np.int32)

    def _build_tables(self):
        n = self.order
        self.lmul = np.empty((self.ngens, n), dtype=np.int32)
        self.rmul = np.empty((self.ngens, n), dtype=np.int32)
        for s in range(self.ngens):
            sp = self.gen_perms[s]
            right = self.P[:, sp]          # (w s)(a) = w(s(a))
            left = sp[self.P]              # (s w)(a) = s(w(a))
            for i in range(n):
                self.rmul[s, i] = self._index[right[i].tobytes()]
                self.lmul[s, i] = self._index[left[i].tobytes()]
        self.inv = np.empty(n, dtype=np.int32)
        q = np.empty(2 * self.npos, dtype=np.int16)
        ar = np.arange(2 * self.npos, dtype=np.int16)
        for i in range(n):
            q[self.P[i]] = ar
            self.inv[i] = self._index[q.tobytes()]
        # left descent bitmasks, used for Bruhat tests and cell edges
        self.left_desc = np.zeros(n, dtype=np.int64)
        self.right_desc = np.zeros(n, dtype=np.int64)
        for s in range(self.ngens):
            self.left_desc |= (self.length[self.lmul[s]]
                               < self.length).astype(np.int64) << s
            self.right_desc |= (self.length[self.rmul[s]]
                                < self.length).astype(np.int64) << s

    # -- basic operations --------------------------------------------

    def index_of_perm(self, perm):
        return self._index[np.asarray(perm, dtype=np.int16).tobytes()]

    def mult(self, i, j):
        """Index of w_i * w_j."""
        return self._index[self.P[i][self.P[j]].tobytes()]

    def word_to_index(self, word):
        i = 0
        for s in word:
            i = self.rmul[s, i]
        return i

    def power(self, i, k):
        out = 0
        for _ in range(k):
            out = self.mult(out, i)
        return out

    def first_left_descent(self, i):
        d = int(self.left_desc[i])
        if d == 0:
            return None
        return (d & -d).bit_length() - 1

    def bruhat_leq(self, y, w):
        """Bruhat order test on element indices."""
        while True:
            if y == w:
                return True
            if self.length[y] >= self.length[w]:
                return False
            s = self.first_left_descent(w)
            w = self.lmul[s, w]
            sy = self.lmul[s, y]
            if self.length[sy] < self.length[y]:
                y = sy

    def longest_element(self):
        return int(np.argmax(self.length))

    # -- conjugacy classes -------------------------------------------

    def conjugacy_classes(self):
        """(classes, class_id, reps): canonical order by minimal index."""
        if self._classes is None:
            n = self.order
            cid = np.full(n, -1, dtype=np.int32)
            classes = []
            for start in range(n):
                if cid[start] >= 0:
                    continue
                c = len(classes)
                cid[start] = c
                orbit = [start]
                stack = [start]
                while stack:
                    x = stack.pop()
                    for s in range(self.ngens):
                        y = self.lmul[s, self.rmul[s, x]]
                        if cid[y] < 0:
                            cid[y] = c
                            orbit.append(y)
                            stack.append(y)
                classes.append(np.array(sorted(orbit), dtype=np.int32))
            reps = [int(c[0]) for c in classes]
            self._classes = (classes, cid, reps)
        return self._classes

    def class_of(self, i):
        return int(self.conjugacy_classes()[1][i])

    def reflections(self):
        """Set of indices acting as reflections (conjugates of gens)."""
        if self._reflections is None:
            classes, cid, _ = self.conjugacy_classes()
            out = set()
            for s in range(self.ngens):
                g = self.rmul[s, 0]
                out.update(int(x) for x in classes[cid[g]])
            self._reflections = frozenset(out)
        return self._reflections

    # -- signed permutations (types A, B, D) -------------------------

    def signed_perm(self, i):
        """(perm, signs) of the coordinate action, types A/B/D only.

        perm[j] = k and signs[j] = e mean w(e_j) = e * e_k.
        For type A all signs are +1.
        """
        if self.series not in ("A", "B", "D"):
            raise UnsupportedType("signed_perm needs series A, B or D")
        dim = self.rank + 1 if self.series == "A" else self.rank
        perm = list(range(dim))
        signs = [1] * dim
        # accumulate g <- g*s along the reduced word
        for s in self.words[i]:
            if self.series == "A":
                p, q = s, s + 1
            elif s > 0:
                p, q = s - 1, s
            elif self.series == "B":
                signs[0] = -signs[0]        # t negates e_0
                continue
            else:
                # u sends e_0 -> -e_1, e_1 -> -e_0
                perm[0], perm[1] = perm[1], perm[0]
                signs[0], signs[1] = -signs[1], -signs[0]
                continue
            perm[p], perm[q] = perm[q], perm[p]
            signs[p], signs[q] = signs[q], signs[p]
        return perm, signs

    def signed_cycle_type(self, i):
        """Cycle data of the coordinate action.

        Type A: a single partition.  Types B/D: a bipartition
        (positive cycle lengths, negative cycle lengths), each sorted
        decreasing.
        """
        perm, signs = self.signed_perm(i)
        seen = [False] * len(perm)
        pos, neg = [], []
        for j in range(len(perm)):
            if seen[j]:
                continue
            ln, sg, k = 0, 1, j
            while not seen[k]:
                seen[k] = True
                sg *= signs[k]
                ln += 1
                k = perm[k]
            (pos if sg == 1 else neg).append(ln)
        pos.sort(reverse=True)
        neg.sort(reverse=True)
        if self.series == "A":
            return tuple(pos)
        return (tuple(pos), tuple(neg))

    # -- parabolics --------------------------------------------------

    def parabolic(self, gens):
        return ParabolicData(self, gens)

    def subgroup_closure(self, seed):
        """Indices of the subgroup generated by the given element indices."""
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in seed:
                    y = self.mult(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def element(self, i):
        return Element(self, int(i))

    def coxeter_matrix(self):
        k = self.ngens
        M = [[1] * k for _ in range(k)]
        for a in range(k):
            for b in range(a + 1, k):
                x = self.mult(self.rmul[a, 0], self.rmul[b, 0])
                o, y = 1, x
                while y != 0:
                    y = self.mult(y, x)
                    o += 1
                M[a][b] = M[b][a] = o
        return M

    def __repr__(self):
        if self.series == "I2":
            return "CoxeterGroup(I2(%d))" % self.m
        if self.series == "F4":
            return "CoxeterGroup(F4)"
        return "CoxeterGroup(%s%d)" % (self.series, self.rank)


class ParabolicData:
    """Standard parabolic subgroup W_I with its coset data.

    elements: sorted indices of W_I; longest: index of the longest
    element of W_I; coset_reps: the minimal-length representatives of
    the left cosets wW_I (so every w factors uniquely as x*u with
    additive lengths).
    """

    def __init__(self, group, gens):
        self.group = group
        self.gens = tuple(sorted(gens))
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for s in self.gens:
                    y = int(group.rmul[s, x])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        self.elements = sorted(seen)
        self.longest = max(self.elements, key=lambda i: int(group.length[i]))
        covered = np.zeros(group.order, dtype=bool)
        reps = []
        rep_of = np.empty(group.order, dtype=np.int32)
        for i in range(group.order):
            if covered[i]:
                continue
            reps.append(i)
            for u in self.elements:
                j = group.mult(i, u)
                covered[j] = True
                rep_of[j] = i
        self.coset_reps = reps
        self._rep_of = rep_of

    def coset_rep(self, i):
        """Minimal-length representative of i * W_I."""
        return int(self._rep_of[i])


class Element:
    """Thin wrapper over (group, index)."""

    __slots__ = ("group", "idx")

    def __init__(self, group, idx):
        self.group = group
        self.idx = idx

    @property
    def length(self):
        return int(self.group.length[self.idx])

    @property
    def word(self):
        return self.group.words[self.idx]

    def act_on_root(self, r):
        return int(self.group.P[self.idx][r])

    def __mul__(self, other):
        if self.group is not other.group:
            raise GroupMismatch("elements of different groups")
        return Element(self.group, self.group.mult(self.idx, other.idx))

    def inverse(self):
        return Element(self.group, int(self.group.inv[self.idx]))

    def __eq__(self, other):
        return (isinstance(other, Element) and self.group is other.group
                and self.idx == other.idx)

    def __hash__(self):
        return hash((id(self.group), self.idx))

    def __repr__(self):
        w = ".".join(self.group.gen_names[s] for s in self.word)
        return "<%s>" % (w or "e")


def build_group(series, rank, m=None, max_order=10 ** 6):
    """Build a finite Coxeter group.

    series in {"A","B","D","F4","I2"}; rank is the Coxeter rank; m is
    the dihedral order parameter for I2(m).  Raises CapExceeded if the
    theoretical order exceeds max_order, UnsupportedType for bad input.
    """
    return CoxeterGroup(series, rank, m, max_order)
