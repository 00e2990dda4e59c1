"""Ordinary character tables of the supported Coxeter groups.

Types A and B get Murnaghan-Nakayama style recursions on (bi)partition
labels.  Types D and F4 are computed generically by splitting the class
algebra into common eigenspaces (all values are rational there), then
labelled: D against restrictions from B_n, F4 by degree and b-invariant.
I2(m) uses exact cyclotomic values.

Class functions are plain lists of values (Fraction/int, or Cyc for
I2), aligned with the canonical conjugacy class order of the group.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from .cyclo import Cyc
from .errors import (SubgroupMismatch, NonUniqueJInduction,
                     InconsistentSplit, UnsupportedType)


# ----------------------------------------------------------------- #
# partitions and border strips

def partitions(n, cap=None):
    """All partitions of n as decreasing tuples."""
    if n == 0:
        yield ()
        return
    if cap is None:
        cap = n
    for first in range(min(n, cap), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def bipartitions(n):
    for a in range(n + 1):
        for alpha in partitions(a):
            for beta in partitions(n - a):
                yield (alpha, beta)


def conjugate_partition(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def n_invariant(lam):
    """n(lambda) = sum (i-1) lambda_i."""
    return sum(i * p for i, p in enumerate(lam))


@lru_cache(maxsize=None)
def _strips(lam, k):
    """Removals of a border strip of size k: tuples (newlam, height)."""
    L = len(lam)
    if L == 0 or k > sum(lam):
        return ()
    beta = [lam[i] + (L - 1 - i) for i in range(L)]
    bset = set(beta)
    out = []
    for b in beta:
        if b >= k and (b - k) not in bset:
            nb = sorted(((x if x != b else b - k) for x in beta),
                        reverse=True)
            height = sum(1 for x in beta if b - k < x < b)
            nl = tuple(nb[i] - (L - 1 - i) for i in range(L))
            out.append((tuple(p for p in nl if p), height))
    return tuple(out)


@lru_cache(maxsize=None)
def symmetric_character(lam, mu):
    """chi^lam at the class of cycle type mu, in S_n."""
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    return sum((-1) ** h * symmetric_character(nl, rest)
               for nl, h in _strips(lam, k))


@lru_cache(maxsize=None)
def hyperoctahedral_character(alpha, beta, cycles):
    """chi~^(alpha,beta) at the class with the given signed cycles.

    cycles is a tuple of (length, sign) pairs; sign +1 for a positive
    cycle, -1 for a negative one.  The label ((n), ()) is the trivial
    character and ((), (n)) the character counting sign changes.
    """
    if not cycles:
        return 1 if not alpha and not beta else 0
    (k, eps), rest = cycles[0], cycles[1:]
    val = sum((-1) ** h * hyperoctahedral_character(na, beta, rest)
              for na, h in _strips(alpha, k))
    val += eps * sum((-1) ** h * hyperoctahedral_character(alpha, nb, rest)
                     for nb, h in _strips(beta, k))
    return val


def _two_cos(N, e):
    """zeta^e + zeta^-e in Q(zeta_N), exponents may collide."""
    c = {}
    for x in (e, -e):
        c[x % N] = c.get(x % N, 0) + 1
    return Cyc(N, c)


def signed_cycles(label):
    mp, mm = label
    return tuple([(k, 1) for k in mp] + [(k, -1) for k in mm])


# ----------------------------------------------------------------- #
# reflection character, used for b-invariants via symmetric powers

def _gauss_solve(cols, target):
    """Solve sum x_j cols[j] = target exactly (Fractions)."""
    dim, k = len(cols[0]), len(cols)
    A = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(target[i])]
         for i in range(dim)]
    piv = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, dim) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        pv = A[r][c]
        A[r] = [x / pv for x in A[r]]
        for i in range(dim):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        piv.append(c)
        r += 1
    x = [Fraction(0)] * k
    for i, c in enumerate(piv):
        x[c] = A[i][k]
    return x


def reflection_character(group):
    """Trace on the reflection representation, per conjugacy class."""
    _, _, reps = group.conjugacy_classes()
    if group.series == "I2":
        m = group.m
        vals = []
        for r in reps:
            if int(group.length[r]) % 2 == 1:
                vals.append(Cyc(m, {}))
            else:
                k = int(group.P[r][0]) // 2   # rotation by 2*pi*k/m
                vals.append(_two_cos(m, k))
        return vals
    simples = [group.root_vectors[i] for i in group.simple_root_index]
    cols = [[int(x) for x in v] for v in simples]

    def trace(i):
        t = Fraction(0)
        for j in range(group.ngens):
            img = int(group.P[i][group.simple_root_index[j]])
            v = (group.root_vectors[img] if img < group.npos
                 else -group.root_vectors[img - group.npos])
            t += _gauss_solve(cols, [int(x) for x in v])[j]
        return t
    return [trace(r) for r in reps]


# ----------------------------------------------------------------- #
# subgroups and induction

class SubgroupData:
    """A subgroup given by its element indices, with its own classes."""

    def __init__(self, group, gens=None, elements=None):
        self.group = group
        if elements is None:
            if gens is None:
                raise ValueError("need gens or elements")
            elements = group.subgroup_closure(list(gens))
        self.elements = sorted(int(x) for x in elements)
        eset = set(self.elements)
        if gens is None:
            gens = self.elements
        for g in gens:
            if int(g) not in eset:
                raise SubgroupMismatch("generator outside subgroup")
        self.order = len(self.elements)
        cid = {}
        classes = []
        for start in self.elements:
            if start in cid:
                continue
            c = len(classes)
            orbit = [start]
            cid[start] = c
            stack = [start]
            while stack:
                x = stack.pop()
                for g in gens:
                    y = group.mult(group.mult(int(group.inv[g]), x), int(g))
                    if y not in cid:
                        cid[y] = c
                        orbit.append(y)
                        stack.append(y)
            classes.append(sorted(orbit))
        self.classes = classes
        self.class_id = cid
        self.reps = [c[0] for c in classes]

    def sign_values(self):
        """The sign character (restriction of the ambient one)."""
        g = self.group
        return [Fraction((-1) ** int(g.length[r])) for r in self.reps]

    def num_reflections(self):
        refl = self.group.reflections()
        return sum(1 for x in self.elements if x in refl)


def induce(table, sub, vals):
    """Induce a class function from a subgroup to the whole group.

    vals is aligned with sub.classes; result with table's classes.
    """
    g = table.group
    if sub.group is not g:
        raise SubgroupMismatch("subgroup of a different group")
    _, cid, _ = g.conjugacy_classes()
    sums = [Fraction(0)] * len(table.class_sizes)
    for h in sub.elements:
        c = int(cid[h])
        sums[c] = sums[c] + vals[sub.class_id[h]]
    out = []
    for c, s in enumerate(sums):
        out.append(s * g.order / (sub.order * table.class_sizes[c]))
    return out


def restrict(table, sub, vals):
    _, cid, _ = table.group.conjugacy_classes()
    return [vals[int(cid[r])] for r in sub.reps]


# ----------------------------------------------------------------- #
# class algebra splitting (types D and F4)

def _class_matrices(group):
    classes, cid, reps = group.conjugacy_classes()
    nc = len(classes)
    mats = []
    for i in range(nc):
        A = np.zeros((nc, nc), dtype=np.int64)
        for x in classes[i]:
            ix = int(group.inv[x])
            for k in range(nc):
                A[k, cid[group.mult(ix, reps[k])]] += 1
        # built transposed: a_{ijk} = #{x in C_i: x^-1 rep_k in C_j}
        mats.append(A.T.copy())
    return mats


def character_rows_by_splitting(group):
    """Irreducible character values via the class algebra.

    Works whenever all character values are rational (D_n, F4).
    Returns a list of value rows (Fractions), one per irreducible, in
    no particular order.
    """
    import sympy

    classes, _, reps = group.conjugacy_classes()
    nc = len(classes)
    sizes = [len(c) for c in classes]
    mats = _class_matrices(group)
    spaces = [sympy.eye(nc)]
    for M in mats:
        if all(B.shape[1] == 1 for B in spaces):
            break
        Ms = sympy.Matrix(M.tolist())
        nxt = []
        for B in spaces:
            if B.shape[1] == 1:
                nxt.append(B)
                continue
            R = (B.T * B).inv() * (B.T * Ms * B)
            for lam in R.eigenvals():
                ns = (R - lam * sympy.eye(R.shape[0])).nullspace()
                nxt.append(B * sympy.Matrix.hstack(*ns))
        spaces = nxt
    assert all(B.shape[1] == 1 for B in spaces)
    rows = []
    for B in spaces:
        v = [Fraction(str(x)) for x in B]
        j = next(i for i, x in enumerate(v) if x)
        omega = []
        for i in range(nc):
            Av = sum(Fraction(int(mats[i][j, kk])) * v[kk]
                     for kk in range(nc))
            omega.append(Av / v[j])
        s = sum(w * w / sz for w, sz in zip(omega, sizes))
        deg2 = Fraction(group.order) / s
        deg = _fraction_isqrt(deg2)
        rows.append([deg * w / sz for w, sz in zip(omega, sizes)])
    return rows


def _fraction_isqrt(f):
    assert f.denominator == 1
    import math
    r = math.isqrt(f.numerator)
    assert r * r == f.numerator
    return Fraction(r)


# ----------------------------------------------------------------- #
# the table object

def _val_mul(a, b):
    return a * b


class CharacterTable:
    """labels + value rows over the canonical conjugacy classes."""

    def __init__(self, group, labels, values):
        self.group = group
        self.labels = list(labels)
        self.values = [list(r) for r in values]
        classes, cid, reps = group.conjugacy_classes()
        self.classes = classes
        self.class_id = cid
        self.reps = reps
        self.class_sizes = [len(c) for c in classes]
        self._index = {l: i for i, l in enumerate(self.labels)}
        self._b = None

    # generic machinery ------------------------------------------------

    def index(self, label):
        return self._index[label]

    def row(self, label):
        return self.values[self._index[label]]

    def degree(self, label):
        v = self.row(label)[self.class_id[0]]
        return int(v) if not isinstance(v, Cyc) else int(v.rational())

    def scalar(self, u, v):
        tot = None
        for sz, a, b in zip(self.class_sizes, u, v):
            term = _val_mul(a, b) * sz
            tot = term if tot is None else tot + term
        if isinstance(tot, Cyc):
            return tot.rational() / self.group.order
        return Fraction(tot) / self.group.order

    def decompose(self, vals):
        """Multiplicities {label: int}; raises if not a character."""
        out = {}
        for l, row in zip(self.labels, self.values):
            m = self.scalar(vals, row)
            if m:
                if m.denominator != 1:
                    raise ValueError("non-integral multiplicity %s" % m)
                out[l] = int(m)
        return out

    def assemble(self, mults):
        """Inverse of decompose."""
        nc = len(self.class_sizes)
        out = [0] * nc
        for l, m in mults.items():
            row = self.row(l)
            out = [a + m * b for a, b in zip(out, row)]
        return out

    def tensor(self, u, v):
        return [_val_mul(a, b) for a, b in zip(u, v)]

    def trivial(self):
        return [1] * len(self.class_sizes)

    def sign(self):
        return [(-1) ** int(self.group.length[r]) for r in self.reps]

    def regular(self):
        return [self.group.order if r == 0 else 0 for r in self.reps]

    def b_invariant(self, label):
        """Smallest symmetric power of the reflection rep containing
        the character."""
        if self._b is None:
            self._b = self._b_invariants()
        return self._b[label]

    def _b_invariants(self):
        g = self.group
        refl = reflection_character(g)
        nc = len(self.class_sizes)
        # values of the reflection character at powers of each rep
        maxi = int(g.length.max())
        powv = []
        for c in range(nc):
            x, vals = 0, []
            for _ in range(maxi):
                x = g.mult(x, self.reps[c])
                vals.append(refl[self.class_id[x]])
            powv.append(vals)
        hs = [[Fraction(1)] * nc]
        out = {}
        todo = set(self.labels)
        i = 0
        while todo and i <= maxi:
            if i > 0:
                h = []
                for c in range(nc):
                    acc = None
                    for k in range(1, i + 1):
                        term = _val_mul(powv[c][k - 1], hs[i - k][c])
                        acc = term if acc is None else acc + term
                    if isinstance(acc, Cyc):
                        h.append(acc * Fraction(1, i))
                    else:
                        h.append(Fraction(acc, i))
                hs.append(h)
            for l in sorted(todo, key=str):
                if self.scalar(self.row(l), hs[i]):
                    out[l] = i
                    todo.discard(l)
            i += 1
        assert not todo
        return out

    def j_induce(self, sub):
        """j-induction of the sign character of a reflection subgroup:
        the unique constituent of Ind(sign) with the minimal possible
        b-invariant, namely the number of reflections of the subgroup."""
        target_b = sub.num_reflections()
        ind = induce(self, sub, sub.sign_values())
        hits = [l for l, m in self.decompose(ind).items()
                if self.b_invariant(l) == target_b]
        if len(hits) != 1:
            raise NonUniqueJInduction("constituents with b=%d: %r"
                                      % (target_b, hits))
        return hits[0]

    def diamond_map(self, dia):
        """How a diagram automorphism permutes the labels."""
        if dia.group is not self.group:
            raise SubgroupMismatch("automorphism of a different group")
        out = {}
        for l, row in zip(self.labels, self.values):
            twisted = [row[self.class_id[dia(r)]] for r in self.reps]
            match = [l2 for l2, r2 in zip(self.labels, self.values)
                     if r2 == twisted]
            assert len(match) == 1
            out[l] = match[0]
        return out

    def identify(self, vals):
        """Label whose row equals vals, or None."""
        for l, row in zip(self.labels, self.values):
            if all(a == b for a, b in zip(row, vals)):
                return l
        return None


# ----------------------------------------------------------------- #
# per-series builders

def _build_A(group):
    n1 = group.rank + 1
    labels = sorted(partitions(n1), reverse=True)
    _, _, reps = group.conjugacy_classes()
    ctypes = [group.signed_cycle_type(r) for r in reps]
    values = [[symmetric_character(l, mu) for mu in ctypes] for l in labels]
    return CharacterTable(group, labels, values)


def _build_B(group):
    n = group.rank
    labels = sorted(bipartitions(n), reverse=True)
    _, _, reps = group.conjugacy_classes()
    ctypes = [signed_cycles(group.signed_cycle_type(r)) for r in reps]
    values = [[hyperoctahedral_character(a, b, c) for c in ctypes]
              for (a, b) in labels]
    return CharacterTable(group, labels, values)


def _build_I2(group):
    m = group.m
    _, _, reps = group.conjugacy_classes()
    labels = ["1", "eps"]
    rows = [[Fraction(1)] * len(reps),
            [Fraction((-1) ** int(group.length[r])) for r in reps]]
    if m % 2 == 0:
        # eps1 is trivial on s1, sign on s2; eps2 the other way
        for keep in (0, 1):
            row = []
            for r in reps:
                w = group.words[r]
                row.append(Fraction((-1) ** sum(1 for s in w if s != keep)))
            rows.append(row)
        labels += ["eps1", "eps2"]
    nchi = (m - 1) // 2 if m % 2 else (m - 2) // 2
    for j in range(1, nchi + 1):
        row = []
        for r in reps:
            if int(group.length[r]) % 2 == 1:
                row.append(Cyc(m, {}))
            else:
                k = int(group.P[r][0]) // 2
                row.append(_two_cos(m, j * k))
        rows.append(row)
        labels.append("chi%d" % j)
    return CharacterTable(group, labels, rows)


def _build_D(group):
    """Label the split-computed rows against restrictions from B_n.

    Labels: (a, b, None) for unordered pairs {a,b}, a >= b; and
    (a, a, "+") / (a, a, "-") for the split characters.
    """
    n = group.rank
    rows = character_rows_by_splitting(group)
    _, _, reps = group.conjugacy_classes()
    ctypes = [signed_cycles(group.signed_cycle_type(r)) for r in reps]
    labels = [None] * len(rows)
    used = [False] * len(rows)
    split_pairs = []
    for (a, b) in bipartitions(n):
        if (a, b) < (b, a):
            continue
        res = [Fraction(hyperoctahedral_character(a, b, c)) for c in ctypes]
        if a != b:
            hit = [i for i, r in enumerate(rows)
                   if not used[i] and r == res]
            assert len(hit) == 1, (a, b)
            labels[hit[0]] = (a, b, None)
            used[hit[0]] = True
        else:
            half = [v / 2 for v in res]
            cand = []
            for i, r in enumerate(rows):
                if used[i] or r[0] != half[0]:
                    continue
                # the partner must complete the restriction
                for j, r2 in enumerate(rows):
                    if j > i and not used[j] and \
                            all(x + y == z for x, y, z in zip(r, r2, res)):
                        cand.append((i, j))
            assert len(cand) == 1, (a, cand)
            split_pairs.append((a, cand[0]))
            used[cand[0][0]] = used[cand[0][1]] = True
    table = CharacterTable(group, list(range(len(rows))), rows)
    final_labels = list(labels)
    for a, (i, j) in split_pairs:
        pi = _resolve_split_pair(table, group, a, i, j)
        final_labels[i] = (a, a, "+" if pi else "-")
        final_labels[j] = (a, a, "-" if pi else "+")
    table.labels = final_labels
    table._index = {l: k for k, l in enumerate(final_labels)}
    if table._b is not None:
        table._b = {final_labels[k]: v for k, v in table._b.items()}
    return table


def _resolve_split_pair(table, group, alpha, i, j):
    """True when row i is chi^[alpha,+].

    Primary rule: j-induction of the sign character from the Young
    subgroup of shape 2*alpha inside <s_1..s_{n-1}>.  Cross-checked
    against the sigma_{n/2} sign test; InconsistentSplit on clash.
    """
    n = group.rank
    shape = tuple(2 * p for p in conjugate_partition(alpha))
    gens = []
    pos = 0
    for part in shape:
        gens.extend(range(pos + 1, pos + part))   # s_i indices, skip u
        pos += part
    sub = SubgroupData(group, gens=[int(group.rmul[s, 0]) for s in gens]
                       or [0])
    lab = table.j_induce(sub)
    plus_is_i = lab == i
    if lab not in (i, j):
        raise InconsistentSplit("j-induction left the pair")
    # sigma test
    sigma = group.word_to_index(list(range(1, n, 2)))
    c = table.class_id[sigma]
    diff = table.values[i][c] - table.values[j][c]
    want = Fraction((-1) ** (n // 2) * 2 ** (n // 2)
                    * symmetric_character(alpha, (1,) * (n // 2)))
    if diff == want:
        sigma_says_i = True
    elif diff == -want:
        sigma_says_i = False
    else:
        raise InconsistentSplit("sigma test value %s vs %s" % (diff, want))
    if sigma_says_i != plus_is_i:
        raise InconsistentSplit("j-induction and sigma test disagree "
                                "for alpha=%r" % (alpha,))
    return plus_is_i


# F4 labelling: name by degree and b-invariant; ties within a
# (degree, b) pair are ordered by their value rows, except the two
# 6-dimensional characters where the convention is pinned by the
# exterior square of the reflection representation (see _build_F4).
_F4_SINGLES = {(1, 0): "1_1", (1, 24): "1_4", (4, 8): "4_1",
               (9, 2): "9_1", (9, 10): "9_4", (12, 4): "12_1",
               (4, 1): "4_2", (4, 13): "4_5", (16, 5): "16_1"}
_F4_PAIRS = {(1, 12): ("1_2", "1_3"), (2, 4): ("2_1", "2_3"),
             (2, 16): ("2_2", "2_4"), (4, 7): ("4_3", "4_4"),
             (6, 6): ("6_1", "6_2"), (8, 3): ("8_1", "8_3"),
             (8, 9): ("8_2", "8_4"), (9, 6): ("9_2", "9_3")}


def _build_F4(group):
    rows = character_rows_by_splitting(group)
    table = CharacterTable(group, list(range(len(rows))), rows)
    keyed = {}
    for idx in range(len(rows)):
        key = (table.degree(idx), table.b_invariant(idx))
        keyed.setdefault(key, []).append(idx)
    # exterior square of the reflection character
    refl = reflection_character(group)
    lam2 = []
    for c, r in enumerate(table.reps):
        sq = refl[table.class_id[group.power(r, 2)]]
        lam2.append((refl[c] * refl[c] - sq) / 2)
    labels = [None] * len(rows)
    for key, idxs in keyed.items():
        if len(idxs) == 1:
            labels[idxs[0]] = _F4_SINGLES[key]
            continue
        assert len(idxs) == 2, key
        a, b = idxs
        if key == (6, 6):
            # 6_2 is the one occurring in the exterior square
            in2a = table.scalar(rows[a], lam2) != 0
            a, b = (b, a) if in2a else (a, b)
        else:
            a, b = sorted(idxs, key=lambda i: rows[i], reverse=True)
        labels[a], labels[b] = _F4_PAIRS[key]
    table.labels = labels
    table._index = {l: k for k, l in enumerate(labels)}
    if table._b is not None:
        table._b = {labels[k]: v for k, v in table._b.items()}
    return table


def character_table(group):
    if group.series == "A":
        return _build_A(group)
    if group.series == "B":
        return _build_B(group)
    if group.series == "D":
        return _build_D(group)
    if group.series == "F4":
        return _build_F4(group)
    if group.series == "I2":
        return _build_I2(group)
    raise UnsupportedType(group.series)
