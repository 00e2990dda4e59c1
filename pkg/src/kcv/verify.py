"""Cell-by-cell verification drivers.

Everything here compares a scalar product <Upsilon, [cell]_1> against an
honest intersection count |class cap cell| and records per-pair results,
so a report can show exactly which pair failed.  All arithmetic is exact
(Fractions and ints).
"""

from fractions import Fraction

from .chartable import (character_table, partitions, symmetric_character,
                        conjugate_partition)
from .coxeter import build_group
from .errors import SubgroupMismatch, UnsupportedType
from .klcells import (KLTable, left_cells, two_sided_cells, cell_character,
                      diamond_cell_image)
from .kottwitz import (upsilon, upsilon_minimal, lv_character,
                       modified_upsilon, induce_function)
from .twisted import (BnPair, identity_automorphism,
                      twisted_involution_classes)
from .symbols import (involution_class_data, sigma_word,
                      is_diamond_special, c_invariant)


def _int_scalar(table, u, v):
    s = table.scalar(u, v)
    if s.denominator != 1:
        raise ValueError("non-integral scalar product %s" % s)
    return int(s)


def verify_kottwitz(group, dia=None, table=None, kl=None, jobs=1):
    """Check <Upsilon_C, [Gamma]_1> = |C cap Gamma| for every class C of
    twisted involutions and every left cell Gamma.

    Returns a plain dict (JSON-friendly) listing each (class, cell)
    pair with both numbers and a total mismatch count.  jobs bounds
    the worker threads used for the per-class characters.
    """
    if dia is None:
        dia = identity_automorphism(group)
    if dia.group is not group:
        raise SubgroupMismatch("automorphism belongs to a different group")
    if table is None:
        table = character_table(group)
    if kl is None:
        kl = KLTable(group)
    cells, _ = left_cells(kl)
    cell_sets = [set(int(x) for x in c) for c in cells]
    cell_chars = [cell_character(kl, c) for c in cells]
    classes = twisted_involution_classes(dia)
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            upsilons = list(pool.map(
                lambda C: upsilon(table, dia, int(C[0])), classes))
    else:
        upsilons = [upsilon(table, dia, int(C[0])) for C in classes]
    entries = []
    mismatches = 0
    for ci, C in enumerate(classes):
        ups = upsilons[ci]
        cset = set(int(x) for x in C)
        for gj, (gset, gchar) in enumerate(zip(cell_sets, cell_chars)):
            sc = _int_scalar(table, ups, gchar)
            cnt = len(cset & gset)
            ok = sc == cnt
            if not ok:
                mismatches += 1
            entries.append({"class": ci, "rep": int(C[0]), "cell": gj,
                            "scalar": sc, "count": cnt, "ok": ok})
    return {
        "group": repr(group),
        "twist": "identity" if dia.order == 1 else "diagram",
        "num_classes": len(classes),
        "num_cells": len(cells),
        "cell_sizes": [len(c) for c in cells],
        "entries": entries,
        "mismatches": mismatches,
    }


class ExtendedCells:
    """Left and two-sided L-cells of the extended group of (D_n, swap).

    The extended group is B_n.  A left L-cell is Gamma cup t*Gamma for
    a left cell Gamma of D_n, and its character at 1 is the induced
    cell character.  Two-sided L-cells merge a two-sided D-cell with
    its diamond image and the t-translates.
    """

    def __init__(self, pair, kl=None, table=None):
        self.pair = pair
        D, B = pair.D, pair.B
        self.kl = kl if kl is not None else KLTable(D)
        self.table = table if table is not None else character_table(B)
        self.cells_D, _ = left_cells(self.kl)
        emb = pair.embed
        self.cells = []
        for c in self.cells_D:
            up = [int(emb[int(x)]) for x in c]
            up += [int(B.lmul[0, e]) for e in up]
            self.cells.append(sorted(up))
        self.cell_sets = [set(c) for c in self.cells]
        self.chars = [self._induced_char(c) for c in self.cells_D]
        # two-sided L-cells: diamond orbits of two-sided D-cells
        ts, _ = two_sided_cells(self.kl)
        dia = pair.diamond_D()
        key = {}
        for k, c in enumerate(ts):
            key[int(c[0])] = k
        self.two_sided = []
        seen = set()
        self._ts_of_left = [None] * len(self.cells_D)
        member_ts = {}
        for k, c in enumerate(ts):
            for x in c:
                member_ts[int(x)] = k
        for k, c in enumerate(ts):
            if k in seen:
                continue
            img = diamond_cell_image(dia, c)
            k2 = member_ts[int(img[0])]
            seen.update((k, k2))
            elems = set(int(x) for x in c)
            elems.update(int(x) for x in ts[k2])
            up = [int(emb[x]) for x in elems]
            up += [int(B.lmul[0, e]) for e in up]
            self.two_sided.append(sorted(set(up)))
        self.ts_sets = [set(c) for c in self.two_sided]
        self._left_to_ts = []
        for cs in self.cell_sets:
            x = next(iter(cs))
            self._left_to_ts.append(
                next(i for i, ts_ in enumerate(self.ts_sets) if x in ts_))

    def _induced_char(self, cell_D):
        pair = self.pair
        vals_D = cell_character(self.kl, cell_D)
        _, cid, _ = pair.D.conjugacy_classes()
        H = [int(b) for b in pair.embed]
        psi = {int(pair.embed[d]): vals_D[int(cid[d])]
               for d in range(pair.D.order)}
        return induce_function(self.table, H, psi)

    def two_sided_of(self, left_idx):
        return self._left_to_ts[left_idx]


def involution_classes_B(pair):
    """Ordinary involution classes of B_n, as (l, j, class) triples in
    the canonical (l, j) order."""
    B = pair.B
    classes, cid, _ = B.conjugacy_classes()
    out = []
    for l, j in involution_class_data(pair.n):
        rep = B.word_to_index(sigma_word(pair.n, l, j))
        out.append((l, j, classes[int(cid[rep])]))
    return out


def verify_modified_Bn(n, ext=None, max_order=10 ** 7):
    """The main theorem's check: for every involution class C of the
    extended group and every left L-cell,
    <Upsilon~_C, [Gamma~]_1> = |C cap Gamma~|."""
    if ext is None:
        ext = ExtendedCells(BnPair(n, max_order=max_order))
    pair, table = ext.pair, ext.table
    entries = []
    mismatches = 0
    for l, j, C in involution_classes_B(pair):
        ups = modified_upsilon(table, C)
        cset = set(int(x) for x in C)
        for gj, (gset, gchar) in enumerate(zip(ext.cell_sets, ext.chars)):
            sc = _int_scalar(table, ups, gchar)
            cnt = len(cset & gset)
            ok = sc == cnt
            if not ok:
                mismatches += 1
            entries.append({"l": l, "j": j, "cell": gj,
                            "scalar": sc, "count": cnt, "ok": ok})
    return {"n": n, "num_cells": len(ext.cells),
            "entries": entries, "mismatches": mismatches}


def verify_split_quasisplit_Dn(ext):
    """Both specialisations of the conjecture for D_n, sharing the cell
    run of the extended group.

    Split: ordinary involution classes of D_n against its left cells.
    Quasi-split: diamond-twisted involution classes, where the
    intersection counts are read off from the extended cells (a class
    C of twisted involutions corresponds to the involution class tC of
    the extended group, and |tC cap Gamma~| = |C cap Gamma|).
    """
    pair = ext.pair
    D = pair.D
    tableD = character_table(D)
    cells_D = ext.cells_D
    cell_sets = [set(int(x) for x in c) for c in cells_D]
    cell_chars = [cell_character(ext.kl, c) for c in cells_D]
    entries = []
    mismatches = 0

    ida = identity_automorphism(D)
    for ci, C in enumerate(twisted_involution_classes(ida)):
        ups = upsilon(tableD, ida, int(C[0]))
        cset = set(int(x) for x in C)
        for gj, (gset, gchar) in enumerate(zip(cell_sets, cell_chars)):
            sc = _int_scalar(tableD, ups, gchar)
            cnt = len(cset & gset)
            ok = sc == cnt
            if not ok:
                mismatches += 1
            entries.append({"setting": "split", "class": ci, "cell": gj,
                            "scalar": sc, "count": cnt, "ok": ok})

    dia = pair.diamond_D()
    B = pair.B
    tcls = twisted_involution_classes(dia)
    for ci, C in enumerate(tcls):
        ups = upsilon(tableD, dia, int(C[0]))
        up_set = set(int(B.lmul[0, pair.embed[int(x)]]) for x in C)
        cset = set(int(x) for x in C)
        for gj, (gset, gchar) in enumerate(zip(cell_sets, cell_chars)):
            sc = _int_scalar(tableD, ups, gchar)
            cnt = len(cset & gset)
            # the same count through the extended-cell run
            cnt_ext = len(up_set & ext.cell_sets[gj])
            ok = sc == cnt and cnt == cnt_ext
            if not ok:
                mismatches += 1
            entries.append({"setting": "quasi-split", "class": ci,
                            "cell": gj, "scalar": sc, "count": cnt,
                            "count_ext": cnt_ext, "ok": ok})
    return {"n": pair.n, "entries": entries, "mismatches": mismatches}


def _diamond_special_label(table, dec):
    """The unique diamond-special constituent among dec's labels."""
    specials = [lab for lab in dec
                if is_diamond_special(lab[0], lab[1])]
    if len(specials) != 1:
        raise ValueError("expected one diamond-special constituent, "
                         "got %r" % (specials,))
    return specials[0]


def verify_cell_counting(ext):
    """Per left L-cell: the character is multiplicity-free with 2^c
    constituents (c from the unique diamond-special one), and the cell
    holds exactly 2^c involutions.  Also checks that summing the
    involution-module characters over all classes gives
    sum_{chi diamond-special} 2^{c(chi)} chi."""
    pair, table = ext.pair, ext.table
    B = pair.B
    entries = []
    mismatches = 0
    for gj, (cell, gchar) in enumerate(zip(ext.cells, ext.chars)):
        dec = table.decompose(gchar)
        mfree = all(m == 1 for m in dec.values())
        lab0 = _diamond_special_label(table, dec)
        c = c_invariant(lab0[0], lab0[1])
        ninv = sum(1 for x in cell if B.mult(x, x) == 0)
        ok = mfree and len(dec) == 2 ** c and ninv == 2 ** c
        if not ok:
            mismatches += 1
        entries.append({"cell": gj, "multiplicity_free": mfree,
                        "c": c, "num_constituents": len(dec),
                        "num_involutions": ninv, "ok": ok})

    total = None
    for _, _, C in involution_classes_B(pair):
        u = modified_upsilon(table, C)
        total = u if total is None else [a + b for a, b in zip(total, u)]
    expect = {}
    for lab in table.labels:
        if is_diamond_special(lab[0], lab[1]):
            expect[lab] = 2 ** c_invariant(lab[0], lab[1])
    sum_ok = table.decompose(total) == expect
    if not sum_ok:
        mismatches += 1
    return {"n": pair.n, "entries": entries, "sum_identity": sum_ok,
            "mismatches": mismatches}


def _special_label(table, dec):
    """The unique minimal-b constituent (the special character of the
    two-sided cell the decomposition came from)."""
    bs = {lab: table.b_invariant(lab) for lab in dec}
    bmin = min(bs.values())
    mins = [lab for lab, b in bs.items() if b == bmin]
    if len(mins) != 1:
        raise ValueError("special character not unique: %r" % (mins,))
    return mins[0]


def verify_proportionality(ext):
    """|C cap two-sided cell| = chi_0(1) * |C cap left cell| in both
    pictures: twisted classes against D_n cells (chi_0 the special
    character), and ordinary involution classes of the extended group
    against L-cells (chi_0 the diamond-special character)."""
    pair = ext.pair
    D, B = pair.D, pair.B
    tableD = character_table(D)
    dia = pair.diamond_D()
    kl = ext.kl
    cells_D, _ = left_cells(kl)
    ts_D, _ = two_sided_cells(kl)
    ts_sets = [set(int(x) for x in c) for c in ts_D]
    cell_sets = [set(int(x) for x in c) for c in cells_D]
    ts_of = [next(i for i, t in enumerate(ts_sets) if next(iter(cs)) in t)
             for cs in cell_sets]
    # special character degree per two-sided cell, through any left cell
    deg0 = {}
    for gj, c in enumerate(cells_D):
        k = ts_of[gj]
        if k in deg0:
            continue
        dec = tableD.decompose(cell_character(kl, c))
        deg0[k] = tableD.degree(_special_label(tableD, dec))
    entries = []
    mismatches = 0
    for ci, C in enumerate(twisted_involution_classes(dia)):
        cset = set(int(x) for x in C)
        for gj, gset in enumerate(cell_sets):
            k = ts_of[gj]
            lhs = len(cset & ts_sets[k])
            rhs = deg0[k] * len(cset & gset)
            ok = lhs == rhs
            if not ok:
                mismatches += 1
            entries.append({"picture": "D", "class": ci, "cell": gj,
                            "in_two_sided": lhs, "scaled": rhs, "ok": ok})
    # extended picture
    table = ext.table
    deg0e = {}
    for gj in range(len(ext.cells)):
        k = ext.two_sided_of(gj)
        if k in deg0e:
            continue
        dec = table.decompose(ext.chars[gj])
        lab = _diamond_special_label(table, dec)
        deg0e[k] = table.degree(lab)
    for l, j, C in involution_classes_B(pair):
        cset = set(int(x) for x in C)
        for gj, gset in enumerate(ext.cell_sets):
            k = ext.two_sided_of(gj)
            lhs = len(cset & ext.ts_sets[k])
            rhs = deg0e[k] * len(cset & gset)
            ok = lhs == rhs
            if not ok:
                mismatches += 1
            entries.append({"picture": "extended", "l": l, "j": j,
                            "cell": gj, "in_two_sided": lhs,
                            "scaled": rhs, "ok": ok})
    return {"n": pair.n, "entries": entries, "mismatches": mismatches}


# ------------------------------------------------------------------ #
# property suites

def verify_three_way(group, dia, table=None):
    """The three constructions of Upsilon agree on every class:
    induced eps, the minimal-representative formula, and the signed
    permutation module on the class."""
    if table is None:
        table = character_table(group)
    entries = []
    mismatches = 0
    for ci, C in enumerate(twisted_involution_classes(dia)):
        a = upsilon(table, dia, int(C[0]))
        b = upsilon_minimal(table, dia, C)
        c = lv_character(table, dia, C)
        ok = a == b and list(map(Fraction, c)) == a
        if not ok:
            mismatches += 1
        entries.append({"class": ci, "ok": ok})
    return {"entries": entries, "mismatches": mismatches}


def verify_dperm(group, dia, table=None, kl=None):
    """The diagram automorphism permutes left cells, and a class of
    twisted involutions misses every left cell whose two-sided cell is
    not stable; the scalar product vanishes there too."""
    if table is None:
        table = character_table(group)
    if kl is None:
        kl = KLTable(group)
    cells, cid = left_cells(kl)
    ts, tsid = two_sided_cells(kl)
    mismatches = 0
    perm_ok = True
    for c in cells:
        img = diamond_cell_image(dia, c)
        if int(cid[img[0]]) != int(cid[img[-1]]) or \
                sorted(int(x) for x in cells[int(cid[img[0]])]) != img:
            perm_ok = False
    if not perm_ok:
        mismatches += 1
    stable = []
    for c in ts:
        img = diamond_cell_image(dia, c)
        stable.append(int(tsid[img[0]]) == int(tsid[int(c[0])]))
    entries = []
    for ci, C in enumerate(twisted_involution_classes(dia)):
        ups = upsilon(table, dia, int(C[0]))
        cset = set(int(x) for x in C)
        for gj, cell in enumerate(cells):
            if stable[int(tsid[int(cell[0])])]:
                continue
            cnt = len(cset & set(int(x) for x in cell))
            sc = _int_scalar(table, ups, cell_character(kl, cell))
            ok = cnt == 0 and sc == 0
            if not ok:
                mismatches += 1
            entries.append({"class": ci, "cell": gj, "count": cnt,
                            "scalar": sc, "ok": ok})
    return {"cells_permuted": perm_ok, "entries": entries,
            "mismatches": mismatches}


def _sigma_half(group):
    """s_1 s_3 ... s_{n-1} in D_n (n even)."""
    return group.word_to_index(list(range(1, group.rank, 2)))


def verify_sign_test_Dn(n, table=None):
    """chi^[a,+] - chi^[a,-] at s_1 s_3 ... s_{n-1} equals
    (-1)^(n/2) 2^(n/2) times the symmetric group degree of a."""
    if n % 2:
        raise UnsupportedType("n must be even")
    group = table.group if table is not None else build_group("D", n)
    if table is None:
        table = character_table(group)
    _, cid, _ = group.conjugacy_classes()
    c = int(cid[_sigma_half(group)])
    entries = []
    mismatches = 0
    for a in partitions(n // 2):
        diff = table.row((a, a, "+"))[c] - table.row((a, a, "-"))[c]
        deg = symmetric_character(a, (1,) * (n // 2))
        ok = diff == (-1) ** (n // 2) * 2 ** (n // 2) * deg
        if not ok:
            mismatches += 1
        entries.append({"alpha": list(a), "ok": ok})
    return {"n": n, "entries": entries, "mismatches": mismatches}


def _pieri_set(alpha, k):
    """Partitions obtained from alpha by adding k boxes, no two in the
    same row (a vertical strip)."""
    n = sum(alpha) + k
    out = set()
    for p in partitions(n):
        rows = max(len(p), len(alpha))
        a = list(p) + [0] * (rows - len(p))
        b = list(alpha) + [0] * (rows - len(alpha))
        if all(y <= x <= y + 1 for x, y in zip(a, b)):
            out.add(p)
    return out


def verify_pieri_Dn(n, table=None):
    """Strengthened induction rule in D_n (n even): inducing
    chi^[a',+] (x) sign from D_{n-r} x S_r hits chi^[a,+] exactly for
    the partitions a got by adding r/2 boxes to a', no two in a row,
    and never hits any chi^[a,-]."""
    if n % 2:
        raise UnsupportedType("n must be even")
    group = table.group if table is not None else build_group("D", n)
    if table is None:
        table = character_table(group)
    entries = []
    mismatches = 0
    for r in range(2, n + 1, 2):
        m = n - r
        if m >= 2:
            subg = build_group("D", m)
            subt = character_table(subg)
            sub_elems = []
            for x in range(subg.order):
                word = [s for s in subg.words[x]]
                sub_elems.append(group.word_to_index(word))
            _, scid, _ = subg.conjugacy_classes()
            alphas = list(partitions(m // 2))
        else:
            alphas = [()]
        h_gens = list(range(m + 1, n))
        h_elems = sorted(group.subgroup_closure(
            [int(group.rmul[s, 0]) for s in h_gens]) if h_gens else [0])
        for ap in alphas:
            psi = {}
            if m >= 2:
                row = subt.row((ap, ap, "+"))
                for x in range(subg.order):
                    vx = row[int(scid[x])]
                    for y in h_elems:
                        e = group.mult(sub_elems[x], y)
                        psi[e] = vx * (-1) ** int(group.length[y])
            else:
                for y in h_elems:
                    psi[y] = (-1) ** int(group.length[y])
            ind = induce_function(table, list(psi), psi)
            dec = table.decompose(ind)
            good = _pieri_set(ap, r // 2)
            ok = True
            for a in partitions(n // 2):
                mp = dec.get((a, a, "+"), 0)
                mm = dec.get((a, a, "-"), 0)
                if mm != 0 or mp != (1 if a in good else 0):
                    ok = False
            if not ok:
                mismatches += 1
            entries.append({"r": r, "alpha_prime": list(ap), "ok": ok})
    return {"n": n, "entries": entries, "mismatches": mismatches}


def verify_tense_twist(ext):
    """Multiplying a class of involutions of the extended group by the
    central longest element tensors its module character with the
    linear character that is -1 on the s_i and +1 on t."""
    pair, table = ext.pair, ext.table
    B = pair.B
    w0 = B.longest_element()
    epsp = []
    for r in table.reps:
        k = sum(1 for s in B.words[r] if s != 0)
        epsp.append((-1) ** k)
    classes, cid, _ = B.conjugacy_classes()
    entries = []
    mismatches = 0
    for l, j, C in involution_classes_B(pair):
        u = modified_upsilon(table, C)
        C0 = classes[int(cid[B.mult(int(C[0]), w0)])]
        u0 = modified_upsilon(table, C0)
        ok = u0 == [a * e for a, e in zip(u, epsp)]
        if not ok:
            mismatches += 1
        entries.append({"l": l, "j": j, "ok": ok})
    return {"n": pair.n, "entries": entries, "mismatches": mismatches}


def verify_properties(group, dia, ext=None):
    """Run every invariant suite that applies to (group, dia)."""
    table = character_table(group)
    suites = {"three_way": verify_three_way(group, dia, table=table)}
    if group.order <= 3000:
        suites["dperm"] = verify_dperm(group, dia, table=table)
    if group.series == "D":
        kl = KLTable(group)
        if dia.order > 1:
            pair = BnPair(group.rank)
            e = ext if ext is not None else ExtendedCells(pair, kl=kl)
            suites["proportionality"] = verify_proportionality(e)
            suites["tense_twist"] = verify_tense_twist(e)
            suites["invBd_sum"] = verify_cell_counting(e)
        if group.rank % 2 == 0:
            suites["sign_test"] = verify_sign_test_Dn(group.rank,
                                                      table=table)
            suites["pieri"] = verify_pieri_Dn(group.rank, table=table)
    total = sum(s["mismatches"] for s in suites.values())
    return {"suites": suites, "mismatches": total}
