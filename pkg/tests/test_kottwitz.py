from fractions import Fraction

import pytest

from kcv import build_group
from kcv.chartable import character_table
from kcv.errors import NotTwistedInvolution, SubgroupMismatch
from kcv.kottwitz import (epsilon_values, upsilon, upsilon_minimal,
                          lv_representation, lv_character,
                          modified_representation, modified_upsilon)
from kcv.symbols import sigma_word, involution_class_data
from kcv.twisted import (identity_automorphism, diagram_automorphism,
                         twisted_involution_classes, BnPair)


def _three_way(group, dia):
    table = character_table(group)
    for C in twisted_involution_classes(dia):
        a = upsilon(table, dia, int(C[0]))
        b = upsilon_minimal(table, dia, C)
        c = lv_character(table, dia, C)
        assert a == b == c
        for lab, mult in table.decompose(a).items():
            assert mult > 0


@pytest.mark.parametrize("series,rank,m", [
    ("A", 3, None), ("B", 3, None), ("D", 4, None), ("I2", 2, 6),
])
def test_three_way_untwisted(series, rank, m):
    g = build_group(series, rank, m=m)
    _three_way(g, identity_automorphism(g))


@pytest.mark.parametrize("series,rank,m", [
    ("A", 3, None), ("D", 4, None), ("F4", 4, None), ("I2", 2, 6),
])
def test_three_way_twisted(series, rank, m):
    g = build_group(series, rank, m=m)
    _three_way(g, diagram_automorphism(g))


def test_epsilon_rejects_non_involution():
    g = build_group("A", 3)
    dia = identity_automorphism(g)
    # a 3-cycle is not an involution
    w = g.word_to_index([0, 1])
    with pytest.raises(NotTwistedInvolution):
        epsilon_values(dia, w)


def test_epsilon_is_a_character():
    g = build_group("B", 3)
    dia = identity_automorphism(g)
    w0 = g.longest_element()
    H, vals = epsilon_values(dia, w0)
    hs = set(H)
    for a in H[:20]:
        for b in H[:20]:
            ab = g.mult(int(a), int(b))
            assert ab in hs
            assert vals[ab] == vals[int(a)] * vals[int(b)]


def test_upsilon_identity_class_is_permutation_character():
    # w = e untwisted: eps_e is trivial on all of W, so Upsilon is the
    # regular character divided by nothing, i.e. Ind from W of trivial
    g = build_group("A", 2)
    dia = identity_automorphism(g)
    table = character_table(g)
    u = upsilon(table, dia, 0)
    assert u == table.trivial()


def test_upsilon_f4_identity_decomposition():
    g = build_group("F4", 4)
    dia = diagram_automorphism(g)
    table = character_table(g)
    dec = table.decompose(upsilon(table, dia, 0))
    assert dec == {"1_1": 1, "1_4": 1, "2_1": 1, "2_2": 1, "2_3": 1,
                   "2_4": 1, "4_1": 2, "9_1": 1, "9_2": 1, "9_3": 1,
                   "9_4": 1, "6_1": 1, "12_1": 1}


@pytest.mark.parametrize("m,even", [(8, True), (10, False), (12, True)])
def test_upsilon_i2_identity_decomposition(m, even):
    # the dihedral group of order 2m with its order-2 diagram twist
    g = build_group("I2", 2, m=m)
    dia = diagram_automorphism(g)
    table = character_table(g)
    dec = table.decompose(upsilon(table, dia, 0))
    half = m // 2
    expect = {"1": 1, "eps": 1}
    if half % 2 == 0:
        expect["eps1"] = 1
        expect["eps2"] = 1
    expect.update({"chi%d" % (2 * k): 2
                   for k in range(1, (half - 1) // 2 + 1)})
    assert dec == expect
    assert (half % 2 == 0) == even


def test_lv_relations():
    g = build_group("D", 4)
    dia = diagram_automorphism(g)
    for C in twisted_involution_classes(dia):
        lv_representation(dia, C).check_relations()


def test_modified_rep_relations_and_rejections():
    pair = BnPair(3)
    table = character_table(pair.B)
    e_cls = [0]
    cls3 = [x for x in range(pair.B.order)
            if pair.B.mult(x, x) == 0]
    # a full involution set is a union of classes; single classes only
    rep = sigma_word(3, 1, 1)
    w = pair.B.word_to_index(rep)
    _, cid, _ = pair.B.conjugacy_classes()
    C = [x for x in range(pair.B.order) if cid[x] == cid[w]]
    modified_representation(pair.B, C).check_relations()
    with pytest.raises(NotTwistedInvolution):
        modified_representation(pair.B, [pair.B.word_to_index([1, 2])])
    dtable = character_table(build_group("D", 3))
    with pytest.raises(SubgroupMismatch):
        modified_upsilon(dtable, e_cls)
    assert len(cls3) == sum(1 for x in range(pair.B.order)
                            if pair.B.mult(x, x) == 0)


def test_modified_upsilon_values_are_integral():
    pair = BnPair(4)
    table = character_table(pair.B)
    _, cid, _ = pair.B.conjugacy_classes()
    for l, j in involution_class_data(4):
        w = pair.B.word_to_index(sigma_word(4, l, j))
        C = [x for x in range(pair.B.order) if cid[x] == cid[w]]
        u = modified_upsilon(table, C)
        for lab, mult in table.decompose(u).items():
            assert mult == int(mult) and mult > 0
        assert u[int(cid[0])] == len(C) * Fraction(1) or u[int(cid[0])] > 0
