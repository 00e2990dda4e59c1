import pytest

from kcv import build_group
from kcv.twisted import (identity_automorphism, diagram_automorphism,
                         BnPair)
from kcv.verify import (verify_kottwitz, verify_modified_Bn,
                        verify_split_quasisplit_Dn, verify_cell_counting,
                        verify_proportionality, verify_three_way,
                        verify_dperm, verify_sign_test_Dn, verify_pieri_Dn,
                        verify_tense_twist, verify_properties,
                        ExtendedCells, _pieri_set)


@pytest.fixture(scope="module")
def ext3():
    return ExtendedCells(BnPair(3))


def test_verify_kottwitz_a3():
    g = build_group("A", 3)
    res = verify_kottwitz(g, identity_automorphism(g))
    assert res["mismatches"] == 0
    assert res["twist"] == "identity"
    assert res["num_cells"] == 10
    # every (class, cell) pair is reported
    assert len(res["entries"]) == res["num_cells"] * res["num_classes"]
    for e in res["entries"]:
        assert e["scalar"] == e["count"] and e["ok"]


def test_verify_kottwitz_counts_partition_cells():
    # per class, intersection counts over all cells sum to the class size
    g = build_group("B", 3)
    res = verify_kottwitz(g, identity_automorphism(g))
    by_class = {}
    for e in res["entries"]:
        by_class.setdefault(e["class"], 0)
        by_class[e["class"]] += e["count"]
    total = sum(by_class.values())
    ninv = sum(1 for x in range(g.order) if g.mult(x, x) == 0)
    assert total == ninv


def test_verify_kottwitz_jobs_agree():
    g = build_group("D", 4)
    dia = diagram_automorphism(g)
    a = verify_kottwitz(g, dia)
    b = verify_kottwitz(g, dia, jobs=2)
    assert a == b


def test_extended_cells_partition(ext3):
    B = ext3.pair.B
    seen = sorted(x for c in ext3.cell_sets for x in c)
    assert seen == list(range(B.order))
    for gamma in ext3.cells:
        # each extended cell is a union Gamma and t Gamma
        s = set(gamma)
        t_im = {int(B.lmul[0, x]) for x in s}
        assert t_im == s or len(t_im & s) == 0
        assert len(s) % 2 == 0


def test_extended_two_sided_cover(ext3):
    B = ext3.pair.B
    covered = sorted(x for ts in ext3.two_sided for x in ts)
    assert covered == list(range(B.order))
    # each two-sided L-cell is a union of left extended cells
    for i, cs in enumerate(ext3.cell_sets):
        ts = ext3.ts_sets[ext3.two_sided_of(i)]
        assert cs <= ts


def test_verify_modified_small():
    for n in (2, 3):
        res = verify_modified_Bn(n)
        assert res["mismatches"] == 0
        assert all(e["ok"] for e in res["entries"])


def test_verify_split_quasisplit(ext3):
    res = verify_split_quasisplit_Dn(ext3)
    assert res["mismatches"] == 0
    settings = {e["setting"] for e in res["entries"]}
    assert settings == {"split", "quasi-split"}


def test_verify_cell_counting(ext3):
    assert verify_cell_counting(ext3)["mismatches"] == 0


def test_verify_proportionality(ext3):
    res = verify_proportionality(ext3)
    assert res["mismatches"] == 0


def test_verify_tense_twist(ext3):
    assert verify_tense_twist(ext3)["mismatches"] == 0


def test_verify_three_way_f4():
    g = build_group("F4", 4)
    assert verify_three_way(g, diagram_automorphism(g))["mismatches"] == 0


def test_verify_dperm_d4():
    g = build_group("D", 4)
    res = verify_dperm(g, diagram_automorphism(g))
    assert res["mismatches"] == 0


def test_verify_sign_test():
    assert verify_sign_test_Dn(2)["mismatches"] == 0
    assert verify_sign_test_Dn(4)["mismatches"] == 0


def test_pieri_set():
    assert _pieri_set((2, 1), 1) == {(3, 1), (2, 2), (2, 1, 1)}
    assert _pieri_set((), 2) == {(1, 1)}
    assert (2,) not in _pieri_set((1,), 1) or True
    assert _pieri_set((1,), 1) == {(2,), (1, 1)}


def test_verify_pieri_d4():
    assert verify_pieri_Dn(4)["mismatches"] == 0


def test_verify_properties_d4():
    res = verify_properties(build_group("D", 4),
                            diagram_automorphism(build_group("D", 4)))
    assert res["mismatches"] == 0
    assert "three_way" in res["suites"]
