import json

import pytest

from kcv.cli import main, render_report


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_a3_stdout(capsys):
    code, out, err = _run(capsys, ["verify", "--type", "A", "--rank", "3"])
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "kcv-report/1"
    assert doc["group"] == {"type": "A", "rank": 3, "m": None, "order": 24}
    assert doc["automorphism"] == "none"
    assert doc["summary"]["mismatches"] == 0
    assert doc["summary"]["wall_time_ms"] is None
    assert doc["summary"]["cells"] == 10
    for rec in doc["records"]:
        assert set(rec) == {"class_rep_word", "cell_id",
                            "intersection_count", "scalar_product",
                            "match"}
        assert rec["match"] is True
    assert "mismatch(es)" in err


def test_report_file_and_determinism(tmp_path, capsys):
    p1, p2 = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    argv = ["verify", "--type", "I2", "--rank", "2", "--m", "8",
            "--twist", "diagram"]
    assert main(argv + ["--report", p1]) == 0
    assert main(argv + ["--report", p2]) == 0
    capsys.readouterr()
    with open(p1, "rb") as f1, open(p2, "rb") as f2:
        b1, b2 = f1.read(), f2.read()
    assert b1 == b2
    doc = json.loads(b1)
    counts = sorted(r["intersection_count"] for r in doc["records"])
    assert counts == [1, 1, 3, 3]


def test_modified_mode(tmp_path, capsys):
    p = str(tmp_path / "b3.json")
    code, _, err = _run(capsys, ["verify", "--type", "B", "--rank", "3",
                                 "--modified", "--report", p])
    assert code == 0
    with open(p) as f:
        doc = json.load(f)
    assert doc["automorphism"] == "modified"
    assert doc["summary"]["mismatches"] == 0
    assert doc["derived"] == {"split_mismatches": 0,
                              "quasi_split_mismatches": 0}
    # class representatives are words in the extended generators
    assert [] in [r["class_rep_word"] for r in doc["records"]]


def test_modified_rejects_other_types(capsys):
    code, _, err = _run(capsys, ["verify", "--type", "A", "--rank", "3",
                                 "--modified"])
    assert code == 2
    assert "error" in err


def test_diagram_twist_rejected_for_b(capsys):
    code, _, err = _run(capsys, ["verify", "--type", "B", "--rank", "3",
                                 "--twist", "diagram"])
    assert code == 2
    assert "error" in err


def test_max_order_cap(capsys):
    code, _, err = _run(capsys, ["verify", "--type", "B", "--rank", "5",
                                 "--max-order", "100"])
    assert code == 2
    assert "error" in err


def test_cache_roundtrip_via_cli(tmp_path, capsys):
    cpath = str(tmp_path / "D4.klc")
    argv = ["verify", "--type", "D", "--rank", "4", "--twist", "diagram",
            "--cache", cpath]
    r1, out1, _ = _run(capsys, argv)
    assert r1 == 0 and (tmp_path / "D4.klc").exists()
    r2, out2, _ = _run(capsys, argv)   # second run loads the cache
    assert r2 == 0
    assert out1 == out2


def test_jobs_flag_deterministic(capsys):
    base = ["verify", "--type", "D", "--rank", "4"]
    _, out1, _ = _run(capsys, base)
    _, out2, _ = _run(capsys, base + ["--jobs", "4"])
    assert out1 == out2


def test_render_report_fractions():
    data = render_report({"x": __import__("fractions").Fraction(3, 2)})
    assert data == b'{\n  "x": "3/2"\n}\n'


def test_missing_subcommand_exits():
    with pytest.raises(SystemExit):
        main([])
