import os
import struct

import pytest

from kcv import build_group
from kcv.cache import (cache_save, cache_load, group_hash,
                       enumeration_checksum, default_cache_dir,
                       default_cache_path, _HEADER)
from kcv.errors import ChecksumMismatch, VersionMismatch
from kcv.klcells import KLTable, left_cells


@pytest.fixture(scope="module")
def b3(tmp_path_factory):
    g = build_group("B", 3)
    kl = KLTable(g)
    path = str(tmp_path_factory.mktemp("cache") / "B3.klc")
    cache_save(kl, path)
    return g, kl, path


def test_round_trip_equal(b3):
    g, kl, path = b3
    kl2 = cache_load(g, path)
    assert kl2.backend == "cache"
    assert kl2.polys == kl.polys
    for w in range(g.order):
        assert (kl2.rows[w] == kl.rows[w]).all()
        za, ma = kl.mus[w]
        zb, mb = kl2.mus[w]
        assert list(za) == list(zb) and list(ma) == list(mb)


def test_round_trip_bytes(b3):
    g, kl, path = b3
    path2 = path + ".again"
    cache_save(cache_load(g, path), path2)
    with open(path, "rb") as f1, open(path2, "rb") as f2:
        assert f1.read() == f2.read()


def test_cells_from_cache(b3):
    g, kl, path = b3
    kl2 = cache_load(g, path)
    a, _ = left_cells(kl)
    b, _ = left_cells(kl2)
    assert [sorted(map(int, c)) for c in a] == \
        [sorted(map(int, c)) for c in b]


def test_wrong_group_rejected(b3):
    _, _, path = b3
    with pytest.raises(ChecksumMismatch):
        cache_load(build_group("A", 3), path)
    with pytest.raises(ChecksumMismatch):
        cache_load(build_group("B", 4), path)


def test_bad_magic_rejected(b3, tmp_path):
    g, _, path = b3
    bad = str(tmp_path / "bad.klc")
    with open(path, "rb") as f:
        buf = bytearray(f.read())
    buf[:4] = b"NOPE"
    with open(bad, "wb") as f:
        f.write(buf)
    with pytest.raises(VersionMismatch):
        cache_load(g, bad)


def test_bad_version_rejected(b3, tmp_path):
    g, _, path = b3
    bad = str(tmp_path / "ver.klc")
    with open(path, "rb") as f:
        buf = bytearray(f.read())
    struct.pack_into("<H", buf, 4, 99)
    with open(bad, "wb") as f:
        f.write(buf)
    with pytest.raises(VersionMismatch):
        cache_load(g, bad)


def test_truncated_rejected(b3, tmp_path):
    g, _, path = b3
    bad = str(tmp_path / "trunc.klc")
    with open(path, "rb") as f:
        buf = f.read()
    with open(bad, "wb") as f:
        f.write(buf + b"\x00" * 8)
    with pytest.raises(ChecksumMismatch):
        cache_load(g, bad)


def test_corrupt_constant_poly_caught(b3, tmp_path):
    # the first two polynomials are pinned to 0 and 1
    g, kl, path = b3
    bad = str(tmp_path / "tamper0.klc")
    with open(path, "rb") as f:
        buf = bytearray(f.read())
    npolys = struct.unpack_from("<I", buf, _HEADER.size - 20)[0]
    coeff_off = _HEADER.size + 4 * npolys
    struct.pack_into("<q", buf, coeff_off, 777)
    with open(bad, "wb") as f:
        f.write(buf)
    with pytest.raises(ChecksumMismatch):
        cache_load(g, bad)


def test_tampered_payload_caught(b3, tmp_path):
    # rewrite every nonconstant coefficient; the seeded spot check of
    # the defining recursion must trip
    g, kl, path = b3
    bad = str(tmp_path / "tamper.klc")
    with open(path, "rb") as f:
        buf = bytearray(f.read())
    npolys = struct.unpack_from("<I", buf, _HEADER.size - 20)[0]
    plens_off = _HEADER.size
    coeff_off = plens_off + 4 * npolys
    ncoef = sum(struct.unpack_from("<%dI" % npolys, buf, plens_off))
    for k in range(1, ncoef):
        struct.pack_into("<q", buf, coeff_off + 8 * k, 777)
    with open(bad, "wb") as f:
        f.write(buf)
    with pytest.raises(ChecksumMismatch):
        cache_load(g, bad)


def test_revalidate_zero_skips_spot_check(b3, tmp_path):
    g, _, path = b3
    kl2 = cache_load(g, path, revalidate=0)
    assert kl2.backend == "cache"


def test_hashes_distinguish_groups():
    a = build_group("A", 3)
    b = build_group("B", 3)
    assert group_hash(a) != group_hash(b)
    assert enumeration_checksum(a) != enumeration_checksum(b)


def test_default_paths(monkeypatch, tmp_path):
    monkeypatch.setenv("KCV_CACHE_DIR", str(tmp_path))
    assert default_cache_dir() == str(tmp_path)
    assert default_cache_path(build_group("D", 4)) == \
        str(tmp_path / "D4.klc")
    assert default_cache_path(build_group("I2", 2, m=8)) == \
        str(tmp_path / "I2m8.klc")
    monkeypatch.delenv("KCV_CACHE_DIR")
    assert default_cache_dir().endswith(os.path.join(".cache", "kcv"))
