"""Persistent storage for KL tables (the "KLC1" binary format).

Layout: a small header (magic, format version, group descriptor hash,
element-enumeration checksum, section sizes), a table of the distinct
polynomials, then the nonzero (y, w, polynomial) triples sorted by
(w, y), then the nonzero (z, w, mu) triples.  Everything is
little-endian; loading is a handful of frombuffer calls.
"""

import hashlib
import os
import random
import struct

import numpy as np

from .errors import ChecksumMismatch, VersionMismatch
from .klcells import KLTable

_MAGIC = b"KLC1"
_VERSION = 1
_HEADER = struct.Struct("<4sH32s32sIIQQ")


def group_hash(group):
    desc = "%s:%d:%d:%d" % (group.series, group.rank,
                            getattr(group, "m", 0) or 0, group.order)
    return hashlib.sha256(desc.encode()).digest()


def enumeration_checksum(group):
    """Hash of the element enumeration (root permutations in index
    order), so a cache can never be replayed against a group that
    enumerates differently."""
    return hashlib.sha256(np.ascontiguousarray(group.P).tobytes()).digest()


def cache_save(kl, path):
    g = kl.group
    n = g.order
    ws, ys, pids = [], [], []
    for w in range(n):
        row = kl.rows[w]
        yy = np.nonzero(row)[0]
        ys.append(yy)
        ws.append(np.full(len(yy), w, dtype=np.int64))
        pids.append(row[yy])
    ws = np.concatenate(ws).astype(np.int32)
    ys = np.concatenate(ys).astype(np.int32)
    pids = np.concatenate(pids).astype(np.int32)
    zs, wm, mv = [], [], []
    for w in range(n):
        za, ma = kl.mus[w]
        zs.append(np.asarray(za, dtype=np.int64))
        mv.append(np.asarray(ma, dtype=np.int64))
        wm.append(np.full(len(za), w, dtype=np.int64))
    zs = np.concatenate(zs).astype(np.int32)
    wm = np.concatenate(wm).astype(np.int32)
    mv = np.concatenate(mv).astype(np.int32)
    plens = np.array([len(p) for p in kl.polys], dtype=np.uint32)
    pdata = np.array([c for p in kl.polys for c in p], dtype=np.int64)
    header = _HEADER.pack(_MAGIC, _VERSION, group_hash(g),
                          enumeration_checksum(g), n, len(kl.polys),
                          len(ws), len(wm))
    tmp = path + ".tmp"
    with open(tmp, "wb") as f:
        f.write(header)
        f.write(plens.tobytes())
        f.write(pdata.tobytes())
        f.write(ws.tobytes())
        f.write(ys.tobytes())
        f.write(pids.tobytes())
        f.write(wm.tobytes())
        f.write(zs.tobytes())
        f.write(mv.tobytes())
    os.replace(tmp, path)
    return path


def _take(buf, off, dtype, count):
    arr = np.frombuffer(buf, dtype=dtype, count=count, offset=off)
    return arr, off + arr.nbytes


def cache_load(group, path, revalidate=100):
    """Rebuild a KLTable from a KLC1 file written for this group.

    Raises VersionMismatch on a foreign file, ChecksumMismatch when
    the group hash or enumeration checksum differs, or when any of the
    seeded random spot-recomputations disagrees with the file.
    """
    with open(path, "rb") as f:
        buf = f.read()
    if len(buf) < _HEADER.size or buf[:4] != _MAGIC:
        raise VersionMismatch("not a KLC1 file: %s" % path)
    magic, ver, ghash, echeck, n, npolys, npairs, nmu = \
        _HEADER.unpack_from(buf)
    if ver != _VERSION:
        raise VersionMismatch("format version %d" % ver)
    if ghash != group_hash(group):
        raise ChecksumMismatch("cache was written for a different group")
    if echeck != enumeration_checksum(group):
        raise ChecksumMismatch("element enumeration changed")
    if n != group.order:
        raise ChecksumMismatch("order mismatch")
    off = _HEADER.size
    plens, off = _take(buf, off, np.uint32, npolys)
    pdata, off = _take(buf, off, np.int64, int(plens.sum()))
    ws, off = _take(buf, off, np.int32, npairs)
    ys, off = _take(buf, off, np.int32, npairs)
    pids, off = _take(buf, off, np.int32, npairs)
    wm, off = _take(buf, off, np.int32, nmu)
    zs, off = _take(buf, off, np.int32, nmu)
    mv, off = _take(buf, off, np.int32, nmu)
    if off != len(buf):
        raise ChecksumMismatch("trailing bytes in cache file")
    polys = []
    pos = 0
    for ln in plens:
        polys.append(tuple(int(c) for c in pdata[pos:pos + int(ln)]))
        pos += int(ln)
    if polys[:2] != [(), (1,)]:
        raise ChecksumMismatch("corrupt polynomial table")
    R = np.zeros((n, n), dtype=np.int32)
    R[ws, ys] = pids
    rows = list(R)
    brows = [r != 0 for r in rows]
    cut = np.searchsorted(wm, np.arange(n + 1))
    mus = [(zs[cut[w]:cut[w + 1]].copy(), mv[cut[w]:cut[w + 1]].copy())
           for w in range(n)]
    kl = KLTable.__new__(KLTable)
    kl.group = group
    kl.backend = "cache"
    kl.polys = polys
    kl.rows = rows
    kl.brows = brows
    kl.mus = mus
    kl._mu_dict = None
    if revalidate:
        _spot_check(group, kl, revalidate)
    return kl


def _spot_check(group, kl, count):
    """Recompute a seeded sample of entries from the recursion and
    compare them with the loaded values."""
    rng = random.Random(0x4B4C4331)
    n = group.order
    for _ in range(count):
        w = rng.randrange(1, n) if n > 1 else 0
        cand = np.nonzero(kl.brows[w])[0]
        y = int(cand[rng.randrange(len(cand))])
        if not _entry_consistent(group, kl, y, w):
            raise ChecksumMismatch("spot check failed at y=%d w=%d" % (y, w))


def _entry_consistent(group, kl, y, w):
    if y == w:
        return kl.poly(y, w) == (1,)
    lw = int(group.length[w])
    d = int(group.left_desc[w])
    s = (d & -d).bit_length() - 1
    wp = int(group.lmul[s, w])
    sy = int(group.lmul[s, y])
    if group.length[sy] > group.length[y]:
        return kl.poly(y, w) == kl.poly(sy, w)
    a = kl.poly(sy, wp)
    b = kl.poly(y, wp)
    c = list(a) + [0] * max(0, len(b) + 1 - len(a))
    for k, v in enumerate(b):
        c[k + 1] += v
    za, ma = kl.mus[wp]
    for z, m in zip(za, ma):
        z = int(z)
        if not (int(group.left_desc[z]) >> s) & 1:
            continue
        p = kl.poly(y, z)
        sh = (lw - int(group.length[z])) >> 1
        if sh + len(p) > len(c):
            c.extend([0] * (sh + len(p) - len(c)))
        for k, v in enumerate(p):
            c[sh + k] -= int(m) * v
    while c and not c[-1]:
        c.pop()
    return tuple(c) == kl.poly(y, w)


def default_cache_dir():
    env = os.environ.get("KCV_CACHE_DIR")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "kcv")


def default_cache_path(group):
    name = "%s%d" % (group.series, group.rank)
    if group.series == "I2":
        name = "I2m%d" % group.m
    return os.path.join(default_cache_dir(), name + ".klc")
