"""Command line front end.

`kcv verify --type D --rank 5 --twist diagram --report out.json` runs
the class-by-cell check and writes a kcv-report/1 JSON document.
Exit status: 0 all matched, 1 mismatches, 2 usage or capability error.
"""

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .cache import cache_load, cache_save, default_cache_path
from .coxeter import build_group
from .errors import CapExceeded, UnsupportedType
from .klcells import KERNEL, KLTable
from .symbols import sigma_word
from .twisted import (BnPair, diagram_automorphism, identity_automorphism,
                      w0_conjugation)
from .verify import (ExtendedCells, verify_kottwitz, verify_modified_Bn,
                     verify_split_quasisplit_Dn)


def _json_default(x):
    if isinstance(x, Fraction):
        return "%d/%d" % (x.numerator, x.denominator)
    raise TypeError(type(x))


def render_report(report):
    """Canonical bytes of a report: UTF-8, sorted keys, newline at
    the end, no floats."""
    return (json.dumps(report, sort_keys=True, indent=2,
                       default=_json_default) + "\n").encode("utf-8")


def _group_info(group):
    return {"type": group.series, "rank": group.rank,
            "m": group.m if group.series == "I2" else None,
            "order": group.order}


def _get_kl(group, cache_path):
    if cache_path is None:
        return KLTable(group)
    if os.path.exists(cache_path):
        return cache_load(group, cache_path)
    kl = KLTable(group)
    os.makedirs(os.path.dirname(cache_path) or ".", exist_ok=True)
    cache_save(kl, cache_path)
    return kl


def _report_skeleton(group, twist, t0):
    return {
        "schema": "kcv-report/1",
        "tool": {"name": "kcv", "version": __version__, "kernel": KERNEL},
        "group": _group_info(group),
        "automorphism": twist,
        # wall time goes to stderr so report bytes stay deterministic
        "summary": {"wall_time_ms": None},
    }


def run_verify(args):
    t0 = time.perf_counter()
    group = build_group(args.type, args.rank, m=args.m,
                        max_order=args.max_order)
    cache_path = args.cache
    if cache_path is None and os.environ.get("KCV_CACHE_DIR"):
        cache_path = default_cache_path(group)

    if args.modified:
        if args.type != "B":
            raise UnsupportedType("--modified needs --type B")
        pair = BnPair(args.rank, max_order=args.max_order)
        dpath = None
        if cache_path is not None:
            dpath = os.path.join(os.path.dirname(cache_path) or ".",
                                 "D%d.klc" % args.rank)
        kl = _get_kl(pair.D, dpath)
        ext = ExtendedCells(pair, kl=kl)
        res = verify_modified_Bn(args.rank, ext=ext)
        derived = verify_split_quasisplit_Dn(ext)
        report = _report_skeleton(group, "modified", t0)
        records = []
        for e in res["entries"]:
            records.append({
                "class_rep_word": list(sigma_word(args.rank, e["l"],
                                                  e["j"])),
                "cell_id": e["cell"],
                "intersection_count": e["count"],
                "scalar_product": e["scalar"],
                "match": e["ok"],
            })
        report["records"] = records
        report["derived"] = {
            "split_mismatches": sum(
                1 for e in derived["entries"]
                if e["setting"] == "split" and not e["ok"]),
            "quasi_split_mismatches": sum(
                1 for e in derived["entries"]
                if e["setting"] == "quasi-split" and not e["ok"]),
        }
        mism = res["mismatches"] + derived["mismatches"]
        report["summary"].update({
            "cells": res["num_cells"],
            "classes": len({(e["l"], e["j"]) for e in res["entries"]}),
            "mismatches": mism,
        })
    else:
        if args.twist == "none":
            dia = identity_automorphism(group)
        elif args.twist == "diagram":
            dia = diagram_automorphism(group)
        else:
            dia = w0_conjugation(group)
        kl = _get_kl(group, cache_path)
        res = verify_kottwitz(group, dia, kl=kl, jobs=max(1, args.jobs))
        report = _report_skeleton(group, args.twist, t0)
        report["records"] = [{
            "class_rep_word": [int(s) for s in group.words[e["rep"]]],
            "cell_id": e["cell"],
            "intersection_count": e["count"],
            "scalar_product": e["scalar"],
            "match": e["ok"],
        } for e in res["entries"]]
        mism = res["mismatches"]
        report["summary"].update({
            "cells": res["num_cells"],
            "classes": res["num_classes"],
            "mismatches": mism,
        })

    data = render_report(report)
    if args.report:
        with open(args.report, "wb") as f:
            f.write(data)
    else:
        sys.stdout.buffer.write(data)
    ms = int(1000 * (time.perf_counter() - t0))
    print("%d record(s), %d mismatch(es), %d ms"
          % (len(report["records"]), mism, ms), file=sys.stderr)
    return 1 if mism else 0


def main(argv=None):
    ap = argparse.ArgumentParser(prog="kcv")
    sub = ap.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run the class-by-cell check")
    v.add_argument("--type", required=True,
                   choices=["A", "B", "D", "F4", "I2"])
    v.add_argument("--rank", type=int, required=True)
    v.add_argument("--m", type=int, default=None,
                   help="dihedral parameter for --type I2")
    v.add_argument("--twist", choices=["none", "diagram", "w0"],
                   default="none")
    v.add_argument("--modified", action="store_true",
                   help="extended-group mode (type B only)")
    v.add_argument("--report", metavar="PATH")
    v.add_argument("--cache", metavar="PATH")
    v.add_argument("--jobs", type=int, default=1,
                   help="worker threads for the per-class characters")
    v.add_argument("--max-order", type=int, default=10 ** 7)
    args = ap.parse_args(argv)
    try:
        return run_verify(args)
    except (CapExceeded, UnsupportedType) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
