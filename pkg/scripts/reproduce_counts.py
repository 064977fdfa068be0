"""Reproduce the small classification counts and write them as JSONL.

    python3 scripts/reproduce_counts.py --out results
    python3 scripts/reproduce_counts.py --out results --two-letter   # adds N_4 over 2 pairs (minutes)
"""
from __future__ import annotations

import argparse
import json
import logging
import time
from pathlib import Path

from tilekit.census import tiling_classes
from tilekit.expand import build_n4_7, build_n4_8
from tilekit.iso import canonical_key
from tilekit.orbits import aggregate
from tilekit.partition import all_twin_pair_free
from tilekit.store import write_jsonl, write_manifest


def timed(label, fn, *args):
    t = time.perf_counter()
    out = fn(*args)
    logging.info("%s: %.1f s", label, time.perf_counter() - t)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results")
    ap.add_argument("--two-letter", action="store_true")
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    counts = {}
    for d, pairs in ((1, 2), (2, 2), (3, 2), (3, 4)):
        classes = timed(f"N{d} over {pairs} pairs", tiling_classes, d, pairs, args.workers)
        counts[f"N{d}^{pairs}"] = len(classes)
        report = aggregate([c.representative for c in classes], d, pairs, [c.key for c in classes])
        counts[f"M{d}^{pairs}"] = report.summary()["M"]
        if (d, pairs) == (3, 4):
            n3 = [c.representative for c in classes]
            write_jsonl(out / "n3.jsonl", [c.record() for c in classes], merge=False)

    tpf = timed("twin-pair-free", all_twin_pair_free, args.workers)
    counts["twin_pair_free"] = len(tpf)
    write_jsonl(out / "twin_pair_free.jsonl", [c.record() for c in tpf], merge=False)

    n8 = timed("N4^8", build_n4_8, n3)
    a, b = timed("N4^7", build_n4_7, n3, 8, args.workers)
    counts["N4^8"] = len({canonical_key(c) for c in n8})
    counts["N4^7"] = len({c.key for c in a} | {c.key for c in b})

    if args.two_letter:
        n42 = timed("N4^2", tiling_classes, 4, 2, args.workers)
        counts["N4^2"] = len(n42)
        write_jsonl(out / "n4_2.jsonl", [c.record() for c in n42], merge=False)

    path = out / "counts.json"
    path.write_text(json.dumps(counts, indent=2, sort_keys=True) + "\n")
    write_manifest(str(path), {"command": "reproduce_counts", "two_letter": args.two_letter})
    print(json.dumps(counts, sort_keys=True))


if __name__ == "__main__":
    main()
