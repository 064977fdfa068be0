"""Full classification of cube tiling codes of dimension 4 over eight pairs.

Writes one JSONL record per class and orbit reports next to it.  Progress is
checkpointed after every dimension-3 representative; rerunning with the same
output path resumes.

    python3 scripts/full_census.py --out results/n4.jsonl
"""
from __future__ import annotations

import argparse
import json
import logging
import time
from pathlib import Path

from tilekit.census import extend_classes, tiling_classes
from tilekit.core import parse
from tilekit.iso import IsoClass
from tilekit.orbits import aggregate
from tilekit.store import read_jsonl, write_jsonl, write_manifest


def _load(out: Path) -> tuple[dict[str, IsoClass], int]:
    ck = Path(str(out) + ".checkpoint.json")
    if not ck.exists() or not out.exists():
        return {}, 0
    done = json.loads(ck.read_text())["done"]
    classes = {}
    for r in read_jsonl(out):
        rep = parse("\n".join(r["representative"]))
        classes[r["canonical"]] = IsoClass(rep, r["canonical"], r["class_size_in_input"],
                                           tuple(r["tp"]), tuple(map(tuple, r["profile"])))
    return classes, done


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results/n4.jsonl")
    ap.add_argument("--pairs", type=int, default=8)
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    config = {"command": "full_census", "dim": 4, "pairs": args.pairs}

    n3 = [c.representative for c in tiling_classes(3, min(args.pairs, 4))]
    start, done = _load(out)
    t0 = time.time()

    def checkpoint(n, classes):
        write_jsonl(out, [c.record() for c in classes.values()], merge=False)
        Path(str(out) + ".checkpoint.json").write_text(json.dumps({"done": n + 1}))
        logging.info("checkpoint %d/%d after %.0f s", n + 1, len(n3), time.time() - t0)

    classes = extend_classes(n3, args.pairs, args.workers, start, done, checkpoint)
    write_jsonl(out, [c.record() for c in classes], merge=False)
    report = aggregate([c.representative for c in classes], 4, args.pairs,
                       [c.key for c in classes])
    write_manifest(out, config, records=len(classes), summary=report.summary())
    for name in ("orbits", "cylinders", "letters"):
        out.with_suffix(f".{name}.csv").write_text(report.csv(name))
    print(json.dumps(report.summary(), sort_keys=True))


if __name__ == "__main__":
    main()
