"""JSONL result files with a manifest next to them."""
from __future__ import annotations

import hashlib
import json
from collections.abc import Iterable
from pathlib import Path

from .core import Code, parse

VERSION = "0.1.0"


def config_hash(config: dict) -> str:
    blob = json.dumps(config, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def read_jsonl(path: str | Path) -> list[dict]:
    out = []
    with open(path, encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if line:
                out.append(json.loads(line))
    return out


def write_jsonl(path: str | Path, records: Iterable[dict], key: str = "canonical",
                merge: bool = True) -> int:
    """Write records sorted by ``key``; existing records with a new key are kept.

    Returns the number of records in the file afterwards.
    """
    path = Path(path)
    rows = {}
    if merge and path.exists():
        for r in read_jsonl(path):
            rows[r[key]] = r
    for r in records:
        rows[r[key]] = r
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for k in sorted(rows):
            f.write(json.dumps(rows[k], sort_keys=True) + "\n")
    return len(rows)


def write_manifest(path: str | Path, config: dict, **extra) -> None:
    data = {"tool": "tilekit", "version": VERSION, "config": config,
            "config_hash": config_hash(config), **extra}
    Path(str(path) + ".manifest.json").write_text(
        json.dumps(data, sort_keys=True, indent=2) + "\n", encoding="utf-8")


def load_codes(path: str | Path, field: str | None = None) -> list[Code]:
    """Codes from a JSONL file (``representative`` or ``code`` field) or a code file."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".jsonl":
        out = []
        for r in read_jsonl(path):
            words = r[field] if field else r.get("representative", r.get("code"))
            out.append(parse("\n".join(words)))
        return out
    return [parse(text)]
