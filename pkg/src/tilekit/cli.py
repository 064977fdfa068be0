"""Command line entry point: ``tilekit <command> [options]``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from .core import CodeError, format_word, is_layered, is_partition_code, is_polybox, \
    is_tiling_code, parse, serialize, twin_pairs, validate_polybox
from .iso import default_workers

log = logging.getLogger("tilekit")

EXIT_OK, EXIT_USAGE, EXIT_INVALID = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    dim: int | None = None
    pairs: int | None = None
    workers: int = 1
    budget: int = 10**6
    inp: str | None = None
    to: str | None = None
    out: str | None = None
    report: str = "orbits"
    full: bool = False
    plane: int | None = None
    dedup: bool = False
    iso: bool = False
    mode: str = "switch"

    def identity(self) -> dict:
        """The fields that determine the output (worker count does not)."""
        d = asdict(self)
        d.pop("workers")
        d.pop("out")
        return d


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", type=int)
    common.add_argument("--pairs", type=int)
    common.add_argument("--workers", type=int, default=None,
                        help="worker processes (default: TILEKIT_WORKERS or 1)")
    common.add_argument("--budget", type=int, default=10**6)
    common.add_argument("--in", dest="inp")
    common.add_argument("--out")
    common.add_argument("--report", choices=["orbits", "cylinders", "letters"], default="orbits")
    common.add_argument("--full", action="store_true")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="tilekit", description="Cube tiling codes: enumeration, "
                "classification, orbit counts and switching paths.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("enum-partition", parents=[common],
                   help="twin-pair-free partition codes of dimension 4")
    e = sub.add_parser("expand", parents=[common], help="expand a partition code into tiling codes")
    e.add_argument("--plane", type=int, help="use the named plane C^i instead of --in")
    e.add_argument("--dedup", action="store_true", help="one code per isomorphism class")
    sub.add_parser("classify", parents=[common], help="isomorphism classes of tiling codes")
    sub.add_parser("count", parents=[common], help="orbit counts from a class file")
    pa = sub.add_parser("path", parents=[common], help="switching path between two codes")
    pa.add_argument("--to", required=True)
    pa.add_argument("--iso", action="store_true", help="stop at any code isomorphic to --to")
    pa.add_argument("--mode", choices=["switch", "gluecut"], default="switch")
    c = sub.add_parser("connect", parents=[common], help="components of the switching graph")
    c.add_argument("--mode", choices=["switch", "gluecut"], default="switch")
    sub.add_parser("check", parents=[common], help="audit a code file")
    r = sub.add_parser("replay", parents=[common], help="apply a move log to a code")
    r.add_argument("--moves", required=True)
    return p


def _config(ns) -> RunConfig:
    cfg = RunConfig(command=ns.command)
    for f in ("dim", "pairs", "budget", "inp", "out", "report", "full", "plane", "dedup",
              "iso", "mode", "to"):
        if hasattr(ns, f):
            setattr(cfg, f, getattr(ns, f))
    cfg.workers = ns.workers if ns.workers is not None else default_workers()
    if cfg.dim is not None and not 1 <= cfg.dim <= 5:
        raise UsageError("--dim must be between 1 and 5")
    if cfg.pairs is not None:
        if not 1 <= cfg.pairs <= 16:
            raise UsageError("--pairs must be between 1 and 16")
        if cfg.dim is not None and cfg.pairs > 1 << (cfg.dim - 1):
            log.warning("more than 2^(dim-1) pairs never gives new classes")
    return cfg


def _need(cfg: RunConfig, *fields: str) -> None:
    for f in fields:
        if getattr(cfg, f) is None:
            raise UsageError(f"--{'in' if f == 'inp' else f} is required for {cfg.command}")


def _emit(cfg: RunConfig, records: list[dict], key: str = "canonical") -> None:
    from .store import write_jsonl, write_manifest
    if cfg.out:
        n = write_jsonl(cfg.out, records, key)
        write_manifest(cfg.out, cfg.identity(), records=n)


def _read_code(path: str):
    return parse(Path(path).read_text(encoding="utf-8"))


# -- commands -----------------------------------------------------------------------

def cmd_enum_partition(cfg: RunConfig) -> int:
    from .partition import all_twin_pair_free, enumerate_k
    records, total = [], 0
    for k in range(2, 17):
        codes = enumerate_k(k, cfg.workers)
        total += len(codes)
        print(f"k={k}: {len(codes)} codes")
    classes = all_twin_pair_free(cfg.workers)
    for cls in classes:
        r = cls.record()
        r.update({"dim": 4, "k": len(cls.representative)})
        records.append(r)
    print(f"{total} codes, {len(classes)} classes")
    _emit(cfg, records)
    return EXIT_OK


def cmd_expand(cfg: RunConfig) -> int:
    from .expand import expand_code
    from .iso import canonical_key
    from .planes import plane
    if cfg.plane is not None:
        src, name = plane(cfg.plane), f"C{cfg.plane}"
    else:
        _need(cfg, "inp")
        src, name = _read_code(cfg.inp), Path(cfg.inp).stem
    pairs = cfg.pairs or 2
    records = []
    for c in expand_code(src, range(pairs), dedup=cfg.dedup):
        if not is_tiling_code(c):
            print("expansion is not a cube tiling code", file=sys.stderr)
            return EXIT_INVALID
        records.append({"dim": c.dim, "k": len(c), "code": [format_word(w) for w in c.words],
                        "canonical": canonical_key(c), "source_class": name})
    print(f"{len(records)} codes")
    key = "canonical" if cfg.dedup else "code_text"
    for r in records:
        r["code_text"] = ",".join(r["code"])
    _emit(cfg, records, key)
    return EXIT_OK


def cmd_classify(cfg: RunConfig) -> int:
    from .census import tiling_classes
    from .iso import classify
    if cfg.inp:
        from .store import load_codes
        classes = classify(load_codes(cfg.inp), cfg.workers)
    else:
        _need(cfg, "dim", "pairs")
        if cfg.dim >= 4 and cfg.pairs > 2 and not cfg.full:
            raise UsageError("dimension 4 with more than 2 pairs is a long run; pass --full")
        classes = tiling_classes(cfg.dim, cfg.pairs, cfg.workers)
    print(f"{len(classes)} classes")
    _emit(cfg, [c.record() for c in classes])
    return EXIT_OK


def cmd_count(cfg: RunConfig) -> int:
    from .orbits import aggregate
    from .store import load_codes, read_jsonl
    _need(cfg, "inp")
    reps = load_codes(cfg.inp)
    keys = None
    if cfg.inp.endswith(".jsonl"):
        keys = [r["canonical"] for r in read_jsonl(cfg.inp)]
    dim = cfg.dim or reps[0].dim
    pairs = cfg.pairs or 1 << (dim - 1)
    report = aggregate(reps, dim, pairs, keys)
    print(json.dumps(report.summary(), sort_keys=True))
    text = report.csv(cfg.report)
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_path(cfg: RunConfig) -> int:
    from .gluecut import PathNotFound, find_path
    _need(cfg, "inp")
    v, u = _read_code(cfg.inp), _read_code(cfg.to)
    try:
        moves = find_path(v, u, cfg.budget, cfg.pairs, cfg.mode, cfg.iso)
    except PathNotFound as e:
        print(str(e), file=sys.stderr)
        return EXIT_INVALID
    text = "".join(f"{m}\n" for m in moves)
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8")
    sys.stdout.write(text)
    print(f"# {len(moves)} moves", file=sys.stderr)
    return EXIT_OK


def cmd_connect(cfg: RunConfig) -> int:
    from .cover import all_tiling_codes
    from .gluecut import connectivity
    from .store import load_codes
    if cfg.inp:
        codes = load_codes(cfg.inp)
    else:
        _need(cfg, "dim", "pairs")
        codes = all_tiling_codes(cfg.dim, cfg.pairs)
    comps = connectivity(codes, cfg.pairs, cfg.budget, cfg.mode)
    print(f"{len(codes)} codes, {len(comps)} components")
    return EXIT_OK if len(comps) == 1 else EXIT_INVALID


def cmd_check(cfg: RunConfig) -> int:
    _need(cfg, "inp")
    c = _read_code(cfg.inp)
    bad = validate_polybox(c)
    yes = {True: "yes", False: "no"}
    print(f"words: {len(c)}")
    print(f"dimension: {c.dim}")
    print(f"polybox: {yes[not bad]}")
    for v, u in bad[:10]:
        print(f"  not dichotomous: {format_word(v)} {format_word(u)}")
    if bad:
        return EXIT_INVALID
    part = is_partition_code(c)
    print(f"partition-code: {yes[part]}")
    print(f"cube-tiling-code: {yes[is_tiling_code(c)]}")
    print(f"twin-pair-free: {yes[not twin_pairs(c)]}")
    lay = is_layered(c)
    print("layered: " + ("no" if lay is None else
                         f"yes (position {lay[0] + 1}, pair {format_word((2 * lay[1],))})"))
    return EXIT_OK if part else EXIT_INVALID


def cmd_replay(cfg: RunConfig, moves_path: str) -> int:
    from .gluecut import Move, replay
    _need(cfg, "inp")
    c = _read_code(cfg.inp)
    lines = [ln for ln in Path(moves_path).read_text(encoding="utf-8").splitlines()
             if ln.strip() and not ln.startswith("#")]
    try:
        c = replay(c, [Move.parse(ln) for ln in lines])
    except CodeError as e:
        print(f"move failed: {e}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(serialize(c))
    return EXIT_OK


COMMANDS = {
    "enum-partition": cmd_enum_partition,
    "expand": cmd_expand,
    "classify": cmd_classify,
    "count": cmd_count,
    "path": cmd_path,
    "connect": cmd_connect,
    "check": cmd_check,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                            format="%(asctime)s %(levelname)s %(message)s")
        cfg = _config(ns)
        if ns.command == "replay":
            return cmd_replay(cfg, ns.moves)
        return COMMANDS[ns.command](cfg)
    except UsageError as e:
        print(f"tilekit: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (CodeError, OSError, ValueError) as e:
        print(f"tilekit: {e}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
