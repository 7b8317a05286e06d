"""Command line: ``sim list`` and ``sim run``.

Exit codes: 0 success, 1 usage error, 2 model defect (livelock, invalid
topology, broken model contract).
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from dataclasses import dataclass, field
from typing import Mapping, Sequence, TextIO

from .core import HyTime, hytime
from .errors import ModelError
from .models import REGISTRY, ModelEntry
from .root import run_simulation
from .trace import Context, CsvSink, JsonlSink, ThreadedSink

log = logging.getLogger("pihyflow")

U64_MAX = (1 << 64) - 1
LOG_LEVELS = {"off": logging.CRITICAL + 1, "info": logging.INFO, "debug": logging.DEBUG}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    model: str
    end: float
    seed: int = 0
    params: dict[str, str] = field(default_factory=dict)
    out: str | None = None
    format: str = "jsonl"
    max_cond_iters: int = 10_000
    writer_thread: bool = False

    def validate(self, registry: Mapping[str, ModelEntry]) -> None:
        if self.model not in registry:
            raise UsageError(f"unknown model {self.model!r}; try 'sim list'")
        if not (math.isfinite(self.end) and self.end >= 0):
            raise UsageError(f"--end must be a finite number >= 0, got {self.end}")
        if not 0 <= self.seed <= U64_MAX:
            raise UsageError(f"--seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.format not in ("jsonl", "csv"):
            raise UsageError(f"--format must be jsonl or csv, got {self.format!r}")
        if self.max_cond_iters < 1:
            raise UsageError("--max-cond-iters must be positive")
        try:
            registry[self.model].parse_params(self.params)
        except ValueError as exc:
            raise UsageError(str(exc)) from None


def _build_parser() -> _Parser:
    parser = _Parser(prog="sim", description="Run example hybrid process-interaction models.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    lister = sub.add_parser("list", help="list registered models and their parameters")
    lister.add_argument("--json", action="store_true", help="machine-readable listing")

    runner = sub.add_parser(
        "run",
        help="run a model and write its trace",
        description="Model parameters go in --param key=value or directly as --key value.",
    )
    runner.add_argument("model")
    runner.add_argument("--end", type=float, required=True, help="stop before this time")
    runner.add_argument("--seed", type=int, default=0)
    runner.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    runner.add_argument("--out", help="trace file; no trace is written when omitted")
    runner.add_argument("--format", default="jsonl", help="jsonl or csv")
    runner.add_argument("--max-cond-iters", type=int, default=10_000)
    runner.add_argument("--writer-thread", action="store_true", help="write the trace on a separate thread")
    return parser


def _extra_params(extra: Sequence[str]) -> dict[str, str]:
    """Turn leftover ``--key value`` / ``--key=value`` words into parameters."""
    params: dict[str, str] = {}
    i = 0
    while i < len(extra):
        word = extra[i]
        if not word.startswith("--") or len(word) == 2:
            raise UsageError(f"unexpected argument {word!r}")
        key = word[2:]
        if "=" in key:
            key, value = key.split("=", 1)
        elif i + 1 < len(extra):
            i += 1
            value = extra[i]
        else:
            raise UsageError(f"missing value for {word}")
        params[key] = value
        i += 1
    return params


def parse_run_config(argv: Sequence[str]) -> RunConfig:
    args, extra = _build_parser().parse_known_args(["run", *argv])
    params = _extra_params(extra)
    for item in args.param:
        if "=" not in item:
            raise UsageError(f"--param expects KEY=VALUE, got {item!r}")
        key, value = item.split("=", 1)
        params[key] = value
    return RunConfig(
        model=args.model,
        end=args.end,
        seed=args.seed,
        params=params,
        out=args.out,
        format=args.format,
        max_cond_iters=args.max_cond_iters,
        writer_thread=args.writer_thread,
    )


def cmd_list(registry: Mapping[str, ModelEntry] = REGISTRY, as_json: bool = False, stream: TextIO | None = None) -> int:
    stream = stream or sys.stdout
    if as_json:
        listing = [
            {
                "name": entry.name,
                "doc": entry.doc,
                "seeded": entry.seeded,
                "params": [{"name": p.name, "default": p.default, "doc": p.doc} for p in entry.params],
            }
            for entry in registry.values()
        ]
        json.dump(listing, stream, indent=2, default=list)
        stream.write("\n")
        return 0
    for entry in registry.values():
        stream.write(f"{entry.name}: {entry.doc}\n")
        for p in entry.params:
            stream.write(f"    {p.name} (default {p.default!r}): {p.doc}\n")
    return 0


def _format_time(t: HyTime) -> str:
    return "inf" if t.is_infinite else f"({t.real!r}, {t.eps})"


def cmd_run(cfg: RunConfig, registry: Mapping[str, ModelEntry] = REGISTRY, stream: TextIO | None = None) -> int:
    stream = stream or sys.stdout
    cfg.validate(registry)
    context = Context(max_cond_iters=cfg.max_cond_iters)
    try:
        component = registry[cfg.model].build(cfg.params, cfg.seed, context)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    handle = None
    if cfg.out is not None:
        try:
            handle = open(cfg.out, "w", encoding="utf-8", newline="")
        except OSError as exc:
            raise UsageError(f"cannot write {cfg.out}: {exc.strerror}") from None
        sink = JsonlSink(handle) if cfg.format == "jsonl" else CsvSink(handle)
        context.sink = ThreadedSink(sink) if cfg.writer_thread else sink

    log.info("running %s until %s (seed %d)", cfg.model, cfg.end, cfg.seed)
    try:
        summary = run_simulation(component, hytime(cfg.end))
    finally:
        if context.sink is not None:
            context.sink.close()
        if handle is not None:
            handle.close()
    stream.write(f"model: {cfg.model}\n")
    stream.write(f"steps: {summary.steps}\n")
    stream.write(f"final clock: {_format_time(summary.final_clock)}\n")
    stream.write(f"wall time: {summary.wall_time:.3f}s\n")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    level = os.environ.get("SIM_LOG", "off").lower()
    logging.basicConfig(level=LOG_LEVELS.get(level, LOG_LEVELS["off"]), format="%(levelname)s %(name)s: %(message)s")
    try:
        if argv[:1] == ["run"]:
            return cmd_run(parse_run_config(argv[1:]))
        args = _build_parser().parse_args(argv)
        return cmd_list(as_json=args.json)
    except UsageError as exc:
        sys.stderr.write(f"sim: error: {exc}\n")
        return 1
    except ModelError as exc:
        sys.stderr.write(f"sim: model defect: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
