"""Trace records, sinks and the simulation context shared by a component tree."""

from __future__ import annotations

import csv
import io
import json
import queue
import threading
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Protocol, TextIO

from .core import HyTime, to_jsonable

OUTPUT = "output"
TRANSITION = "transition"
PROCESS_TRANSITION = "process-transition"
TOPOLOGY_CHANGE = "topology-change"

FIELDS = ("t", "eps", "path", "kind", "payload")


@dataclass(frozen=True)
class TraceRecord:
    time: HyTime
    path: str
    kind: str
    payload: Any

    def to_dict(self) -> dict[str, Any]:
        t = self.time.to_json()
        return {"t": t["t"], "eps": t["eps"], "path": self.path, "kind": self.kind, "payload": self.payload}


class TraceSink(Protocol):
    def append(self, record: TraceRecord) -> None: ...

    def close(self) -> None: ...


class ListSink:
    """Keeps records in memory; the default for tests."""

    def __init__(self):
        self.records: list[TraceRecord] = []

    def append(self, record: TraceRecord) -> None:
        self.records.append(record)

    def close(self) -> None:
        pass

    def __iter__(self) -> Iterator[TraceRecord]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def select(self, kind: str | None = None, path: str | None = None) -> list[TraceRecord]:
        return [
            r
            for r in self.records
            if (kind is None or r.kind == kind) and (path is None or r.path == path)
        ]


def dumps_jsonl(record: TraceRecord) -> str:
    return json.dumps(record.to_dict(), ensure_ascii=False, allow_nan=False)


class JsonlSink:
    def __init__(self, stream: TextIO):
        self.stream = stream

    def append(self, record: TraceRecord) -> None:
        self.stream.write(dumps_jsonl(record))
        self.stream.write("\n")

    def close(self) -> None:
        self.stream.flush()


class CsvSink:
    def __init__(self, stream: TextIO):
        self.stream = stream
        self._writer = csv.writer(stream, lineterminator="\n")
        self._writer.writerow(FIELDS)

    def append(self, record: TraceRecord) -> None:
        row = record.to_dict()
        row["payload"] = json.dumps(row["payload"], ensure_ascii=False, allow_nan=False)
        self._writer.writerow([row[k] for k in FIELDS])

    def close(self) -> None:
        self.stream.flush()


class ThreadedSink:
    """Hands records to ``inner`` on a writer thread through a FIFO queue."""

    _STOP = object()

    def __init__(self, inner: TraceSink, maxsize: int = 10_000):
        self.inner = inner
        self._queue: queue.Queue = queue.Queue(maxsize)
        self._error: BaseException | None = None
        self._thread = threading.Thread(target=self._drain, name="trace-writer", daemon=True)
        self._thread.start()

    def _drain(self) -> None:
        while True:
            item = self._queue.get()
            if item is self._STOP:
                return
            if self._error is None:
                try:
                    self.inner.append(item)
                except BaseException as exc:  # surfaced on close()
                    self._error = exc

    def append(self, record: TraceRecord) -> None:
        self._queue.put(record)

    def close(self) -> None:
        self._queue.put(self._STOP)
        self._thread.join()
        self.inner.close()
        if self._error is not None:
            raise self._error


def read_jsonl(lines: Iterable[str]) -> list[dict[str, Any]]:
    return [json.loads(line) for line in lines if line.strip()]


def read_csv(text: str) -> list[dict[str, Any]]:
    rows = []
    for row in csv.DictReader(io.StringIO(text)):
        t = row["t"]
        rows.append(
            {
                "t": t if t == "inf" else float(t),
                "eps": int(row["eps"]),
                "path": row["path"],
                "kind": row["kind"],
                "payload": json.loads(row["payload"]),
            }
        )
    return rows


@dataclass
class Context:
    """Settings and the trace sink shared by every component of one tree."""

    sink: TraceSink | None = None
    max_cond_iters: int = 10_000

    def emit(self, time: HyTime, path: str, kind: str, payload: Any) -> None:
        if self.sink is not None:
            self.sink.append(TraceRecord(time, path, kind, to_jsonable(payload)))
