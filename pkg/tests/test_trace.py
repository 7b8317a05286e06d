import io

from pihyflow import HyTime
from pihyflow.models.toys import build_timer
from pihyflow.trace import CsvSink, JsonlSink, ListSink, ThreadedSink, TraceRecord, read_csv, read_jsonl

from helpers import run_traced


def records():
    _, sink = run_traced(build_timer(2.0), 7.0)
    return list(sink)


def test_jsonl_round_trip():
    buf = io.StringIO()
    sink = JsonlSink(buf)
    recs = records()
    for r in recs:
        sink.append(r)
    rows = read_jsonl(buf.getvalue().splitlines())
    assert rows == [r.to_dict() for r in recs]


def test_csv_round_trip():
    buf = io.StringIO()
    sink = CsvSink(buf)
    recs = records()
    for r in recs:
        sink.append(r)
    assert buf.getvalue().startswith("t,eps,path,kind,payload")
    assert read_csv(buf.getvalue()) == [r.to_dict() for r in recs]


def test_threaded_sink_preserves_order():
    inner = ListSink()
    sink = ThreadedSink(inner)
    recs = [TraceRecord(HyTime(float(i), 0), "p", "output", i) for i in range(1000)]
    for r in recs:
        sink.append(r)
    sink.close()
    assert list(inner) == recs


def test_select():
    sink = ListSink()
    sink.append(TraceRecord(HyTime(1.0, 0), "a", "output", 1))
    sink.append(TraceRecord(HyTime(1.0, 0), "b", "transition", 2))
    assert [r.payload for r in sink.select(path="b")] == [2]
    assert [r.payload for r in sink.select(kind="output")] == [1]
