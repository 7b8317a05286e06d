"""Shared helpers: run a component under a list sink and read traces back."""

from pihyflow import ListSink, hytime, run_simulation
from pihyflow.trace import PROCESS_TRANSITION, TRANSITION


def run_traced(component, end):
    sink = ListSink()
    summary = run_simulation(component, hytime(end), sink=sink)
    return summary, sink


def process_transitions(sink):
    """(transition time, path, process, t_last) for every process activation."""
    return [
        (r.time, r.path, r.payload["process"], r.payload["t_last"])
        for r in sink.select(PROCESS_TRANSITION)
    ]


def root_steps(sink, path):
    return sink.select(TRANSITION, path)
