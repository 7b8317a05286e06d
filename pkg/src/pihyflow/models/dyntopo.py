"""A network whose executive reroutes a source from one sink to another.

The source emits a numbered event every ``period``.  The executive starts in
phase ``A`` (source feeds ``sink-a``) and switches to phase ``B`` (source
feeds ``sink-b``) at ``switch_time``.  Because the executive transitions last,
an event emitted exactly at the switch instant still reaches ``sink-a``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..base import BaseDefinition
from ..core import NULL, FlowValue, HyTime
from ..network import (
    EXECUTIVE,
    NETWORK,
    Coupling,
    ExecutiveDefinition,
    NetworkComponent,
    NetworkDefinition,
    Topology,
)
from ..process import ProcessDefinition, Segment
from ..trace import Context
from ._common import on_grid


@dataclass(frozen=True)
class Emitter:
    period: float
    count: int


@dataclass(frozen=True)
class Switch:
    at: float
    done: bool


def source_definition(period: float) -> BaseDefinition:
    emitter = ProcessDefinition(
        initial=lambda name, shared: Emitter(period, 0),
        segments={
            "emit": Segment(
                time_to_output=lambda em: on_grid(em.period, em.count > 0),
                transition=lambda em, e, shared: (Emitter(em.period, em.count + 1), shared),
                continuous_output=lambda em, e, shared: em.count,
                discrete_output=lambda em, shared: em.count + 1,
            )
        },
    )
    return BaseDefinition(
        initial=lambda: None,
        processes=lambda p: frozenset(("emitter",)),
        definitions={"emitter": emitter},
    )


def sink_definition() -> BaseDefinition:
    """Records every event it receives; it has no processes of its own."""

    def receive(received: tuple, x: FlowValue) -> tuple:
        if x.discrete is NULL:
            return received
        return received + (x.discrete,)

    return BaseDefinition(
        initial=tuple,
        processes=lambda received: frozenset(),
        definitions={},
        input=receive,
        output=lambda received, values: FlowValue(len(received), NULL),
    )


def _topology(phase: str) -> Topology:
    target = "sink-a" if phase == "A" else "sink-b"
    return Topology(
        components={"source": "source", "sink-a": "sink", "sink-b": "sink"},
        influencers={target: ("source",), NETWORK: ("sink-a", "sink-b"), EXECUTIVE: ()},
        output_function=Coupling(continuous=lambda counts: {"sink-a": counts[0], "sink-b": counts[1]}),
    )


TOPOLOGIES = {"A": _topology("A"), "B": _topology("B")}


def executive_definition(switch_time: float) -> ExecutiveDefinition:
    switch = ProcessDefinition(
        initial=lambda name, phase: Switch(switch_time, False),
        segments={
            "arm": Segment(
                time_to_output=lambda s: HyTime(math.inf) if s.done else on_grid(s.at, False),
                transition=lambda s, e, phase: (Switch(s.at, True), "B"),
            )
        },
    )
    return ExecutiveDefinition(
        initial=lambda: "A",
        processes=lambda phase: frozenset(("switch",)),
        definitions={"switch": switch},
        topology=TOPOLOGIES.__getitem__,
    )


def dyntopo_definition(switch_time: float = 10.0, period: float = 1.0) -> NetworkDefinition:
    if not (switch_time > 0 and math.isfinite(switch_time)):
        raise ValueError(f"switch_time must be > 0, got {switch_time}")
    if not (period > 0 and math.isfinite(period)):
        raise ValueError(f"period must be > 0, got {period}")
    return NetworkDefinition(
        executive=executive_definition(switch_time),
        models={"source": source_definition(period), "sink": sink_definition()},
    )


def build_dynamic_topology(
    switch_time: float = 10.0,
    period: float = 1.0,
    context: Context | None = None,
    path: str = "dyntopo",
) -> NetworkComponent:
    return NetworkComponent(dyntopo_definition(switch_time, period), path, context)


def received(component: NetworkComponent) -> dict[str, tuple]:
    return {name: component.children[name].p for name in ("sink-a", "sink-b")}
