"""Asynchronous sampling of an exact continuous flow.

A source emits ``f(t) = t**2`` through its continuous output function.  A
sink reads that flow with two sampler processes, each on its own sampling
period; the sink's input function stores the flow value it receives at every
sink transition and the samplers copy it into a log.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..base import BaseDefinition
from ..core import NULL, FlowValue, HyTime
from ..network import EXECUTIVE, NETWORK, ExecutiveDefinition, NetworkComponent, NetworkDefinition, Topology
from ..process import ProcessDefinition, Segment
from ..trace import Context
from ._common import on_grid

PERIODS = {"sampler-1": 0.5, "sampler-2": 0.7}


@dataclass(frozen=True)
class Ramp:
    start: float


@dataclass(frozen=True)
class SinkState:
    last_input: float | None = None
    samples: tuple[tuple[str, float], ...] = ()


@dataclass(frozen=True)
class Sampler:
    name: str
    period: float
    count: int


def square(t: float) -> float:
    return t**2


def source_definition() -> BaseDefinition:
    flow = ProcessDefinition(
        initial=lambda name, shared: Ramp(0.0),
        segments={"flow": Segment(continuous_output=lambda r, e, shared: square(r.start + e.real))},
    )
    return BaseDefinition(
        initial=lambda: None,
        processes=lambda p: frozenset(("flow",)),
        definitions={"flow": flow},
    )


def sink_definition(periods: dict[str, float] = PERIODS) -> BaseDefinition:
    def sample(s: Sampler, e: HyTime, state: SinkState):
        samples = state.samples + ((s.name, state.last_input),)
        return Sampler(s.name, s.period, s.count + 1), SinkState(state.last_input, samples)

    sampler = ProcessDefinition(
        initial=lambda name, state: Sampler(name, periods[name], 0),
        segments={
            "sample": Segment(
                time_to_input=lambda s: on_grid(s.period, s.count > 0),
                transition=sample,
            )
        },
    )

    def output(state: SinkState, values) -> FlowValue:
        return FlowValue(state.last_input, NULL)

    names = frozenset(periods)
    return BaseDefinition(
        initial=SinkState,
        processes=lambda state: names,
        definitions=dict.fromkeys(periods, sampler),
        input=lambda state, x: SinkState(x.continuous, state.samples),
        output=output,
    )


def _static_executive(topology: Topology) -> ExecutiveDefinition:
    return ExecutiveDefinition(
        initial=lambda: None,
        processes=lambda p: frozenset(),
        definitions={},
        topology=lambda p: topology,
    )


def sampling_definition() -> NetworkDefinition:
    topology = Topology(
        components={"source": "source", "sink": "sink"},
        influencers={"sink": ("source",), NETWORK: ("sink",), EXECUTIVE: ()},
    )
    return NetworkDefinition(
        executive=_static_executive(topology),
        models={"source": source_definition(), "sink": sink_definition()},
    )


def build_sampling_demo(context: Context | None = None, path: str = "sampling-demo") -> NetworkComponent:
    return NetworkComponent(sampling_definition(), path, context)


def samples(component: NetworkComponent) -> tuple[tuple[str, float], ...]:
    return component.children["sink"].p.samples
