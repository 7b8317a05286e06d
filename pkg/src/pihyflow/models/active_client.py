"""Active-client single-server queue.

Clients are processes: the source adds client names to the shared p-state,
which makes the current-processes function create a simulator for each; a
client removes itself on departure, which destroys its simulator.  The server
is plain data in the shared p-state.  The number of live simulators is one
(the source) plus the number of clients in the system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ..base import BaseComponent, BaseDefinition
from ..core import NULL, FlowValue, HyTime
from ..process import ProcessDefinition, Segment
from ..rng import Xoshiro256, stream
from ..trace import Context
from ._common import on_grid

SOURCE = "source"


@dataclass(frozen=True)
class Office:
    clients: tuple[str, ...] = ()
    line: tuple[str, ...] = ()
    server: str | None = None
    arrived: int = 0


@dataclass(frozen=True)
class Source:
    clock: float
    pending: tuple[float, ...]
    gap: float
    fired: bool
    rng: Xoshiro256 | None


@dataclass(frozen=True)
class Client:
    phase: str
    service: float


def parse_arrivals(text: str) -> tuple[float, ...]:
    """Parse ``"1,1,1,2.5"`` into sorted arrival times."""
    if not text.strip():
        return ()
    times = tuple(sorted(float(part) for part in text.split(",")))
    if any(not (math.isfinite(x) and x > 0) for x in times):
        raise ValueError(f"arrival times must be finite and > 0, got {text!r}")
    return times


def _client_names(office: Office, count: int) -> list[str]:
    return [f"client-{office.arrived + k + 1}" for k in range(count)]


def active_client_definition(
    arrivals: Sequence[float] = (),
    arrival_rate: float = 0.0,
    service_time: float = 1.0,
    service: str = "det",
    seed: int = 0,
) -> BaseDefinition:
    """``arrivals`` lists absolute arrival times (repeats make bursts); when
    empty, clients arrive with exponential gaps of rate ``arrival_rate``."""
    arrivals = tuple(sorted(arrivals))
    if arrival_rate < 0 or not math.isfinite(arrival_rate):
        raise ValueError(f"arrival_rate must be >= 0, got {arrival_rate}")
    if not (service_time > 0 and math.isfinite(service_time)):
        raise ValueError(f"service_time must be > 0, got {service_time}")
    if service not in ("det", "exp"):
        raise ValueError(f"service must be 'det' or 'exp', got {service!r}")

    def source_initial(name: str, office: Office) -> Source:
        if arrivals or arrival_rate == 0:
            return Source(0.0, arrivals, arrivals[0] if arrivals else math.inf, False, None)
        rng = stream(seed, name)
        gap, rng = rng.exponential(arrival_rate)
        return Source(0.0, (), gap, False, rng)

    def burst(src: Source) -> int:
        if src.rng is not None:
            return 1
        return sum(1 for x in src.pending if x == src.pending[0])

    def source_delta(src: Source, e: HyTime, office: Office):
        n = burst(src)
        names = _client_names(office, n)
        office = Office(office.clients + tuple(names), office.line + tuple(names), office.server, office.arrived + n)
        if src.rng is not None:
            gap, rng = src.rng.exponential(arrival_rate)
            return Source(src.clock + e.real, (), gap, True, rng), office
        now, rest = src.pending[0], src.pending[n:]
        gap = rest[0] - now if rest else math.inf
        return Source(now, rest, gap, True, None), office

    source = ProcessDefinition(
        initial=source_initial,
        segments={
            "run": Segment(
                time_to_output=lambda src: on_grid(src.gap, src.fired),
                transition=source_delta,
                discrete_output=lambda src, office: _client_names(office, burst(src)),
            )
        },
    )

    def client_initial(name: str, office: Office) -> Client:
        if service == "det":
            return Client("waiting", service_time)
        s, _ = stream(seed, name).exponential(1.0 / service_time)
        return Client("waiting", s)

    def make_seize(name: str):
        def seize(c: Client, e: HyTime, office: Office):
            office = Office(office.clients, office.line[1:], name, office.arrived)
            return Client("served", c.service), office

        return seize

    def make_depart(name: str):
        def depart(c: Client, e: HyTime, office: Office):
            clients = tuple(x for x in office.clients if x != name)
            return Client("gone", c.service), Office(clients, office.line, None, office.arrived)

        return depart

    def client(name: str) -> ProcessDefinition:
        return ProcessDefinition(
            initial=client_initial,
            index=lambda c: c.phase,
            segments={
                "waiting": Segment(
                    condition=lambda c, office: office.server is None and office.line[:1] == (name,),
                    transition=make_seize(name),
                ),
                "served": Segment(
                    time_to_output=lambda c: HyTime(c.service, 0),
                    transition=make_depart(name),
                    discrete_output=lambda c, office: name,
                ),
                "gone": Segment(),
            },
        )

    def definitions(name: str) -> ProcessDefinition:
        return source if name == SOURCE else client(name)

    def output(office: Office, values) -> FlowValue:
        events = {}
        by_name = dict(zip(sorted((SOURCE, *office.clients)), values))
        arrivals_now = by_name.pop(SOURCE).discrete
        if arrivals_now is not NULL:
            events["arrivals"] = arrivals_now
        departures = [v.discrete for v in by_name.values() if v.discrete is not NULL]
        if departures:
            events["departures"] = departures
        return FlowValue(len(office.clients), events or NULL)

    return BaseDefinition(
        initial=Office,
        processes=lambda office: frozenset((SOURCE, *office.clients)),
        definitions=definitions,
        output=output,
    )


def build_active_client(
    arrivals: Sequence[float] = (),
    arrival_rate: float = 0.0,
    service_time: float = 1.0,
    service: str = "det",
    seed: int = 0,
    context: Context | None = None,
    path: str = "active-client",
) -> BaseComponent:
    return BaseComponent(
        active_client_definition(arrivals, arrival_rate, service_time, service, seed), path, context
    )
