"""One queue feeding two servers, modelled as a single base model.

The queue lives in the shared p-state.  A generator process appends clients;
each server process waits on the condition "idle and queue not empty", so a
client arriving to an idle server starts service in the same instant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

from ..base import BaseComponent, BaseDefinition
from ..core import NULL, FlowValue, HyTime
from ..process import ProcessDefinition, Segment
from ..rng import Xoshiro256, stream
from ..trace import Context
from ._common import on_grid

SERVERS = ("server-a", "server-b")
PROCESSES = frozenset(("generator", *SERVERS))


@dataclass(frozen=True)
class Shop:
    queue: tuple[tuple[int, float], ...] = ()
    waited: float = 0.0
    started: int = 0
    departed: int = 0


@dataclass(frozen=True)
class Generator:
    clock: float
    gap: float
    next_id: int
    fired: bool
    rng: Xoshiro256


@dataclass(frozen=True)
class Server:
    phase: str
    clock: float
    client: int | None
    service: float
    rng: Xoshiro256


def _draw(rng: Xoshiro256, rate: float, dist: str) -> tuple[float, Xoshiro256]:
    if rate == 0:
        return math.inf, rng
    if dist == "det":
        return 1.0 / rate, rng
    return rng.exponential(rate)


def mm2_definition(
    arrival_rate: float = 1.0,
    service_rate: float = 0.75,
    seed: int = 0,
    dist: str = "exp",
) -> BaseDefinition:
    if not (arrival_rate >= 0 and math.isfinite(arrival_rate)):
        raise ValueError(f"arrival_rate must be >= 0, got {arrival_rate}")
    if not (service_rate > 0 and math.isfinite(service_rate)):
        raise ValueError(f"service_rate must be > 0, got {service_rate}")
    if dist not in ("exp", "det"):
        raise ValueError(f"dist must be 'exp' or 'det', got {dist!r}")

    def gen_initial(name: str, shop: Shop) -> Generator:
        rng = stream(seed, name)
        gap, rng = _draw(rng, arrival_rate, dist)
        return Generator(0.0, gap, 1, False, rng)

    def gen_delta(g: Generator, e: HyTime, shop: Shop):
        now = g.clock + e.real
        gap, rng = _draw(g.rng, arrival_rate, dist)
        shop = Shop(shop.queue + ((g.next_id, now),), shop.waited, shop.started, shop.departed)
        return Generator(now, gap, g.next_id + 1, True, rng), shop

    generator = ProcessDefinition(
        initial=gen_initial,
        segments={
            "run": Segment(
                time_to_output=lambda g: on_grid(g.gap, g.fired),
                transition=gen_delta,
                discrete_output=lambda g, shop: g.next_id,
            )
        },
    )

    def server_initial(name: str, shop: Shop) -> Server:
        return Server("idle", 0.0, None, 0.0, stream(seed, name))

    def start(s: Server, e: HyTime, shop: Shop):
        now = s.clock + e.real
        (client, arrived), rest = shop.queue[0], shop.queue[1:]
        service, rng = _draw(s.rng, service_rate, dist)
        shop = Shop(rest, shop.waited + (now - arrived), shop.started + 1, shop.departed)
        return Server("busy", now, client, service, rng), shop

    def finish(s: Server, e: HyTime, shop: Shop):
        now = s.clock + e.real
        shop = Shop(shop.queue, shop.waited, shop.started, shop.departed + 1)
        return Server("idle", now, None, 0.0, s.rng), shop

    server = ProcessDefinition(
        initial=server_initial,
        index=lambda s: s.phase,
        segments={
            "idle": Segment(
                condition=lambda s, shop: bool(shop.queue),
                transition=start,
                continuous_output=lambda s, e, shop: 0,
            ),
            "busy": Segment(
                time_to_output=lambda s: HyTime(s.service, 0),
                transition=finish,
                continuous_output=lambda s, e, shop: 1,
                discrete_output=lambda s, shop: s.client,
            ),
        },
    )

    def output(shop: Shop, values) -> FlowValue:
        # values arrive in rank order: generator, server-a, server-b
        arrival = values[0].discrete
        departures = [v.discrete for v in values[1:] if v.discrete is not NULL]
        events: dict[str, Any] = {}
        if arrival is not NULL:
            events["arrival"] = arrival
        if departures:
            events["departures"] = departures
        busy = sum(v.continuous for v in values[1:])
        return FlowValue({"queue": len(shop.queue), "busy": busy}, events or NULL)

    return BaseDefinition(
        initial=Shop,
        processes=lambda shop: PROCESSES,
        definitions={"generator": generator, SERVERS[0]: server, SERVERS[1]: server},
        output=output,
    )


def build_queue_two_servers(
    arrival_rate: float = 1.0,
    service_rate: float = 0.75,
    seed: int = 0,
    dist: str = "exp",
    context: Context | None = None,
    path: str = "mm2",
) -> BaseComponent:
    """Root-ready M/M/2 (or D/D/2 with ``dist="det"``) component."""
    return BaseComponent(mm2_definition(arrival_rate, service_rate, seed, dist), path, context)


def mean_wait(component: BaseComponent) -> float:
    shop = component.p
    return shop.waited / shop.started if shop.started else math.nan


def erlang_c(servers: int, offered_load: float) -> float:
    """Probability that an arriving client has to wait in an M/M/c queue."""
    a, c = offered_load, servers
    if a >= c:
        return 1.0
    top = a**c / math.factorial(c) * c / (c - a)
    return top / (sum(a**k / math.factorial(k) for k in range(c)) + top)


def erlang_c_wait(arrival_rate: float, service_rate: float, servers: int = 2) -> float:
    """Mean time in queue, ``C(c, a) / (c * mu - lambda)``."""
    return erlang_c(servers, arrival_rate / service_rate) / (servers * service_rate - arrival_rate)

