"""Example models and the registry the command line runs them from."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Mapping

from ..trace import Context
from .active_client import build_active_client, parse_arrivals
from .dyntopo import build_dynamic_topology
from .queueing import build_queue_two_servers, erlang_c_wait, mean_wait
from .sampling import build_sampling_demo


@dataclass(frozen=True)
class Param:
    name: str
    parse: Callable[[str], Any]
    default: Any
    doc: str


@dataclass(frozen=True)
class ModelEntry:
    name: str
    doc: str
    builder: Callable[..., Any]
    params: tuple[Param, ...] = ()
    seeded: bool = False

    def parse_params(self, raw: Mapping[str, Any]) -> dict[str, Any]:
        """Typed keyword arguments from ``key -> text`` pairs, defaults filled in."""
        known = {p.name: p for p in self.params}
        values = {p.name: p.default for p in self.params}
        for key, text in raw.items():
            name = key.replace("-", "_")
            if name not in known:
                raise ValueError(f"model {self.name!r} has no parameter {key!r}")
            values[name] = known[name].parse(text) if isinstance(text, str) else text
        return values

    def build(self, params: Mapping[str, Any] | None = None, seed: int = 0, context: Context | None = None):
        kwargs = self.parse_params(params or {})
        if self.seeded:
            kwargs["seed"] = seed
        return self.builder(context=context, path=self.name, **kwargs)


def _mm2(arrival_rate, service_rate, dist, seed, context, path):
    return build_queue_two_servers(arrival_rate, service_rate, seed, dist, context, path)


def _active_client(arrivals, arrival_rate, service_time, service, seed, context, path):
    return build_active_client(arrivals, arrival_rate, service_time, service, seed, context, path)


REGISTRY: dict[str, ModelEntry] = {
    entry.name: entry
    for entry in (
        ModelEntry(
            "mm2",
            "one FIFO queue feeding two servers inside a single base model",
            _mm2,
            (
                Param("arrival_rate", float, 1.0, "mean arrivals per time unit (0: no arrivals)"),
                Param("service_rate", float, 0.75, "mean services per time unit per server"),
                Param("dist", str, "exp", "'exp' for exponential times, 'det' for constant ones"),
            ),
            seeded=True,
        ),
        ModelEntry(
            "active-client",
            "single server where each client is a process created on arrival",
            _active_client,
            (
                Param("arrivals", parse_arrivals, (), "comma-separated arrival times; repeats are bursts"),
                Param("arrival_rate", float, 1.0, "exponential arrival rate, used when no arrivals are listed"),
                Param("service_time", float, 0.8, "service time (mean when service=exp)"),
                Param("service", str, "exp", "'det' or 'exp'"),
            ),
            seeded=True,
        ),
        ModelEntry(
            "sampling-demo",
            "two samplers (periods 0.5 and 0.7) reading the exact flow t**2",
            build_sampling_demo,
        ),
        ModelEntry(
            "dyntopo",
            "executive reroutes a periodic source from sink-a to sink-b",
            build_dynamic_topology,
            (
                Param("switch_time", float, 10.0, "time of the topology switch"),
                Param("period", float, 1.0, "source event period"),
            ),
        ),
    )
}


def build(name: str, params: Mapping[str, Any] | None = None, seed: int = 0, context: Context | None = None):
    try:
        entry = REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown model {name!r}; known: {', '.join(sorted(REGISTRY))}") from None
    return entry.build(params, seed, context)


__all__ = [
    "REGISTRY",
    "ModelEntry",
    "Param",
    "build",
    "build_active_client",
    "build_dynamic_topology",
    "build_queue_two_servers",
    "build_sampling_demo",
    "erlang_c_wait",
    "mean_wait",
]
