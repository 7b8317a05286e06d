"""Networks, executives and dynamic topologies.

A network's composition and coupling is whatever its executive's topology
function returns for the executive's current p-state.  During a network
transition every child transitions first and the executive last, so a new
topology only routes values from the next instant on.

Inside a topology the network itself is named :data:`NETWORK` and the
executive :data:`EXECUTIVE`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping, Sequence, Union

from .base import BaseComponent, BaseDefinition
from .core import EPSILON, NULL, ZERO, FlowValue, HyTime, to_jsonable
from .errors import ModelError, TopologyError
from .trace import OUTPUT, TOPOLOGY_CHANGE, TRANSITION, Context

NETWORK = "#net"
EXECUTIVE = "#exec"


@dataclass(frozen=True)
class Coupling:
    """Maps influencer values to one input (or to the network output).

    ``continuous`` receives the tuple of influencer continuous values.
    ``discrete`` receives the tuple of influencer discrete values and is only
    called when at least one of them is not null, so an all-null tuple always
    yields a null discrete value.  Omitted maps pass a single influencer
    through and tuple several.
    """

    continuous: Callable[[tuple], Any] | None = None
    discrete: Callable[[tuple], Any] | None = None

    def __call__(self, values: Sequence[FlowValue]) -> FlowValue:
        cs = tuple(v.continuous for v in values)
        ds = tuple(v.discrete for v in values)
        if self.continuous is not None:
            c = self.continuous(cs)
        elif len(cs) == 1:
            c = cs[0]
        else:
            c = cs or None
        if all(d is NULL for d in ds):
            d = NULL
        elif self.discrete is not None:
            d = self.discrete(ds)
        elif len(ds) == 1:
            d = ds[0]
        else:
            d = ds
        return FlowValue(c, d)


IDENTITY = Coupling()


@dataclass(frozen=True)
class Topology:
    """Composition and coupling of a network.

    components: child name -> model key in the network's model table.
    influencers: for each child, :data:`EXECUTIVE` and :data:`NETWORK`, the
        ordered names whose values feed it.  Missing entries mean none.
    input_functions: coupling per child and for the executive.
    output_function: coupling producing the network output.
    """

    components: Mapping[str, str]
    influencers: Mapping[str, Sequence[str]] = field(default_factory=dict)
    input_functions: Mapping[str, Coupling] = field(default_factory=dict)
    output_function: Coupling = IDENTITY

    def influencers_of(self, name: str) -> Sequence[str]:
        return self.influencers.get(name, ())

    def input_function(self, name: str) -> Coupling:
        return self.input_functions.get(name, IDENTITY)

    def shape(self) -> tuple:
        """The comparable part of a topology (couplings are functions)."""
        return (
            tuple(sorted(self.components.items())),
            tuple(sorted((k, tuple(v)) for k, v in self.influencers.items())),
        )


@dataclass(frozen=True)
class Violation:
    constraint: int | str
    message: str


def validate_topology(top: Topology) -> Violation | None:
    """Return the first violated constraint, or None for a valid topology."""
    if NETWORK in top.components:
        return Violation(1, "the network cannot be one of its own components")
    if EXECUTIVE in top.components:
        return Violation(2, "the executive cannot be listed as a component")
    if NETWORK in top.influencers_of(NETWORK):
        return Violation(3, "the network cannot influence its own output")
    known = set(top.components) | {EXECUTIVE, NETWORK}
    for target, sources in top.influencers.items():
        if target not in known:
            return Violation("closure", f"influencers given for unknown {target!r}")
        for source in sources:
            if source not in known:
                return Violation("closure", f"{target!r} is influenced by unknown {source!r}")
    for target in top.input_functions:
        if target not in known or target == NETWORK:
            return Violation("closure", f"input function given for {target!r}")
    return None


@dataclass(frozen=True, kw_only=True)
class ExecutiveDefinition(BaseDefinition):
    """A base model that also defines the topology of its network."""

    topology: Callable[[Any], Topology]


class ExecutiveComponent(BaseComponent):
    def topology(self) -> Topology:
        return self.definition.topology(self.p)


@dataclass(frozen=True)
class NetworkDefinition:
    """A network: an executive plus the table of models it may instantiate."""

    executive: ExecutiveDefinition
    models: Mapping[str, Union[BaseDefinition, "NetworkDefinition"]] = field(default_factory=dict)


Component = Union[BaseComponent, "NetworkComponent"]


def instantiate(definition, path: str, context: Context | None = None, start: HyTime = ZERO) -> Component:
    """Build the component simulating ``definition``."""
    if isinstance(definition, NetworkDefinition):
        return NetworkComponent(definition, path, context, start)
    if isinstance(definition, ExecutiveDefinition):
        return ExecutiveComponent(definition, path, context, start)
    if isinstance(definition, BaseDefinition):
        return BaseComponent(definition, path, context, start)
    raise ModelError(f"cannot simulate {definition!r}")


class NetworkComponent:
    def __init__(
        self,
        definition: NetworkDefinition,
        path: str = "net",
        context: Context | None = None,
        start: HyTime = ZERO,
    ):
        self.definition = definition
        self.path = path
        self.context = context if context is not None else Context()
        self.v: FlowValue | None = None
        self.executive = ExecutiveComponent(
            definition.executive, f"{path}/{EXECUTIVE}", self.context, start
        )
        self.children: dict[str, Component] = {}
        self._models: dict[str, str] = {}
        self.topology: Topology | None = None
        self._apply_topology(self.executive.topology(), start, None)

    def __repr__(self) -> str:
        return f"NetworkComponent({self.path!r}, children={sorted(self.children)})"

    def _apply_topology(self, top: Topology, start: HyTime, t: HyTime | None) -> None:
        violation = validate_topology(top)
        if violation is not None:
            raise TopologyError(f"{self.path}: {violation.message}", violation.constraint)
        old = self.topology
        removed = [
            name
            for name in self.children
            if name not in top.components or top.components[name] != self._models[name]
        ]
        for name in removed:
            del self.children[name]
            del self._models[name]
        added = []
        for name in sorted(top.components):
            if name in self.children:
                continue
            key = top.components[name]
            try:
                model = self.definition.models[key]
            except KeyError:
                raise TopologyError(f"{self.path}: unknown model {key!r} for {name!r}") from None
            self.children[name] = instantiate(model, f"{self.path}/{name}", self.context, start)
            self._models[name] = key
            added.append(name)
        self.topology = top
        if t is not None and self.context.sink is not None and (
            added or removed or old is None or old.shape() != top.shape()
        ):
            self.context.emit(
                t,
                self.path,
                TOPOLOGY_CHANGE,
                {
                    "added": added,
                    "removed": sorted(removed),
                    "components": dict(sorted(top.components.items())),
                    "influencers": {k: list(v) for k, v in sorted(top.influencers.items())},
                },
            )

    def _component(self, name: str) -> Component:
        if name == EXECUTIVE:
            return self.executive
        return self.children[name]

    def next_time(self) -> HyTime:
        best = self.executive.next_time()
        for child in self.children.values():
            nt = child.next_time()
            if nt < best:
                best = nt
        return best

    def output(self, t: HyTime) -> None:
        # every child is refreshed: transitions read the values of all influencers
        for child in self.children.values():
            child.output(t)
        self.executive.output(t)
        top = self.topology
        values = [self._component(j).value() for j in top.influencers_of(NETWORK)]
        self.v = top.output_function(values)
        if self.context.sink is not None:
            self.context.emit(t, self.path, OUTPUT, self.v)

    def value(self) -> FlowValue:
        if self.v is None:
            raise ModelError(f"{self.path}: value read before any output")
        return self.v

    def _input_for(self, name: str, x: FlowValue) -> FlowValue:
        top = self.topology
        values = [
            x if j == NETWORK else self._component(j).value()
            for j in top.influencers_of(name)
        ]
        return top.input_function(name)(values)

    def transition(self, t: HyTime, x: FlowValue) -> bool:
        # no child is imminent and, by the null-preserving couplings, none
        # would receive an event: skipping is equivalent to forwarding
        if x.discrete is NULL and t != self.next_time():
            return False
        if self.context.sink is not None:
            self.context.emit(t, self.path, TRANSITION, {"x": x})
        inputs = {name: self._input_for(name, x) for name in self.children}
        exec_input = self._input_for(EXECUTIVE, x)
        for name, child in self.children.items():
            child.transition(t, inputs[name])
        if self.executive.transition(t, exec_input):
            self._apply_topology(self.executive.topology(), t + EPSILON, t)
        return True

    def state(self) -> dict[str, Any]:
        return {
            "v": self.v,
            "executive": self.executive.state(),
            "children": {name: c.state() for name, c in sorted(self.children.items())},
        }

    def serialized_state(self) -> str:
        return json.dumps(to_jsonable(self.state()), sort_keys=True)
