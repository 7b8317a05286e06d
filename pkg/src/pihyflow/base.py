"""Base models and base components.

A base component owns a shared p-state and a dynamic set of process
simulators.  The set of live processes is always ``processes(p)`` of the
current shared p-state; it is re-evaluated after every change of ``p``, so a
process created by another process's transition can act in the same instant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Callable, Collection, Iterable, Mapping, Sequence

from .core import INFINITY, NULL, ZERO, FlowValue, HyTime, to_jsonable
from .errors import LivelockError, ModelError
from .process import ProcessDefinition, ProcessSimulator
from .trace import OUTPUT, PROCESS_TRANSITION, TRANSITION, Context


def _keep(p: Any, x: FlowValue) -> Any:
    return p


def _collect(p: Any, values: Sequence[FlowValue]) -> FlowValue:
    """Default output function: tuples of the process values."""
    if not values:
        return FlowValue(None, NULL)
    if len(values) == 1:
        return values[0]
    discretes = tuple(v.discrete for v in values)
    d = discretes if any(x is not NULL for x in discretes) else NULL
    return FlowValue(tuple(v.continuous for v in values), d)


@dataclass(frozen=True, kw_only=True)
class BaseDefinition:
    """A modular model enclosing processes that share one p-state.

    initial: builds the initial shared p-state.
    processes: names of the processes that must be live in a p-state.
    definitions: process definition per name; a callable is accepted for
        open-ended name sets (``client-1``, ``client-2``, ...).
    input: folds an input flow value into the shared p-state.
    output: ``output(p, values)`` combines process values, given in rank order.
    rank: orders a set of process names; must return a permutation.
    """

    initial: Callable[[], Any]
    processes: Callable[[Any], Collection[str]]
    definitions: Mapping[str, ProcessDefinition] | Callable[[str], ProcessDefinition]
    input: Callable[[Any, FlowValue], Any] = _keep
    output: Callable[[Any, Sequence[FlowValue]], FlowValue] = _collect
    rank: Callable[[Iterable[str]], Sequence[str]] = sorted

    def definition_of(self, name: str) -> ProcessDefinition:
        if callable(self.definitions):
            return self.definitions(name)
        try:
            return self.definitions[name]
        except KeyError:
            raise ModelError(f"no process definition for {name!r}") from None

    def ranked(self, names: Collection[str]) -> list[str]:
        if len(names) <= 1:
            return list(names)
        if self.rank is sorted:
            return sorted(names)
        order = list(self.rank(names))
        if len(order) != len(names) or set(order) != set(names):
            raise ModelError(f"rank function returned {order!r} for {sorted(names)!r}")
        return order


class BaseComponent:
    """Simulates a :class:`BaseDefinition`.

    ``start`` is the time assigned as last-transition time of the processes
    created at construction.
    """

    def __init__(
        self,
        definition: BaseDefinition,
        path: str = "base",
        context: Context | None = None,
        start: HyTime = ZERO,
    ):
        self.definition = definition
        self.path = path
        self.context = context if context is not None else Context()
        self.p = definition.initial()
        self.v: FlowValue | None = None
        self.procs: dict[str, ProcessSimulator] = {}
        self._order: list[str] = []
        self._names: Collection[str] | None = None
        self._next: HyTime | None = None
        # instrumentation of the last transition that passed the guard
        self.cond_iterations = 0
        self.activations: list[tuple[str, str]] = []
        self._reconcile(start, None, None)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.path!r}, procs={sorted(self.procs)})"

    def _reconcile(
        self, t: HyTime, created: set[str] | None, retired: dict[str, ProcessSimulator] | None
    ) -> None:
        names = self.definition.processes(self.p)
        if names is self._names:
            return
        procs = self.procs
        if len(names) == len(procs) and all(n in procs for n in names):
            self._names = names
            return
        for name in [n for n in procs if n not in names]:
            sim = procs.pop(name)
            if retired is not None:
                retired[name] = sim
        fresh = [n for n in names if n not in procs]
        for name in self.definition.ranked(fresh):
            d = self.definition.definition_of(name)
            procs[name] = ProcessSimulator(name, d, d.initial(name, self.p), t)
            if created is not None:
                created.add(name)
        self._order = self.definition.ranked(procs.keys())
        self._names = names
        self._next = None

    def next_time(self) -> HyTime:
        if self._next is None:
            best = INFINITY
            for sim in self.procs.values():
                nt = sim.next_time()
                if nt < best:
                    best = nt
            self._next = best
        return self._next

    def output(self, t: HyTime) -> None:
        p = self.p
        procs = self.procs
        values = []
        for name in self._order:
            sim = procs[name]
            sim.output(t, p)
            values.append(sim.v)
        self.v = self.definition.output(p, values)
        if self.context.sink is not None:
            self.context.emit(t, self.path, OUTPUT, self.v)

    def value(self) -> FlowValue:
        if self.v is None:
            raise ModelError(f"{self.path}: value read before any output")
        return self.v

    def transition(self, t: HyTime, x: FlowValue) -> bool:
        """Run the transition action; return False when the guard skipped it."""
        if x.discrete is NULL and t != self.next_time():
            return False
        definition = self.definition
        procs = self.procs
        created: set[str] = set()
        # processes removed during this transition still complete it
        retired: dict[str, ProcessSimulator] = {}
        activations: list[tuple[str, str]] = []

        self.p = definition.input(self.p, x)
        self._reconcile(t, created, retired)

        imminent = [name for name, sim in procs.items() if sim.next_time() == t]
        acted = dict.fromkeys(imminent)
        for name in definition.ranked(imminent):
            sim = procs.get(name)
            if sim is None:
                continue
            self.p = sim._transition(t, self.p)
            activations.append((name, "scheduled"))
            self._reconcile(t, created, retired)

        bound = self.context.max_cond_iters
        iterations = 0
        while True:
            p = self.p
            enabled = [name for name, sim in procs.items() if sim.condition(p)]
            if not enabled:
                break
            iterations += 1
            if iterations > bound:
                raise LivelockError(
                    f"{self.path}: conditional loop exceeded {bound} iterations at {t!r}"
                )
            name = definition.ranked(enabled)[0]
            self.p = procs[name]._transition(t, p)
            acted[name] = None
            activations.append((name, "conditional"))
            self._reconcile(t, created, retired)

        for name in (*acted, *created):
            sim = procs.get(name) or retired.get(name)
            if sim is not None:
                sim.update(t)
        self._next = None

        self.cond_iterations = iterations
        self.activations = activations
        if self.context.sink is not None:
            self._trace_transition(t, x, activations, retired)
        return True

    def _trace_transition(self, t: HyTime, x: FlowValue, activations, retired) -> None:
        ctx = self.context
        ctx.emit(t, self.path, TRANSITION, {"x": x, "processes": sorted(self.procs)})
        for name, cause in activations:
            sim = self.procs.get(name) or retired[name]
            ctx.emit(
                t,
                self.path,
                PROCESS_TRANSITION,
                {
                    "process": name,
                    "cause": cause,
                    "t_last": sim.t_last,
                    "live": name in self.procs,
                },
            )

    def state(self) -> dict[str, Any]:
        return {
            "v": self.v,
            "p": self.p,
            "procs": {name: sim.state() for name, sim in sorted(self.procs.items())},
        }

    def serialized_state(self) -> str:
        return json.dumps(to_jsonable(self.state()), sort_keys=True)
