"""Process definitions and the process simulator.

A process is a non-preemptive unit of behaviour living inside a base
component.  Its behaviour is split into segments; the index function picks
the active segment from the process p-state.  Processes have no input: they
read and write the shared p-state of their base component, which is passed
explicitly to every function that needs it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Mapping

from .core import EPSILON, INFINITY, NULL, ZERO, FlowValue, HyTime
from .errors import CausalityError, ModelError, SchedulingError


def _never(p: Any) -> HyTime:
    return INFINITY


def _false(p: Any, shared: Any) -> bool:
    return False


def _identity(p: Any, e: HyTime, shared: Any) -> tuple[Any, Any]:
    return p, shared


def _no_value(p: Any, e: HyTime, shared: Any) -> Any:
    return None


def _silent(p: Any, shared: Any) -> Any:
    return NULL


@dataclass(frozen=True)
class Segment:
    """The six functions active while the index function selects this segment.

    ``transition(p, e, shared)`` returns ``(p', shared')``; ``e`` is the
    elapsed time since the process last transitioned.
    ``continuous_output(p, e, shared)`` is evaluated at any instant, while
    ``discrete_output(p, shared)`` is only consulted when the elapsed time
    equals ``time_to_output(p)``.
    """

    time_to_input: Callable[[Any], HyTime] = _never
    time_to_output: Callable[[Any], HyTime] = _never
    condition: Callable[[Any, Any], bool] = _false
    transition: Callable[[Any, HyTime, Any], tuple[Any, Any]] = _identity
    continuous_output: Callable[[Any, HyTime, Any], Any] = _no_value
    discrete_output: Callable[[Any, Any], Any] = _silent


@dataclass(frozen=True)
class ProcessDefinition:
    """Behaviour contract of one process.

    ``initial(name, shared)`` builds the p-state of a freshly created process.
    ``index`` maps a p-state to a key of ``segments``; it may be omitted when
    there is a single segment.
    """

    initial: Callable[[str, Any], Any]
    segments: Mapping[Hashable, Segment]
    index: Callable[[Any], Hashable] | None = None
    _only: Segment | None = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.index is None:
            if len(self.segments) != 1:
                raise ModelError("an index function is required with several segments")
            object.__setattr__(self, "_only", next(iter(self.segments.values())))

    def segment(self, p: Any) -> Segment:
        if self._only is not None:
            return self._only
        key = self.index(p)
        try:
            return self.segments[key]
        except KeyError:
            raise ModelError(f"no segment for index {key!r}") from None

    def time_to_transition(self, p: Any) -> HyTime:
        seg = self.segment(p)
        return min(seg.time_to_input(p), seg.time_to_output(p))


class ProcessSimulator:
    """Runtime state ``(v, p, t_last)`` of one process.

    The enclosing base component drives it through output, condition,
    transition and update actions.  ``t_last`` only moves in ``update``; a
    process that already transitioned at the current instant sees zero
    elapsed time for any further transition in that instant.
    """

    __slots__ = ("name", "definition", "p", "t_last", "v", "_acted_at", "_next", "_fire")

    def __init__(self, name: str, definition: ProcessDefinition, p: Any, t_last: HyTime):
        self.name = name
        self.definition = definition
        self.p = p
        self.t_last = t_last
        self.v: FlowValue | None = None
        self._acted_at: HyTime | None = None
        self._next: HyTime | None = None
        self._fire: HyTime | None = None

    def __repr__(self) -> str:
        return f"ProcessSimulator({self.name!r}, p={self.p!r}, t_last={self.t_last!r})"

    def next_time(self) -> HyTime:
        # cached, with the discrete output instant, until p or t_last changes
        if self._next is None:
            p = self.p
            seg = self.definition.segment(p)
            rho = seg.time_to_input(p)
            omega = seg.time_to_output(p)
            self._fire = self.t_last + omega
            self._next = self.t_last + rho if rho < omega else self._fire
        return self._next

    def output(self, t: HyTime, shared: Any) -> None:
        if t < self.t_last:
            raise CausalityError(f"{self.name}: output at {t!r} before t_last {self.t_last!r}")
        if self._next is None:
            self.next_time()
        p = self.p
        seg = self.definition.segment(p)
        c = seg.continuous_output(p, t - self.t_last, shared)
        # e == omega tested on absolute times: float subtraction need not give back omega
        if self._fire == t:
            d = seg.discrete_output(p, shared)
        else:
            d = NULL
        self.v = FlowValue(c, d)

    def value(self) -> FlowValue:
        if self.v is None:
            raise SchedulingError(f"{self.name}: value read before any output")
        return self.v

    def condition(self, shared: Any) -> bool:
        return bool(self.definition.segment(self.p).condition(self.p, shared))

    def elapsed(self, t: HyTime) -> HyTime:
        if self._acted_at == t:
            return ZERO
        return t - self.t_last

    def transition(self, t: HyTime, shared: Any) -> Any:
        """Run the active transition function; return the new shared p-state."""
        if self._acted_at != t and t < self.t_last:
            raise CausalityError(f"{self.name}: transition at {t!r} before t_last {self.t_last!r}")
        if t != self.next_time() and not self.condition(shared):
            raise SchedulingError(f"{self.name}: neither scheduled nor enabled at {t!r}")
        return self._transition(t, shared)

    def _transition(self, t: HyTime, shared: Any) -> Any:
        p = self.p
        seg = self.definition.segment(p)
        e = self.elapsed(t)
        p, shared = seg.transition(p, e, shared)
        self.p = p
        self._acted_at = t
        self._next = None
        return shared

    def update(self, t: HyTime) -> None:
        self.t_last = t + EPSILON
        self._acted_at = None
        self._next = None

    def state(self) -> dict[str, Any]:
        return {"p": self.p, "t_last": self.t_last, "v": self.v}
