"""Tiny models used by the demos and the test-suite."""

from __future__ import annotations

from dataclasses import dataclass

from ..base import BaseComponent, BaseDefinition
from ..core import HyTime
from ..process import ProcessDefinition, Segment
from ..trace import Context
from ._common import on_grid


@dataclass(frozen=True)
class Ticks:
    count: int


def timer_definition(period: float, grid: bool = True, payload: str = "fire") -> BaseDefinition:
    """One process firing every ``period``.

    With ``grid`` the firings sit at ``(k * period, 0)``; without it each
    firing is one infinitesimal later than the plain sum of periods.
    """

    def omega(tk: Ticks) -> HyTime:
        return on_grid(period, tk.count > 0) if grid else HyTime(period, 0)

    timer = ProcessDefinition(
        initial=lambda name, shared: Ticks(0),
        segments={
            "tick": Segment(
                time_to_output=omega,
                transition=lambda tk, e, shared: (Ticks(tk.count + 1), shared + 1),
                continuous_output=lambda tk, e, shared: tk.count,
                discrete_output=lambda tk, shared: payload,
            )
        },
    )
    return BaseDefinition(
        initial=lambda: 0,
        processes=lambda fired: frozenset(("timer",)),
        definitions={"timer": timer},
    )


def build_timer(period: float = 5.0, grid: bool = True, context: Context | None = None) -> BaseComponent:
    return BaseComponent(timer_definition(period, grid), "timer", context)


@dataclass(frozen=True)
class Hands:
    """Flags raised by one process for the other."""

    a_go: bool = False
    b_go: bool = False
    b_done: bool = False
    a_runs: int = 0
    b_runs: int = 0


@dataclass(frozen=True)
class Phase:
    name: str


def handshake_definition(start: float = 1.0) -> BaseDefinition:
    """``a`` fires once on schedule and enables ``b``; ``b`` re-enables ``a``
    exactly once.  The instant at ``start`` therefore runs two conditional
    activations (``b`` then ``a``) and ``a`` transitions twice."""

    def a_fire(ph: Phase, e: HyTime, h: Hands):
        return Phase("idle"), Hands(h.a_go, True, h.b_done, h.a_runs + 1, h.b_runs)

    def a_again(ph: Phase, e: HyTime, h: Hands):
        return Phase("idle"), Hands(False, h.b_go, h.b_done, h.a_runs + 1, h.b_runs)

    def b_run(ph: Phase, e: HyTime, h: Hands):
        return ph, Hands(not h.b_done, False, True, h.a_runs, h.b_runs + 1)

    a = ProcessDefinition(
        initial=lambda name, h: Phase("armed"),
        index=lambda ph: ph.name,
        segments={
            "armed": Segment(time_to_output=lambda ph: HyTime(start, 0), transition=a_fire),
            "idle": Segment(condition=lambda ph, h: h.a_go, transition=a_again),
        },
    )
    b = ProcessDefinition(
        initial=lambda name, h: Phase("waiting"),
        segments={"waiting": Segment(condition=lambda ph, h: h.b_go, transition=b_run)},
    )
    return BaseDefinition(
        initial=Hands,
        processes=lambda h: frozenset(("a", "b")),
        definitions={"a": a, "b": b},
    )


def build_handshake(start: float = 1.0, context: Context | None = None) -> BaseComponent:
    return BaseComponent(handshake_definition(start), "handshake", context)
