"""The root coordinator: drives a component from its first event up to ``end``."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass

from .core import NULL_FLOW, HyTime
from .errors import SchedulingError
from .trace import TraceSink

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Summary:
    steps: int
    final_clock: HyTime
    wall_time: float


def run_simulation(component, end: HyTime, sink: TraceSink | None = None) -> Summary:
    """Alternate output and transition at each next time strictly before ``end``.

    The component must have an empty continuous input interface: it is fed
    ``(None, NULL)`` at every step.  When ``sink`` is given it replaces the
    sink of the component's context for the run.
    """
    if sink is not None:
        component.context.sink = sink
    started = time.perf_counter()
    steps = 0
    clock = component.next_time()
    while clock < end:
        component.output(clock)
        component.transition(clock, NULL_FLOW)
        steps += 1
        previous, clock = clock, component.next_time()
        if not previous < clock:
            raise SchedulingError(f"clock did not advance past {previous!r} (next {clock!r})")
    wall = time.perf_counter() - started
    log.info("%s: %d steps, final clock %r, %.3fs", component.path, steps, clock, wall)
    return Summary(steps, clock, wall)
