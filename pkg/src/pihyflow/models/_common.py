from __future__ import annotations

from ..core import INFINITY, HyTime


def on_grid(delay: float, fired: bool) -> HyTime:
    """Delay for a process that only acts on its own schedule.

    After acting at ``(t, 0)`` a process has ``t_last = (t, 1)``; removing that
    infinitesimal puts its next activation at ``(t + delay, 0)``, so periodic
    processes stay on the zero-infinitesimal grid instead of drifting one
    order per period.
    """
    if delay == INFINITY.real:
        return INFINITY
    if delay < 0 or (fired and delay == 0):
        raise ValueError(f"cannot schedule {delay!r} ahead")
    return HyTime(float(delay), -1 if fired else 0)
