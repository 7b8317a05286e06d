"""Superdense time: a real instant plus an infinitesimal counter."""

from pihyflow import EPSILON, INFINITY, HyTime, ListSink, hytime, run_simulation
from pihyflow.models.toys import build_timer

t = HyTime(5.0, 0)
print("t         =", t)
print("t + eps   =", t + EPSILON)  # still real time 5, one step later
print("t < t+eps < (5.001, 0):", t < t + EPSILON < HyTime(5.001, 0))
print("(1, 9) < (1.5, 0):", HyTime(1.0, 9) < HyTime(1.5, 0))  # lexicographic
print("t + inf   =", t + INFINITY)

# a timer fires, and only then sees its transition take effect at t + eps
for grid in (True, False):
    sink = ListSink()
    run_simulation(build_timer(5.0, grid=grid), hytime(21.0), sink=sink)
    fired = [r.time for r in sink.select("output") if r.payload["d"] is not None]
    print("grid" if grid else "no grid", "firings:", fired)
