"""Occupancy of a single FIFO server with deterministic service, by Lindley's recursion.

Run: python3 oracles/lindley.py
Prints (instant, occupancy) after every change, ties in arrival order.
"""

ARRIVALS = [1, 1, 1, 2, 4, 7, 7, 9, 12, 13]
SERVICE = 1.5


def departures(arrivals, service):
    out, free = [], 0.0
    for a in arrivals:
        free = max(a, free) + service
        out.append(free)
    return out


def occupancy_steps(arrivals, service):
    deps = departures(arrivals, service)
    instants = sorted(set(arrivals) | set(deps))
    steps = []
    for t in instants:
        n = sum(a <= t for a in arrivals) - sum(d <= t for d in deps)
        steps.append((t, n))
    return steps


if __name__ == "__main__":
    print(departures(ARRIVALS, SERVICE))
    for t, n in occupancy_steps(ARRIVALS, SERVICE):
        print(t, n)
