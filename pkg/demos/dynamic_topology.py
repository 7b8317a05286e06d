"""An executive reroutes a source from one sink to another at t = 10."""

from pihyflow import ListSink, hytime, run_simulation
from pihyflow.models.dyntopo import build_dynamic_topology, received

net = build_dynamic_topology(switch_time=10.0)
sink = ListSink()
run_simulation(net, hytime(15.0), sink=sink)
for r in sink.select("topology-change"):
    print("topology change at", r.time, "->", r.payload["influencers"])
# the event at the switch instant still goes to sink-a: the executive acts last
for name, events in received(net).items():
    print(name, "received", events)
