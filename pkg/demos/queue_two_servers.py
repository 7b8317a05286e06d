"""Two servers sharing one FIFO queue, checked against Erlang-C."""

from pihyflow import NULL_FLOW, hytime, run_simulation
from pihyflow.models.queueing import build_queue_two_servers, erlang_c_wait, mean_wait

# first arrival: the generator fires, then an idle server grabs the client
# in the same superdense instant through the conditional loop
shop = build_queue_two_servers(seed=1)
t = shop.next_time()
shop.output(t)
shop.transition(t, NULL_FLOW)
print("first arrival at", t, "activations:", shop.activations)

# a longer run; mean wait of served clients vs theory
target = erlang_c_wait(1.0, 0.75)
for seed in range(3):
    shop = build_queue_two_servers(1.0, 0.75, seed=seed)
    summary = run_simulation(shop, hytime(20_000.0))
    print(f"seed {seed}: {summary.steps} steps, Wq = {mean_wait(shop):.4f} (Erlang-C {target:.4f})")

# constant times make the queue easy to follow by hand
shop = build_queue_two_servers(arrival_rate=1.0, service_rate=0.1, dist="det")
run_simulation(shop, hytime(3.5))
shop.output(hytime(3.5))
print("deterministic shop at 3.5:", shop.value().continuous)
