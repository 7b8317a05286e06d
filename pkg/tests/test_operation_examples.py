"""Worked examples for individual operations."""

import io
import json

from pihyflow import (
    INFINITY,
    NETWORK,
    NULL,
    NULL_FLOW,
    BaseComponent,
    BaseDefinition,
    Coupling,
    ExecutiveDefinition,
    HyTime,
    NetworkComponent,
    NetworkDefinition,
    ProcessDefinition,
    ProcessSimulator,
    Segment,
    Topology,
    hytime,
    hytime_add,
    hytime_compare,
    run_simulation,
    validate_topology,
)
from pihyflow.cli import cmd_list
from pihyflow.models.active_client import build_active_client
from pihyflow.models.dyntopo import build_dynamic_topology, received
from pihyflow.models.queueing import Server, Shop, build_queue_two_servers, mm2_definition
from pihyflow.models.sampling import build_sampling_demo, samples, source_definition
from pihyflow.models.toys import build_timer

H = HyTime


def test_compare_examples():
    assert hytime_compare(H(3.0, 2), H(3.0, 0)) == 1
    assert hytime_compare(H(2.0, 5), H(2.000000001, 0)) == -1
    assert hytime_compare(H(7.0, 0), INFINITY) == -1


def test_add_examples():
    assert hytime_add(H(10.0, 1), H(5.0, 0)) == H(15.0, 1)
    assert hytime_add(H(10.0, 1), INFINITY) == INFINITY
    assert hytime_add(H(2.0, 0), H(0.0, 1)) == H(2.0, 1)


def fixed(rho, omega):
    return ProcessDefinition(
        initial=lambda n, s: None,
        segments={"s": Segment(time_to_input=lambda p: rho, time_to_output=lambda p: omega)},
    )


def test_process_next_time_examples():
    assert ProcessSimulator("p", fixed(INFINITY, H(5.0, 0)), None, H(10.0, 1)).next_time() == H(15.0, 1)
    assert ProcessSimulator("p", fixed(H(2.0, 0), H(3.0, 0)), None, H(0.0, 0)).next_time() == H(2.0, 0)
    assert ProcessSimulator("p", fixed(INFINITY, INFINITY), None, H(4.0, 2)).next_time() == INFINITY


def test_process_output_and_value_examples():
    flow = source_definition().definition_of("flow")
    sim = ProcessSimulator("flow", flow, flow.initial("flow", None), H(0.0, 0))
    sim.output(H(3.0, 0), None)
    assert sim.value() == (9.0, NULL)
    assert sim.value() == sim.value()


def server_sim():
    d = mm2_definition(dist="det").definition_of("server-a")
    return ProcessSimulator("server-a", d, d.initial("server-a", Shop()), H(0.0, 0))


def test_process_condition_and_transition_examples():
    sim = server_sim()
    assert not sim.condition(Shop())
    shop = Shop(queue=((1, 0.5), (2, 0.7)))
    assert sim.condition(shop)
    after = sim.transition(H(1.0, 0), shop)
    assert after.queue == ((2, 0.7),)
    assert isinstance(sim.p, Server) and sim.p.phase == "busy" and sim.p.client == 1


def test_process_update_examples():
    sim = server_sim()
    sim.update(H(5.0, 3))
    assert sim.t_last == H(5.0, 4)
    sim.update(H(5.0, 0))
    sim.update(H(5.0, 0))
    assert sim.t_last == H(5.0, 1)


def test_base_next_time_examples():
    d = BaseDefinition(
        initial=lambda: None,
        processes=lambda p: frozenset("ab"),
        definitions={"a": fixed(INFINITY, H(5.0, 0)), "b": fixed(H(3.0, 2), INFINITY)},
    )
    assert BaseComponent(d).next_time() == H(3.0, 2)
    empty = BaseDefinition(initial=lambda: None, processes=lambda p: frozenset(), definitions={})
    assert BaseComponent(empty).next_time() == INFINITY


def test_base_output_at_a_departure_carries_the_client():
    shop = build_queue_two_servers(arrival_rate=1.0, service_rate=0.5, dist="det")
    # client 1 arrives at (1, 0), starts at once, so it leaves 2 later at (3, 1)
    while True:
        t = shop.next_time()
        shop.output(t)
        d = shop.value().discrete
        if d is not NULL and "departures" in d:
            break
        shop.transition(t, NULL_FLOW)
    assert t == H(3.0, 1) and d == {"departures": [1]}


def test_base_transition_starts_service_with_the_arrival():
    shop = build_queue_two_servers(arrival_rate=1.0, service_rate=0.5, dist="det")
    t = shop.next_time()
    assert t == H(1.0, 0)
    shop.output(t)
    shop.transition(t, NULL_FLOW)
    assert shop.procs["generator"].t_last == shop.procs["server-a"].t_last == H(1.0, 1)


def test_queue_in_a_network_has_a_valid_topology():
    top = Topology(components={"shop": "mm2"}, influencers={NETWORK: ("shop",)})
    assert validate_topology(top) is None
    exe = ExecutiveDefinition(initial=lambda: None, processes=lambda p: frozenset(), definitions={}, topology=lambda p: top)
    net = NetworkComponent(NetworkDefinition(exe, {"mm2": mm2_definition(seed=1)}))
    run_simulation(net, hytime(50.0))
    assert net.children["shop"].p.started > 0


def test_network_output_with_constant_coupling():
    top = Topology(components={}, output_function=Coupling(continuous=lambda cs: 0.0))
    exe = ExecutiveDefinition(initial=lambda: None, processes=lambda p: frozenset(), definitions={}, topology=lambda p: top)
    net = NetworkComponent(NetworkDefinition(exe, {}))
    assert net.next_time() == INFINITY
    net.output(H(1.0, 0))
    assert net.value() == (0.0, NULL)


def test_run_examples():
    assert run_simulation(build_timer(5.0), H(12.0, 0)).steps == 2
    assert run_simulation(build_timer(5.0), H(0.0, 0)).steps == 0


def test_active_client_process_counts():
    comp = build_active_client((1.0,), service_time=2.0, service="det")
    sizes = [len(comp.procs)]
    while not comp.next_time().is_infinite:
        t = comp.next_time()
        comp.output(t)
        comp.transition(t, NULL_FLOW)
        sizes.append(len(comp.procs))
    assert sizes == [1, 2, 1]

    idle = build_active_client(())
    assert len(idle.procs) == 1 and idle.next_time() == INFINITY

    burst = build_active_client((2.0, 2.0, 2.0), service_time=1.0, service="det")
    t = burst.next_time()
    burst.output(t)
    burst.transition(t, NULL_FLOW)
    assert sorted(burst.procs) == ["client-1", "client-2", "client-3", "source"]


def test_samplers_agree_at_shared_instants():
    net = build_sampling_demo()
    run_simulation(net, hytime(3.6))
    at_35 = [value for name, value in samples(net) if value == 3.5**2]
    assert at_35 == [12.25, 12.25]


def test_switch_after_end_never_reaches_b():
    net = build_dynamic_topology(switch_time=50.0)
    run_simulation(net, hytime(20.0))
    assert received(net)["sink-b"] == ()


def test_list_with_an_empty_registry():
    buf = io.StringIO()
    assert cmd_list({}, stream=buf) == 0 and buf.getvalue() == ""
    buf = io.StringIO()
    assert cmd_list({}, as_json=True, stream=buf) == 0 and json.loads(buf.getvalue()) == []
