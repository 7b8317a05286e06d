"""Hybrid process-interaction simulation kernel.

Base components hold processes that share a p-state; networks compose
components under a topology chosen by an executive; everything runs on
superdense time.
"""

from .base import BaseComponent, BaseDefinition
from .core import (
    EPSILON,
    INFINITY,
    NULL,
    NULL_FLOW,
    ZERO,
    FlowValue,
    HyTime,
    hytime,
    hytime_add,
    hytime_compare,
)
from .errors import (
    CausalityError,
    LivelockError,
    ModelError,
    SchedulingError,
    SimulationError,
    TopologyError,
)
from .network import (
    EXECUTIVE,
    NETWORK,
    Coupling,
    ExecutiveComponent,
    ExecutiveDefinition,
    NetworkComponent,
    NetworkDefinition,
    Topology,
    Violation,
    instantiate,
    validate_topology,
)
from .process import ProcessDefinition, ProcessSimulator, Segment
from .root import Summary, run_simulation
from .trace import Context, CsvSink, JsonlSink, ListSink, ThreadedSink, TraceRecord

__version__ = "0.1.0"
