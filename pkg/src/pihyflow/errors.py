class SimulationError(Exception):
    """Base class for kernel errors."""


class CausalityError(SimulationError):
    """An action was asked to act at a time before the last transition."""


class SchedulingError(SimulationError):
    """The kernel invoked an action out of order (a kernel defect)."""


class ModelError(SimulationError):
    """A model broke its contract (bad ranking, undefined segment, ...)."""


class LivelockError(ModelError):
    """The conditional loop of a base transition did not settle."""


class TopologyError(ModelError):
    """An executive produced an invalid topology or an unknown model."""

    def __init__(self, message: str, constraint: str | None = None):
        super().__init__(message)
        self.constraint = constraint
