"""Superdense time points and hybrid flow values.

Time is a pair ``(real, eps)``: a real part plus an integer count of
infinitesimals.  A transition that happens at ``t`` takes effect at
``t + EPSILON``, which sorts after ``t`` but before ``t + d`` for any real
``d > 0``.
"""

from __future__ import annotations

import math
from typing import Any, NamedTuple


class HyTime(NamedTuple):
    """A hyperreal time point.

    Being a tuple, instances already order lexicographically, which is exactly
    the superdense order.  ``+inf`` is normalised to ``eps == 0`` so that all
    infinite times compare equal.
    """

    real: float
    eps: int = 0

    @property
    def is_infinite(self) -> bool:
        return self.real == math.inf

    def __add__(self, other: HyTime) -> HyTime:  # type: ignore[override]
        if self.real == math.inf or other.real == math.inf:
            return INFINITY
        return HyTime(self.real + other.real, self.eps + other.eps)

    def __sub__(self, other: HyTime) -> HyTime:
        """Elapsed time ``self - other``.  Only meaningful for finite ``other``."""
        if other.real == math.inf:
            raise ValueError("cannot subtract an infinite time")
        if self.real == math.inf:
            return INFINITY
        return HyTime(self.real - other.real, self.eps - other.eps)

    def __mul__(self, other):  # type: ignore[override]
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if self.real == math.inf:
            return "HyTime(inf)"
        return f"HyTime({self.real!r}, {self.eps})"

    def to_json(self) -> dict[str, Any]:
        if self.real == math.inf:
            return {"t": "inf", "eps": 0}
        return {"t": self.real, "eps": self.eps}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> HyTime:
        if data["t"] == "inf":
            return INFINITY
        return cls(float(data["t"]), int(data["eps"]))


ZERO = HyTime(0.0, 0)
EPSILON = HyTime(0.0, 1)
INFINITY = HyTime(math.inf, 0)


def hytime(real: float, eps: int = 0) -> HyTime:
    """Build a time point, normalising any infinite real part."""
    if real == math.inf:
        return INFINITY
    if math.isnan(real) or real == -math.inf:
        raise ValueError(f"invalid time {real!r}")
    return HyTime(float(real), int(eps))


def hytime_compare(a: HyTime, b: HyTime) -> int:
    """Three-way comparison: -1, 0 or 1."""
    if a < b:
        return -1
    if a == b:
        return 0
    return 1


def hytime_add(a: HyTime, d: HyTime) -> HyTime:
    if d < ZERO:
        raise ValueError(f"negative time increment {d!r}")
    return a + d


class _Null:
    """The null mark for discrete flows."""

    _instance = None
    __slots__ = ()

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NULL"

    def __bool__(self) -> bool:
        return False

    def __reduce__(self):
        return (_Null, ())


NULL = _Null()


class FlowValue(NamedTuple):
    """A continuous value paired with a (possibly null) discrete value.

    Interfaces with an empty continuous set carry ``None`` as their
    continuous part.
    """

    continuous: Any = None
    discrete: Any = NULL

    @property
    def has_event(self) -> bool:
        return self.discrete is not NULL


NULL_FLOW = FlowValue(None, NULL)


def to_jsonable(value: Any) -> Any:
    """Convert model values into plain JSON data, deterministically."""
    if value is NULL or value is None:
        return None
    if isinstance(value, HyTime):
        return value.to_json()
    if isinstance(value, FlowValue):
        return {"c": to_jsonable(value.continuous), "d": to_jsonable(value.discrete)}
    if isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        if math.isfinite(value):
            return value
        return repr(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((to_jsonable(v) for v in value), key=repr)
    if hasattr(value, "__dataclass_fields__"):
        return {
            name: to_jsonable(getattr(value, name))
            for name in value.__dataclass_fields__
        }
    return repr(value)
