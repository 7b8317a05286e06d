import math
import pickle

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pihyflow import EPSILON, INFINITY, NULL, NULL_FLOW, ZERO, FlowValue, HyTime, hytime, hytime_add, hytime_compare
from pihyflow.core import to_jsonable

# dyadic reals add exactly, so the laws are checked without float rounding
reals = st.integers(min_value=0, max_value=2**30).map(lambda k: k / 1024)
eps = st.integers(min_value=0, max_value=50)
times = st.builds(HyTime, reals, eps)


@given(times)
def test_epsilon_is_between_t_and_any_real_delay(t):
    assert t < t + EPSILON
    assert t + EPSILON < HyTime(t.real + 1.0, 0)


@given(times, times)
def test_order_is_total_and_antisymmetric(a, b):
    assert (a < b) + (a == b) + (b < a) == 1
    assert hytime_compare(a, b) == -hytime_compare(b, a)


@given(times, times, times)
def test_order_is_transitive(a, b, c):
    if a <= b and b <= c:
        assert a <= c


def test_float_rounding_can_tie_reals():
    # why the strategies above avoid arbitrary floats
    a, b, d = HyTime(0.0, 1), HyTime(4e-139, 0), HyTime(1.0, 0)
    assert a < b and (a + d).real == (b + d).real and b + d < a + d


@given(times, times, times)
def test_add_is_monotone(a, b, d):
    if a <= b:
        assert a + d <= b + d


def test_lexicographic_order():
    assert HyTime(1.0, 5) < HyTime(1.5, 0)
    assert HyTime(2.0, 0) < HyTime(2.0, 1)
    assert hytime_compare(HyTime(3.0, 2), HyTime(3.0, 2)) == 0


def test_add_and_sub():
    assert HyTime(1.0, 2) + HyTime(0.5, 1) == HyTime(1.5, 3)
    assert HyTime(2.0, 3) - HyTime(1.0, 1) == HyTime(1.0, 2)
    assert HyTime(5.0, 0) + INFINITY == INFINITY
    assert INFINITY + HyTime(1.0, 3) == INFINITY


def test_infinity_is_normalised():
    assert hytime(math.inf, 7) == INFINITY
    assert INFINITY.is_infinite
    assert not ZERO.is_infinite
    with pytest.raises(ValueError):
        HyTime(1.0, 0) - INFINITY


def test_hytime_add_rejects_negative_delay():
    with pytest.raises(ValueError):
        hytime_add(HyTime(1.0, 0), HyTime(-1.0, 0))


def test_json_round_trip():
    for t in (ZERO, HyTime(2.5, 3), INFINITY):
        assert HyTime.from_json(t.to_json()) == t
    assert INFINITY.to_json() == {"t": "inf", "eps": 0}


def test_null_is_a_falsy_singleton():
    assert not NULL
    assert repr(NULL) == "NULL"
    assert pickle.loads(pickle.dumps(NULL)) is NULL
    assert NULL_FLOW == FlowValue(None, NULL)
    assert not NULL_FLOW.has_event
    assert FlowValue(1, "go").has_event


def test_to_jsonable():
    data = {"t": HyTime(1.0, 1), "v": FlowValue(2, NULL), "s": {3, 1}, "x": math.inf}
    assert to_jsonable(data) == {
        "t": {"t": 1.0, "eps": 1},
        "v": {"c": 2, "d": None},
        "s": [1, 3],
        "x": "inf",
    }
