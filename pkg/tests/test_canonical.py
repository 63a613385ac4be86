"""Normal-form enumeration: frozen examples, soundness, count equality."""

import pytest

from handlebody_census import (
    BudgetExceededError,
    CaseTag,
    InadmissibleTupleError,
    Tuple5,
    admissible_tuples,
    classify,
    count_for_tuple,
    enumerate_canonical,
    is_valid_state,
)
from handlebody_census.verification import (
    State,
    flatten,
    low_order_p_values,
    low_unit_values,
)


def test_half_range_pools():
    assert low_unit_values(3) == (1, 2, 4)
    assert low_order_p_values(3) == (3,)
    assert low_unit_values(5) == (1, 2, 3, 4, 6, 7, 8, 9, 11, 12)
    assert low_order_p_values(5) == (5, 10)


def test_single_pair_shape_lists_both_normal_forms():
    states = enumerate_canonical(3, Tuple5(0, 0, 0, 1, 0))
    assert states == [
        State(a=(), bc=(), d=(), ef=((3, 1),), g=()),
        State(a=(), bc=(), d=(), ef=((3, 2),), g=()),
    ]


def test_single_b_shape_lists_low_units():
    states = enumerate_canonical(3, Tuple5(0, 1, 0, 0, 0))
    assert [s.bc for s in states] == [((1, 0),), ((2, 0),), ((4, 0),)]


def test_two_b_pairs_at_p5():
    states = enumerate_canonical(5, Tuple5(0, 2, 0, 0, 0))
    assert len(states) == 55
    units = set(low_unit_values(5))
    for s in states:
        (b1, c1), (b2, c2) = s.bc
        assert c1 == c2 == 0
        assert b1 in units and b2 in units and b1 <= b2


def test_handle_only_shape_uses_the_pinned_handle_branch():
    states = enumerate_canonical(3, Tuple5(1, 0, 0, 0, 0))
    assert [s.a for s in states] == [(1,), (2,), (4,)]


def test_inadmissible_shape_is_rejected():
    with pytest.raises(InadmissibleTupleError):
        enumerate_canonical(3, Tuple5(0, 0, 1, 0, 0))


def test_budget_error():
    with pytest.raises(BudgetExceededError) as excinfo:
        enumerate_canonical(5, Tuple5(0, 0, 0, 2, 0), budget=10)
    assert excinfo.value.budget == 10


def test_output_is_sorted_and_duplicate_free():
    for p, v in [(3, Tuple5(1, 0, 0, 1, 0)), (5, Tuple5(0, 1, 0, 1, 0)), (3, Tuple5(0, 0, 0, 2, 1))]:
        states = enumerate_canonical(p, v)
        keys = [flatten(s) for s in states]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)


def _assert_clauses(p, v, state):
    """Check every normalized property the case demands, clause by clause."""
    units = set(low_unit_values(p))
    orderp = set(low_order_p_values(p))
    case = classify(v)
    bs = [b for b, _ in state.bc]
    cs = [c for _, c in state.bc]
    es = [e for e, _ in state.ef]
    fs = [f for _, f in state.ef]

    assert all(b in units for b in bs) and bs == sorted(bs)
    assert all(c == 0 for c in cs)
    assert all(d in units for d in state.d) and list(state.d) == sorted(state.d)
    assert all(e in orderp for e in es)
    assert list(state.g) == sorted(state.g) and all(z in orderp for z in state.g)
    assert all(0 <= f <= p - 1 for f in fs)

    if case is CaseTag.CASE_ST:
        assert all(x == 0 for x in state.a)
        assert list(state.ef) == sorted(state.ef)
    elif case is CaseTag.CASE_M:
        assert fs[0] >= 1
        assert list(state.ef[1:]) == sorted(state.ef[1:])
    else:  # CASE_R splits into the pinned-pair and pinned-handle branches
        if any(fs):
            assert all(x == 0 for x in state.a)
            assert fs[0] >= 1
            assert list(state.ef[1:]) == sorted(state.ef[1:])
        else:
            assert state.a[0] in units
            assert all(x == 0 for x in state.a[1:])
            assert list(state.ef) == sorted(state.ef)


@pytest.mark.parametrize(
    "p,v",
    [
        (3, (0, 1, 0, 0, 0)),
        (3, (0, 0, 0, 2, 0)),
        (3, (1, 0, 0, 1, 0)),
        (3, (2, 0, 0, 0, 1)),
        (3, (0, 1, 1, 1, 1)),
        (5, (0, 0, 0, 2, 0)),
        (5, (1, 0, 0, 1, 0)),
        (5, (0, 1, 0, 1, 0)),
        (7, (0, 1, 0, 0, 0)),
        (7, (0, 0, 0, 1, 1)),
    ],
)
def test_canonical_soundness(p, v):
    shape = Tuple5(*v)
    for state in enumerate_canonical(p, shape):
        assert is_valid_state(p, shape, state)
        _assert_clauses(p, shape, state)


def test_length_equals_closed_form_across_shapes():
    for p, gmax in [(3, 25), (5, 40), (7, 120)]:
        for g in range(1, gmax + 1):
            for v in admissible_tuples(p, g):
                assert len(enumerate_canonical(p, v)) == count_for_tuple(p, v), (p, g, v)
