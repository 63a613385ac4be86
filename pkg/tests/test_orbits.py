"""Orbit engine: frozen counts, method agreement, determinism, compare."""

import numpy as np
import pytest

from handlebody_census import (
    BudgetExceededError,
    InadmissibleTupleError,
    Tuple5,
    compare,
    count_for_tuple,
    enumerate_canonical,
    orbit_count,
    orbit_partition,
)
from handlebody_census.verification import State, apply_move, check_move_closure
from handlebody_census.verification.moves import generator_moves, inverse_move
from handlebody_census.verification.orbits import (
    _Space,
    _moves_with_inverses,
    _rows_to_valid_index,
    _successor_rows,
)
from handlebody_census.verification.states import iter_valid_states


@pytest.mark.parametrize(
    "p,v,expected",
    [
        (3, (0, 1, 0, 0, 0), 3),
        (3, (0, 0, 1, 0, 0), 3),
        (3, (1, 0, 0, 0, 0), 3),
        (3, (0, 0, 0, 1, 0), 2),
        (3, (0, 1, 1, 0, 0), 9),
        (3, (0, 0, 0, 2, 0), 5),  # one fewer than the closed form's 6
    ],
)
def test_frozen_orbit_counts(p, v, expected):
    for method in ("bfs", "union-find"):
        assert orbit_count(p, Tuple5(*v), method=method).orbits == expected


def test_orbit_stats_fields():
    stats = orbit_count(3, Tuple5(0, 1, 0, 0, 0))
    assert stats.orbits == 3
    assert stats.state_space_size == 54
    assert stats.valid_states == 54
    assert stats.largest_orbit == 18


def test_slide_collapse_findings():
    # slides over other factors merge classes the closed forms keep apart;
    # the oracle reports what the moves actually identify
    assert orbit_count(3, Tuple5(1, 0, 0, 1, 0)).orbits == 3  # closed form: 5
    assert orbit_count(3, Tuple5(2, 0, 0, 0, 0)).orbits == 1  # closed form: 3
    assert orbit_count(5, Tuple5(0, 0, 0, 2, 0)).orbits == 52  # closed form: 80


def test_methods_and_workers_produce_identical_labels():
    for p, v in [
        (3, Tuple5(0, 2, 0, 0, 0)),
        (3, Tuple5(0, 0, 0, 2, 0)),
        (3, Tuple5(1, 0, 0, 1, 0)),
        (3, Tuple5(1, 1, 0, 0, 0)),
        (5, Tuple5(0, 0, 0, 1, 0)),
    ]:
        bfs = orbit_partition(p, v, method="bfs")
        variants = [
            orbit_partition(p, v, method="union-find", workers=w) for w in (1, 2, 8)
        ]
        for part in variants:
            assert np.array_equal(bfs.labels, part.labels), (p, v, part.method)


def test_labels_are_least_member_indices():
    part = orbit_partition(3, Tuple5(0, 0, 0, 1, 0))
    labels = part.labels
    for rep in np.unique(labels):
        members = np.nonzero(labels == rep)[0]
        assert members.min() == rep
    assert part.orbit_count == len(np.unique(labels))
    assert part.orbit_sizes().sum() == part.valid_count


def test_default_method_dispatch():
    assert orbit_partition(3, Tuple5(0, 1, 0, 0, 0)).method == "bfs"
    assert orbit_partition(3, Tuple5(0, 1, 0, 0, 0), workers=2).method == "union-find"


def test_budget_error_names_required_states():
    with pytest.raises(BudgetExceededError) as excinfo:
        orbit_count(5, Tuple5(0, 0, 0, 2, 0), budget=10)
    assert excinfo.value.required == 10000
    assert excinfo.value.budget == 10


def test_vectorized_successors_match_apply_move():
    for p, v in [
        (3, Tuple5(0, 1, 0, 0, 0)),
        (3, Tuple5(1, 0, 0, 1, 0)),
        (3, Tuple5(0, 0, 0, 2, 0)),
        (3, Tuple5(2, 0, 0, 0, 0)),
        (3, Tuple5(1, 1, 0, 0, 0)),
    ]:
        space = _Space(p, v)
        valid_raw, dig = space.valid_rows()
        states = list(iter_valid_states(p, v))
        assert len(states) == len(valid_raw)
        index = {s: i for i, s in enumerate(states)}
        for move in _moves_with_inverses(p, v):
            rows = _successor_rows(space, dig, valid_raw, move)
            vec = _rows_to_valid_index(valid_raw, rows)
            scalar = np.array([index[apply_move(p, s, move)] for s in states])
            assert np.array_equal(vec, scalar), (p, v, move)


def test_state_index_round_trip():
    v = Tuple5(0, 0, 0, 1, 0)
    part = orbit_partition(3, v)
    states = list(iter_valid_states(3, v))
    for i, state in enumerate(states):
        assert part.state_index(state) == i
    with pytest.raises(KeyError):
        part.state_index(State(a=(), bc=(), d=(), ef=((3, 0),), g=()))  # not surjective


def test_orbit_count_ignores_admissibility():
    # a shape may force genus 0 and still have a perfectly good state space
    stats = orbit_count(3, Tuple5(0, 0, 1, 0, 0))
    assert stats.orbits == 3
    assert stats.valid_states == 6


def test_check_move_closure_runs():
    assert check_move_closure(3, Tuple5(0, 0, 0, 1, 0)) > 0
    assert check_move_closure(3, Tuple5(1, 1, 0, 0, 0)) > 0


def test_compare_agreeing_shape():
    report = compare(3, Tuple5(0, 1, 0, 0, 0))
    assert (report.theorem_count, report.canonical_count, report.orbit_count) == (3, 3, 3)
    assert report.agreement == {
        "theorem_vs_canonical": True,
        "theorem_vs_orbit": True,
        "canonical_vs_orbit": True,
    }
    assert report.complete and report.errors == []
    assert report.state_space_size == 54
    assert report.valid_states == 54


def test_compare_disagreeing_shape_is_reported_not_raised():
    report = compare(3, Tuple5(1, 0, 0, 1, 0))
    assert report.theorem_count == 5
    assert report.canonical_count == 5
    assert report.orbit_count == 3
    assert report.agreement["theorem_vs_canonical"] is True
    assert report.agreement["theorem_vs_orbit"] is False
    assert report.agreement["canonical_vs_orbit"] is False
    assert report.complete


def test_compare_budget_exhaustion_marks_incomplete():
    report = compare(5, Tuple5(0, 0, 0, 2, 0), budget=10)
    assert not report.complete
    assert report.orbit_count is None and report.canonical_count is None
    assert report.agreement == {
        "theorem_vs_canonical": None,
        "theorem_vs_orbit": None,
        "canonical_vs_orbit": None,
    }
    assert len(report.errors) == 2


def test_compare_requires_admissible_shape():
    with pytest.raises(InadmissibleTupleError):
        compare(3, Tuple5(0, 0, 1, 0, 0))


def test_orbit_never_exceeds_canonical_on_samples():
    for p, v in [
        (3, Tuple5(0, 1, 0, 1, 0)),
        (3, Tuple5(0, 0, 0, 2, 1)),
        (5, Tuple5(1, 0, 0, 1, 0)),
    ]:
        part = orbit_partition(p, v)
        canon = enumerate_canonical(p, v)
        assert part.orbit_count <= len(canon)
        # every orbit contains at least one normal form
        reps = {int(part.labels[part.state_index(s)]) for s in canon}
        assert reps == set(np.unique(part.labels).tolist())


def test_theorem_canonical_orbit_consistency_when_no_slides_or_pins():
    # shapes whose alphabet has no slides and no pinned pair agree exactly
    for p, v in [(3, Tuple5(0, 2, 0, 0, 0)), (3, Tuple5(0, 1, 1, 0, 1))]:
        report = compare(p, v)
        assert report.theorem_count == report.canonical_count == report.orbit_count
