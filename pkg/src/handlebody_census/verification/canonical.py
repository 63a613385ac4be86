"""Normal-form enumeration per shape class.

The normalized properties pin every image into an explicit finite range:
handle images are zeroed (or, in one branch, the first is pinned to a
half-range unit), finite-order images take one representative per negation
pair from the lower half-range, free partners are reduced modulo the order
of their finite partner, and sortable entries are sorted nondecreasingly.
Enumerating those ranges directly lists exactly one state per normal form,
so the list length is the number the closed-form counts claim to compute;
checking that equality is the point of the comparison harness.

Pair ordering: (e, f) pairs are sorted lexicographically.  In the branch
that pins a unit free image, the first pair is held fixed and only the
remaining pairs are sorted.
"""

from __future__ import annotations

import itertools

from ..errors import BudgetExceededError
from ..tuples import CaseTag, Tuple5, classify, genus_of, require_odd_prime
from .states import State, flatten

DEFAULT_STATE_BUDGET = 1_000_000


def low_unit_values(p: int) -> tuple[int, ...]:
    """Units mod p^2 in [1, (p^2-1)/2], ascending: one per negation pair."""
    q = p * p
    return tuple(x for x in range(1, (q - 1) // 2 + 1) if x % p)


def low_order_p_values(p: int) -> tuple[int, ...]:
    """Multiples of p in [p, p(p-1)/2], ascending: one per negation pair."""
    return tuple(range(p, ((p - 1) // 2) * p + 1, p))


def enumerate_canonical(
    p: int, v: Tuple5, budget: int = DEFAULT_STATE_BUDGET
) -> list[State]:
    """List the normal-form states of an admissible shape.

    Output is sorted by image vector, hence deterministic.  Raises
    :class:`BudgetExceededError` once more than ``budget`` states would be
    produced, and propagates the genus error for inadmissible shapes.
    """
    require_odd_prime(p)
    genus_of(p, v)  # raises for shapes that force genus < 1
    case = classify(v)
    units = low_unit_values(p)
    orderp = low_order_p_values(p)
    pairs = tuple((e, f) for e in orderp for f in range(p))
    pinned_pairs = tuple((e, f) for e in orderp for f in range(1, p))
    cwr = itertools.combinations_with_replacement
    zeros_a = (0,) * v.r

    states: list[State] = []

    def emit(state: State) -> None:
        if len(states) >= budget:
            raise BudgetExceededError(
                f"canonical enumeration for p={p}, shape {v} exceeds the "
                f"budget of {budget} states",
                budget=budget,
            )
        states.append(state)

    if case is CaseTag.CASE_ST:
        for bs in cwr(units, v.s):
            bc = tuple((b, 0) for b in bs)
            for ds in cwr(units, v.t):
                for efs in cwr(pairs, v.m):
                    for gs in cwr(orderp, v.n):
                        emit(State(a=zeros_a, bc=bc, d=ds, ef=efs, g=gs))
    elif case is CaseTag.CASE_R:
        # Branch 1: some free pair image is a unit; pin pair 1, zero handles.
        if v.m >= 1:
            for first in pinned_pairs:
                for rest in cwr(pairs, v.m - 1):
                    for gs in cwr(orderp, v.n):
                        emit(State(a=zeros_a, bc=(), d=(), ef=(first,) + rest, g=gs))
        # Branch 2: no free pair image is a unit; pin handle 1 instead.
        tail = (0,) * (v.r - 1)
        for a1 in units:
            for es in cwr(orderp, v.m):
                ef = tuple((e, 0) for e in es)
                for gs in cwr(orderp, v.n):
                    emit(State(a=(a1,) + tail, bc=(), d=(), ef=ef, g=gs))
    else:  # CASE_M: the pinned-pair branch alone, with no handles to zero
        for first in pinned_pairs:
            for rest in cwr(pairs, v.m - 1):
                for gs in cwr(orderp, v.n):
                    emit(State(a=(), bc=(), d=(), ef=(first,) + rest, g=gs))

    states.sort(key=flatten)
    return states
