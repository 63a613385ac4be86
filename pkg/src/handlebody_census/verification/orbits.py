"""Exhaustive orbit counting under the move alphabet.

Two independent routes compute the same partition of the valid state space:

* ``bfs``: breadth-first search with an explicit frontier, driven by
  :func:`apply_move` on individual states; the default for spaces of at
  most 100000 states,
* ``union-find``: a vectorized engine that applies every generator move to
  the whole space at once (numpy) and merges components by min-label
  union-find (scatter-min hooking plus pointer jumping).

Both label each orbit by the smallest state index it contains, and state
order is lexicographic on image vectors, so the two routes produce
identical labels and the result does not depend on worker count.  Worker
parallelism only partitions successor computation; the merge is a pure
min fixpoint, which is order-independent.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ..errors import BudgetExceededError
from ..theorem_counts import count_for_tuple
from ..tuples import Tuple5, CaseTag, classify, genus_of, require_odd_prime
from .canonical import enumerate_canonical
from .moves import (
    GenClass,
    Move,
    MoveKind,
    apply_move,
    full_move_alphabet,
    generator_moves,
    inverse_move,
)
from .states import (
    State,
    coordinate_domains,
    flatten,
    iter_valid_states,
    raw_state_count,
)

DEFAULT_STATE_BUDGET = 1_000_000
BFS_STATE_LIMIT = 100_000
_DECODE_CHUNK = 1 << 20


class _Space:
    """Vectorized view of one shape's state space.

    States are rows of a mixed-radix index (last coordinate fastest), so
    row order is lexicographic on image vectors and matches both
    :func:`iter_valid_states` and the fixed-radix encoding.
    """

    def __init__(self, p: int, v: Tuple5):
        self.p, self.q, self.v = p, p * p, v
        doms = coordinate_domains(p, v)
        self.doms = doms
        self.ncols = len(doms)
        r, s, t, m, n = v.as_tuple()
        self.a_cols = list(range(r))
        self.b_cols = [r + 2 * i for i in range(s)]
        self.c_cols = [r + 2 * i + 1 for i in range(s)]
        base = r + 2 * s
        self.d_cols = [base + i for i in range(t)]
        base += t
        self.e_cols = [base + 2 * i for i in range(m)]
        self.f_cols = [base + 2 * i + 1 for i in range(m)]
        base += 2 * m
        self.g_cols = [base + i for i in range(n)]

        sizes = [len(dom) for dom in doms]
        strides = np.ones(self.ncols, dtype=np.int64)
        for c in range(self.ncols - 2, -1, -1):
            strides[c] = strides[c + 1] * sizes[c + 1]
        self.sizes = np.asarray(sizes, dtype=np.int64)
        self.strides = strides
        self.raw = int(strides[0] * sizes[0])
        # value -> in-domain position, -1 outside the domain
        self.luts = np.full((self.ncols, self.q), -1, dtype=np.int64)
        for c, dom in enumerate(doms):
            self.luts[c, list(dom)] = np.arange(len(dom))
        self.dom_arrays = [np.asarray(dom, dtype=np.int64) for dom in doms]

    def decode(self, rows: np.ndarray) -> np.ndarray:
        """Image values (len(rows) x ncols) of the given raw indices."""
        out = np.empty((len(rows), self.ncols), dtype=np.int64)
        rem = rows.copy()
        for c in range(self.ncols - 1, -1, -1):
            k = int(self.sizes[c])
            out[:, c] = self.dom_arrays[c][rem % k]
            rem //= k
        return out

    def valid_rows(self) -> tuple[np.ndarray, np.ndarray]:
        """Raw indices and image values of all valid states, ascending."""
        need_unit = self.v.s == 0 and self.v.t == 0
        idx_chunks, dig_chunks = [], []
        for start in range(0, self.raw, _DECODE_CHUNK):
            rows = np.arange(start, min(start + _DECODE_CHUNK, self.raw), dtype=np.int64)
            dig = self.decode(rows)
            if need_unit:
                mask = ((dig % self.p) != 0).any(axis=1)
                rows, dig = rows[mask], dig[mask]
            idx_chunks.append(rows)
            dig_chunks.append(dig)
        return np.concatenate(idx_chunks), np.vstack(dig_chunks)

    def entry_cols(self, cls: GenClass, index: int) -> list[int]:
        if cls is GenClass.A:
            return [self.a_cols[index]]
        if cls is GenClass.BC:
            return [self.b_cols[index], self.c_cols[index]]
        if cls is GenClass.D:
            return [self.d_cols[index]]
        if cls is GenClass.EF:
            return [self.e_cols[index], self.f_cols[index]]
        return [self.g_cols[index]]

    def ref_col(self, ref) -> int:
        cols = self.entry_cols(ref.cls, ref.index)
        return cols[ref.part] if len(cols) == 2 else cols[0]

    def state_row(self, state: State) -> int:
        """Raw index of one state; -1 if any image leaves its domain."""
        row = 0
        for c, x in enumerate(flatten(state)):
            pos = int(self.luts[c, x]) if 0 <= x < self.q else -1
            if pos < 0:
                return -1
            row += pos * int(self.strides[c])
        return row


def _move_updates(space: _Space, dig: np.ndarray, move: Move):
    """New values for the columns a move changes, as (column, values) pairs."""
    q = space.q
    if move.kind is MoveKind.PERMUTE:
        ci = space.entry_cols(move.cls, move.index)
        cj = space.entry_cols(move.cls, move.index2)
        out = []
        for a, b in zip(ci, cj):
            out.append((a, dig[:, b]))
            out.append((b, dig[:, a]))
        return out
    if move.kind is MoveKind.SPIN:
        if move.sign == 1:
            return []
        return [(c, (q - dig[:, c]) % q) for c in space.entry_cols(move.cls, move.index)]
    if move.kind is MoveKind.TWIST:
        finite, free = space.entry_cols(move.cls, move.index)
        return [(free, (dig[:, free] + move.amount * dig[:, finite]) % q)]
    if move.kind is MoveKind.SLIDE:
        (target,) = space.entry_cols(GenClass.A, move.index)
        src = space.ref_col(move.source)
        return [(target, (dig[:, target] + move.amount * dig[:, src]) % q)]
    raise ValueError(f"unknown move kind {move.kind!r}")


def _successor_rows(space: _Space, dig, rows, move: Move) -> np.ndarray:
    """Raw successor index per state, via per-column position deltas."""
    out = rows.copy()
    for col, new_values in _move_updates(space, dig, move):
        new_pos = space.luts[col, new_values]
        if (new_pos < 0).any():
            raise AssertionError(
                f"move {move} left the per-generator domain on column {col}"
            )
        old_pos = space.luts[col, dig[:, col]]
        out += (new_pos - old_pos) * int(space.strides[col])
    return out


def _rows_to_valid_index(valid_raw: np.ndarray, rows: np.ndarray) -> np.ndarray:
    pos = np.searchsorted(valid_raw, rows)
    pos_clipped = np.minimum(pos, len(valid_raw) - 1)
    if not ((pos < len(valid_raw)) & (valid_raw[pos_clipped] == rows)).all():
        raise AssertionError("a move escaped the valid state space")
    return pos


def _successor_arrays(space, valid_raw, dig, moves, workers: int) -> list[np.ndarray]:
    """One successor-index array per move, chunked across workers.

    Successor values do not depend on the chunking, so any worker count
    yields identical arrays.
    """
    filtered = len(valid_raw) != space.raw

    def one_chunk(move, lo, hi):
        rows = _successor_rows(space, dig[lo:hi], valid_raw[lo:hi], move)
        return _rows_to_valid_index(valid_raw, rows) if filtered else rows

    n = len(valid_raw)
    if workers <= 1 or n == 0:
        return [one_chunk(move, 0, n) for move in moves]
    bounds = np.linspace(0, n, workers + 1, dtype=np.int64)
    arrays = []
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for move in moves:
            futures = [
                pool.submit(one_chunk, move, int(bounds[w]), int(bounds[w + 1]))
                for w in range(workers)
            ]
            arrays.append(np.concatenate([f.result() for f in futures]))
    return arrays


def _min_label_components(n: int, succ_arrays) -> np.ndarray:
    """Orbit labels as the least state index per component.

    Iterate scatter-min over every successor array, then chase labels
    through themselves (pointer jumping) until nothing changes.  Labels are
    always indices of smaller states in the same component, so the fixpoint
    assigns every state its component's minimum; min is order-independent,
    which is what makes the result deterministic.
    """
    labels = np.arange(n, dtype=np.int64)
    if n == 0:
        return labels
    while True:
        before = labels
        cur = labels
        for succ in succ_arrays:
            cur = np.minimum(cur, cur[succ])
        while True:
            jumped = cur[cur]
            if np.array_equal(jumped, cur):
                break
            cur = jumped
        if np.array_equal(cur, before):
            return cur
        labels = cur


def _moves_with_inverses(p: int, v: Tuple5) -> list[Move]:
    moves = generator_moves(p, v)
    seen = set(moves)
    for move in list(moves):
        inv = inverse_move(p, move)
        if inv not in seen:
            moves.append(inv)
            seen.add(inv)
    return moves


def _bfs_labels(p: int, v: Tuple5, states: list[State]) -> np.ndarray:
    """Frontier BFS over apply_move; labels match the vectorized route.

    Seeds are taken in increasing state order, so each seed is the least
    index of its component.
    """
    index = {state: i for i, state in enumerate(states)}
    moves = _moves_with_inverses(p, v)
    labels = np.full(len(states), -1, dtype=np.int64)
    for seed, start in enumerate(states):
        if labels[seed] >= 0:
            continue
        labels[seed] = seed
        frontier = [start]
        while frontier:
            next_frontier = []
            for state in frontier:
                for move in moves:
                    succ = apply_move(p, state, move)
                    j = index.get(succ)
                    if j is None:
                        raise AssertionError(
                            f"move {move} escaped the valid state space"
                        )
                    if labels[j] < 0:
                        labels[j] = seed
                        next_frontier.append(succ)
            frontier = next_frontier
    return labels


@dataclasses.dataclass
class Partition:
    """Orbit labels for every valid state of one shape.

    ``labels[i]`` is the least state index in the orbit of state i; state
    order is lexicographic on image vectors.
    """

    p: int
    v: Tuple5
    raw: int
    labels: np.ndarray
    method: str
    _space: _Space
    _valid_raw: np.ndarray

    @property
    def valid_count(self) -> int:
        return len(self.labels)

    @property
    def orbit_count(self) -> int:
        return len(np.unique(self.labels)) if self.valid_count else 0

    def orbit_sizes(self) -> np.ndarray:
        return np.unique(self.labels, return_counts=True)[1]

    @property
    def largest_orbit(self) -> int:
        return int(self.orbit_sizes().max()) if self.valid_count else 0

    def state_index(self, state: State) -> int:
        """Position of a valid state in the space's lexicographic order."""
        row = self._space.state_row(state)
        if row >= 0:
            pos = int(np.searchsorted(self._valid_raw, row))
            if pos < len(self._valid_raw) and self._valid_raw[pos] == row:
                return pos
        raise KeyError(f"state {state} is not a valid state of shape {self.v}")


def _check_budget(p: int, v: Tuple5, budget: int) -> int:
    raw = raw_state_count(p, v)
    if raw > budget:
        raise BudgetExceededError(
            f"shape {v} at p={p} has a raw state space of {raw} states, "
            f"over the budget of {budget}",
            required=raw,
            budget=budget,
        )
    return raw


def orbit_partition(
    p: int,
    v: Tuple5,
    budget: int = DEFAULT_STATE_BUDGET,
    workers: int = 1,
    method: str | None = None,
) -> Partition:
    """Partition the valid states of a shape into move orbits.

    ``method`` may force ``"bfs"`` or ``"union-find"``; by default BFS runs
    for spaces of at most 100000 valid states with a single worker, and the
    vectorized union-find otherwise.  Admissibility is not required: any
    well-formed shape has a state space.  Raises
    :class:`BudgetExceededError` when the raw space is over ``budget``.
    """
    require_odd_prime(p)
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    raw = _check_budget(p, v, budget)
    space = _Space(p, v)
    valid_raw, dig = space.valid_rows()
    if method is None:
        method = "bfs" if len(valid_raw) <= BFS_STATE_LIMIT and workers == 1 else "union-find"
    if method == "bfs":
        states = list(iter_valid_states(p, v))
        labels = _bfs_labels(p, v, states)
    elif method == "union-find":
        moves = _moves_with_inverses(p, v)
        succ = _successor_arrays(space, valid_raw, dig, moves, workers)
        labels = _min_label_components(len(valid_raw), succ)
    else:
        raise ValueError(f"unknown orbit method {method!r}")
    return Partition(
        p=p, v=v, raw=raw, labels=labels, method=method,
        _space=space, _valid_raw=valid_raw,
    )


@dataclasses.dataclass(frozen=True)
class OrbitStats:
    """Orbit census of one shape: counts plus space statistics."""

    orbits: int
    state_space_size: int  # raw size, before the surjectivity filter
    valid_states: int
    largest_orbit: int


def orbit_count(
    p: int,
    v: Tuple5,
    budget: int = DEFAULT_STATE_BUDGET,
    workers: int = 1,
    method: str | None = None,
) -> OrbitStats:
    """Count move orbits of the valid states; see :func:`orbit_partition`."""
    part = orbit_partition(p, v, budget=budget, workers=workers, method=method)
    return OrbitStats(
        orbits=part.orbit_count,
        state_space_size=part.raw,
        valid_states=part.valid_count,
        largest_orbit=part.largest_orbit,
    )


def check_move_closure(p: int, v: Tuple5, budget: int = DEFAULT_STATE_BUDGET) -> int:
    """Assert every alphabet move maps every valid state into the valid set.

    Vectorized sweep over the full alphabet.  Domain membership is checked
    per changed column, and surjectivity by bookkeeping the number of unit
    images.  Returns the number of (state, move) pairs checked.
    """
    require_odd_prime(p)
    _check_budget(p, v, budget)
    space = _Space(p, v)
    valid_raw, dig = space.valid_rows()
    always_surjective = v.s + v.t > 0
    unit_counts = ((dig % p) != 0).sum(axis=1)
    checked = 0
    for move in full_move_alphabet(p, v):
        updates = _move_updates(space, dig, move)
        new_units = unit_counts.copy()
        for col, new_values in updates:
            if (space.luts[col, new_values] < 0).any():
                raise AssertionError(
                    f"move {move} left the domain of column {col} for shape {v}"
                )
            new_units += (new_values % p != 0).astype(np.int64)
            new_units -= (dig[:, col] % p != 0).astype(np.int64)
        if not always_surjective and (new_units == 0).any():
            raise AssertionError(f"move {move} broke surjectivity for shape {v}")
        checked += len(dig)
    return checked


@dataclasses.dataclass
class Comparison:
    """Three-way record for one shape: formula, normal forms, orbits.

    ``agreement`` holds pairwise equality booleans (None where a side is
    missing); ``complete`` is False when a budget stopped a computation,
    with the reasons in ``errors``.  Disagreement is a finding, never an
    exception.
    """

    p: int
    tuple: Tuple5
    case: CaseTag
    theorem_count: int
    canonical_count: int | None
    orbit_count: int | None
    state_space_size: int
    valid_states: int | None
    largest_orbit: int | None
    agreement: dict[str, bool | None]
    complete: bool
    errors: list[str]


def compare(
    p: int,
    v: Tuple5,
    budget: int = DEFAULT_STATE_BUDGET,
    workers: int = 1,
) -> Comparison:
    """Compare the formula count, normal-form count, and orbit count."""
    require_odd_prime(p)
    genus_of(p, v)
    theorem = count_for_tuple(p, v)
    errors: list[str] = []

    canonical: int | None
    try:
        canonical = len(enumerate_canonical(p, v, budget=budget))
    except BudgetExceededError as exc:
        canonical = None
        errors.append(f"canonical: {exc}")

    orbits: int | None
    valid: int | None
    largest: int | None
    try:
        part = orbit_partition(p, v, budget=budget, workers=workers)
        orbits, valid, largest = part.orbit_count, part.valid_count, part.largest_orbit
    except BudgetExceededError as exc:
        orbits = valid = largest = None
        errors.append(f"orbits: {exc}")

    agreement = {
        "theorem_vs_canonical": None if canonical is None else theorem == canonical,
        "theorem_vs_orbit": None if orbits is None else theorem == orbits,
        "canonical_vs_orbit": (
            None if canonical is None or orbits is None else canonical == orbits
        ),
    }
    return Comparison(
        p=p,
        tuple=v,
        case=classify(v),
        theorem_count=theorem,
        canonical_count=canonical,
        orbit_count=orbits,
        state_space_size=raw_state_count(p, v),
        valid_states=valid,
        largest_orbit=largest,
        agreement=agreement,
        complete=not errors,
        errors=errors,
    )
