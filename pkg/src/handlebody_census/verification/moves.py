"""Image-level action of the realizable moves.

Moves act on image vectors with the conjugating words already abelianized
away (conjugation is invisible in an abelian target), so each move is a
small affine update of one or two coordinates mod p^2:

* PERMUTE swaps two same-class entries (whole pairs for paired classes),
* SPIN negates one entry, or one pair jointly,
* TWIST adds a multiple of the finite-order partner to the free partner
  inside one pair: (b, c) -> (b, c + v*b) and (e, f) -> (e, f + w*e),
* SLIDE adds a multiple of a single generator image from another factor to
  one free-handle image a_i.

Every move preserves validity, and every move's inverse is again a move of
the same kind, so closure under the alphabet is a genuine equivalence
relation on states.
"""

from __future__ import annotations

import dataclasses
import enum

from ..tuples import Tuple5
from .states import State


class MoveKind(enum.Enum):
    PERMUTE = "permute"
    SPIN = "spin"
    TWIST = "twist"
    SLIDE = "slide"


class GenClass(enum.Enum):
    A = "a"
    BC = "bc"
    D = "d"
    EF = "ef"
    G = "g"


#: classes holding (finite-order, free) generator pairs
PAIRED = frozenset({GenClass.BC, GenClass.EF})


@dataclasses.dataclass(frozen=True)
class GenRef:
    """One concrete generator: class, index, and pair slot (0 finite, 1 free)."""

    cls: GenClass
    index: int
    part: int = 0


@dataclasses.dataclass(frozen=True)
class Move:
    kind: MoveKind
    cls: GenClass
    index: int
    index2: int | None = None  # PERMUTE partner
    amount: int = 0  # TWIST amount, or SLIDE multiplier
    source: GenRef | None = None  # SLIDE source generator
    sign: int = -1  # SPIN direction; -1 negates, +1 is the identity


def _class_values(state: State, cls: GenClass):
    return getattr(state, cls.value)


def _class_len(state: State, cls: GenClass) -> int:
    return len(_class_values(state, cls))


def _check_index(state: State, cls: GenClass, index, what: str) -> None:
    if not isinstance(index, int) or isinstance(index, bool):
        raise ValueError(f"{what} must be an integer index, got {index!r}")
    if not 0 <= index < _class_len(state, cls):
        raise ValueError(
            f"{what} {index} out of range for class {cls.value!r} "
            f"of length {_class_len(state, cls)}"
        )


def _ref_value(state: State, ref: GenRef) -> int:
    _check_index(state, ref.cls, ref.index, "slide source index")
    entry = _class_values(state, ref.cls)[ref.index]
    if ref.cls in PAIRED:
        if ref.part not in (0, 1):
            raise ValueError(f"pair slot must be 0 or 1, got {ref.part}")
        return entry[ref.part]
    if ref.part != 0:
        raise ValueError(f"class {ref.cls.value!r} has no pair slot {ref.part}")
    return entry


def _replace(state: State, cls: GenClass, values) -> State:
    return state._replace(**{cls.value: tuple(values)})


def apply_move(p: int, state: State, move: Move) -> State:
    """Apply one move to a state; validity is preserved.

    Raises ValueError for out-of-range indices, malformed amounts, or a
    slide sourced from the target's own factor.
    """
    q = p * p
    _check_index(state, move.cls, move.index, "move index")
    values = list(_class_values(state, move.cls))

    if move.kind is MoveKind.PERMUTE:
        _check_index(state, move.cls, move.index2, "move partner index")
        if move.index2 == move.index:
            raise ValueError("interchange needs two distinct indices")
        i, j = move.index, move.index2
        values[i], values[j] = values[j], values[i]
        return _replace(state, move.cls, values)

    if move.kind is MoveKind.SPIN:
        if move.sign not in (1, -1):
            raise ValueError(f"spin sign must be +1 or -1, got {move.sign}")
        if move.sign == 1:
            return state
        entry = values[move.index]
        if move.cls in PAIRED:
            values[move.index] = ((-entry[0]) % q, (-entry[1]) % q)
        else:
            values[move.index] = (-entry) % q
        return _replace(state, move.cls, values)

    if move.kind is MoveKind.TWIST:
        if move.cls not in PAIRED:
            raise ValueError(f"twist acts on paired classes, not {move.cls.value!r}")
        bound = q if move.cls is GenClass.BC else p
        if not 0 <= move.amount < bound:
            raise ValueError(
                f"twist amount must lie in [0, {bound}) for class "
                f"{move.cls.value!r}, got {move.amount}"
            )
        finite, free = values[move.index]
        values[move.index] = (finite, (free + move.amount * finite) % q)
        return _replace(state, move.cls, values)

    if move.kind is MoveKind.SLIDE:
        if move.cls is not GenClass.A:
            raise ValueError("slides target free-handle images only")
        if move.source is None:
            raise ValueError("slide needs a source generator")
        if move.source.cls is GenClass.A and move.source.index == move.index:
            raise ValueError(
                f"slide of a_{move.index} over its own factor is not a move"
            )
        src = _ref_value(state, move.source)
        values[move.index] = (values[move.index] + move.amount * src) % q
        return _replace(state, move.cls, values)

    raise ValueError(f"unknown move kind {move.kind!r}")


def inverse_move(p: int, move: Move) -> Move:
    """The alphabet move undoing ``move`` at the image level.

    Interchanges and spins are involutions; a twist inverts by the
    complementary amount; a slide inverts by the negated multiplier.
    """
    q = p * p
    if move.kind in (MoveKind.PERMUTE, MoveKind.SPIN):
        return move
    if move.kind is MoveKind.TWIST:
        bound = q if move.cls is GenClass.BC else p
        return dataclasses.replace(move, amount=(-move.amount) % bound)
    if move.kind is MoveKind.SLIDE:
        return dataclasses.replace(move, amount=(-move.amount) % q)
    raise ValueError(f"unknown move kind {move.kind!r}")


def _class_lengths(v: Tuple5):
    return [
        (GenClass.A, v.r),
        (GenClass.BC, v.s),
        (GenClass.D, v.t),
        (GenClass.EF, v.m),
        (GenClass.G, v.n),
    ]


def slide_sources(v: Tuple5, target_index: int) -> list[GenRef]:
    """Every single generator of a factor other than the target handle's."""
    sources = []
    for j in range(v.r):
        if j != target_index:
            sources.append(GenRef(GenClass.A, j))
    for j in range(v.s):
        sources.append(GenRef(GenClass.BC, j, 0))
        sources.append(GenRef(GenClass.BC, j, 1))
    for j in range(v.t):
        sources.append(GenRef(GenClass.D, j))
    for j in range(v.m):
        sources.append(GenRef(GenClass.EF, j, 0))
        sources.append(GenRef(GenClass.EF, j, 1))
    for j in range(v.n):
        sources.append(GenRef(GenClass.G, j))
    return sources


def generator_moves(p: int, v: Tuple5) -> list[Move]:
    """A finite generating set whose closure matches the full alphabet's.

    Adjacent interchanges generate all permutations, unit twists generate
    all twist amounts, and unit slides generate all multipliers, so orbits
    under this set equal orbits under :func:`full_move_alphabet`.
    """
    moves = []
    for cls, length in _class_lengths(v):
        for i in range(length - 1):
            moves.append(Move(MoveKind.PERMUTE, cls, i, index2=i + 1))
    for cls, length in _class_lengths(v):
        for i in range(length):
            moves.append(Move(MoveKind.SPIN, cls, i))
    for i in range(v.s):
        moves.append(Move(MoveKind.TWIST, GenClass.BC, i, amount=1))
    for i in range(v.m):
        moves.append(Move(MoveKind.TWIST, GenClass.EF, i, amount=1))
    for i in range(v.r):
        for src in slide_sources(v, i):
            moves.append(Move(MoveKind.SLIDE, GenClass.A, i, amount=1, source=src))
    return moves


def full_move_alphabet(p: int, v: Tuple5) -> list[Move]:
    """Every single move: all interchanges, spins, twist amounts, slides.

    Twist amounts run over [0, p^2) for bc pairs and [0, p) for ef pairs;
    slide multipliers run over [0, p^2).  Amount 0 moves are identities and
    are included for completeness of the documented ranges.
    """
    q = p * p
    moves = []
    for cls, length in _class_lengths(v):
        for i in range(length):
            for j in range(i + 1, length):
                moves.append(Move(MoveKind.PERMUTE, cls, i, index2=j))
    for cls, length in _class_lengths(v):
        for i in range(length):
            moves.append(Move(MoveKind.SPIN, cls, i))
    for i in range(v.s):
        for amount in range(q):
            moves.append(Move(MoveKind.TWIST, GenClass.BC, i, amount=amount))
    for i in range(v.m):
        for amount in range(p):
            moves.append(Move(MoveKind.TWIST, GenClass.EF, i, amount=amount))
    for i in range(v.r):
        for src in slide_sources(v, i):
            for amount in range(q):
                moves.append(
                    Move(MoveKind.SLIDE, GenClass.A, i, amount=amount, source=src)
                )
    return moves
