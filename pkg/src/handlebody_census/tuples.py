"""Quotient shapes and the genus they act on.

A shape is an ordered 5-tuple (r, s, t, m, n) counting the free-product
factors of the quotient's fundamental group by kind: r free handles (Z),
s pairs of kind Z_{p^2} x Z, t of kind Z_{p^2}, m pairs of kind Z_p x Z,
and n of kind Z_p.  Shapes with r+s+t+m = 0 carry no action and are
rejected at construction.  The genus a shape acts on is a fixed linear
function of its components; for given p and g the admissible shapes are
the lattice solutions of that equation.
"""

from __future__ import annotations

import dataclasses
import enum

from .errors import InadmissibleTupleError


def require_odd_prime(p: int) -> int:
    """Validate p by trial division: an odd prime, at least 3."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError(f"p must be an integer, got {p!r}")
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime >= 3, got {p}")
    d = 3
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"p must be prime, got {p} = {d} * {p // d}")
        d += 2
    return p


def require_genus(g: int) -> int:
    if not isinstance(g, int) or isinstance(g, bool) or g < 1:
        raise ValueError(f"genus must be an integer >= 1, got {g!r}")
    return g


@dataclasses.dataclass(frozen=True, order=True)
class Tuple5:
    """Factor counts (r, s, t, m, n); at least one of r, s, t, m is positive."""

    r: int
    s: int
    t: int
    m: int
    n: int

    def __post_init__(self):
        parts = self.as_tuple()
        for x in parts:
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                raise ValueError(
                    f"shape components must be nonnegative integers, got {parts}"
                )
        if self.r + self.s + self.t + self.m == 0:
            raise ValueError(
                f"need r+s+t+m > 0, got {parts}: a shape made of Z_p factors "
                "alone has no canonical form"
            )

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.r, self.s, self.t, self.m, self.n)

    @classmethod
    def parse(cls, text: str) -> "Tuple5":
        """Parse the CLI syntax ``r,s,t,m,n``."""
        parts = text.split(",")
        if len(parts) != 5:
            raise ValueError(f"expected five components r,s,t,m,n, got {text!r}")
        try:
            values = [int(x) for x in parts]
        except ValueError as exc:
            raise ValueError(f"expected five integers r,s,t,m,n, got {text!r}") from exc
        return cls(*values)

    def __str__(self) -> str:
        return "({},{},{},{},{})".format(*self.as_tuple())


class CaseTag(enum.Enum):
    """Which counting branch applies to a shape; exactly one tag per shape."""

    CASE_ST = "st"
    CASE_R = "r"
    CASE_M = "m"


def classify(v: Tuple5) -> CaseTag:
    """Dispatch a shape: s+t > 0 wins, then r > 0, else m > 0 is forced."""
    if v.s + v.t > 0:
        return CaseTag.CASE_ST
    if v.r > 0:
        return CaseTag.CASE_R
    return CaseTag.CASE_M


def genus_of(p: int, v: Tuple5) -> int:
    """Genus forced by a shape: 1 + p^2(r+s+m-1) + (p^2-1)t + (p^2-p)n.

    Raises :class:`InadmissibleTupleError` when the formula lands below 1,
    which can only happen for r+s+m = 0 with t, n small.
    """
    require_odd_prime(p)
    q = p * p
    g = 1 + q * (v.r + v.s + v.m - 1) + (q - 1) * v.t + (q - p) * v.n
    if g < 1:
        raise InadmissibleTupleError(f"shape {v} forces genus {g} < 1")
    return g


def admissible_tuples(p: int, g: int) -> list[Tuple5]:
    """Every shape acting on genus g, sorted lexicographically.

    Exhaustive: fixing t and n leaves q*(r+s+m) determined, so the solutions
    are the compositions of that quotient whenever it is a nonnegative
    multiple of q.  Shapes with r+s+t+m = 0 are never emitted.
    """
    require_odd_prime(p)
    require_genus(g)
    q = p * p
    out = []
    t_max = (g - 1 + q) // (q - 1)
    n_max = (g - 1 + q) // (q - p)
    for t in range(t_max + 1):
        for n in range(n_max + 1):
            rest = (g - 1) - (q - 1) * t - (q - p) * n + q  # equals q*(r+s+m)
            if rest < 0 or rest % q:
                continue
            ksum = rest // q
            if ksum == 0 and t == 0:
                continue
            for r in range(ksum + 1):
                for s in range(ksum - r + 1):
                    out.append(Tuple5(r, s, t, ksum - r - s, n))
    out.sort()
    return out
