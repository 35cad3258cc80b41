"""Bergman fans of matroids and affine matroids.

Two membership tests are provided and must agree: the circuit criterion
(the minimum over every circuit is attained at least twice) and membership in
the cone of some complete flag of flats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Mapping, Sequence, Union

from .errors import InvalidElement, LoopOrColoopSpecialElement
from .invariants import FlagOfFlats
from .limits import check_flags
from .matroid import Matroid, from_mask, special_first
from .partitions import SetPartition

Vector = Union[Sequence, Mapping[int, object]]


@dataclass(frozen=True, eq=True)
class AffineMatroid:
    """A matroid with a special element that is neither a loop nor a coloop.

    ``dual_contraction`` is N = (M/e)^perp on its own labels 0..n-1;
    ``n_to_ground`` maps those labels back to E - e.
    """

    matroid: Matroid
    special: int = 0

    def __post_init__(self):
        M, e = self.matroid, self.special
        if not 0 <= e < M.size:
            raise InvalidElement(f"element {e} not in ground set 0..{M.n}")
        if M.is_loop(e) or M.is_coloop(e):
            kind = "loop" if M.is_loop(e) else "coloop"
            raise LoopOrColoopSpecialElement(f"special element {e} is a {kind}")

    @property
    def n(self) -> int:
        return self.matroid.n

    @property
    def is_canonical(self) -> bool:
        return self.special == 0

    def canonical(self) -> tuple["AffineMatroid", dict[int, int]]:
        """Relabel so the special element becomes 0; also returns ``old -> new``."""
        mapping = special_first(self.matroid.size, self.special)
        return AffineMatroid(self.matroid.relabel(mapping), 0), mapping

    @cached_property
    def _contraction(self):
        return self.matroid.contract(self.special)

    @property
    def contraction(self) -> Matroid:
        return self._contraction[0]

    @cached_property
    def dual_contraction(self) -> Matroid:
        return self.contraction.dual()

    @cached_property
    def n_to_ground(self) -> dict[int, int]:
        return {new: old for old, new in self._contraction[1].items()}


def _values(x: Vector) -> dict[int, object]:
    if isinstance(x, Mapping):
        return dict(x)
    return dict(enumerate(x))


def in_bergman_fan(M: Matroid, x: Sequence) -> bool:
    """Circuit criterion: every circuit attains its minimum at least twice."""
    if len(x) != M.size:
        raise ValueError(f"x must have {M.size} entries")
    for circuit in M.circuits():
        vals = [x[c] for c in circuit]
        low = min(vals)
        if vals.count(low) < 2:
            return False
    return True


def with_special(A: AffineMatroid, x: Sequence) -> list:
    """Insert the coordinate 0 for the special element into a vector on E - e."""
    full = list(x)
    full.insert(A.special, Fraction(0))
    return full


def in_affine_bergman(A: AffineMatroid, x: Sequence) -> bool:
    if len(x) != A.matroid.size - 1:
        raise ValueError(f"x must have {A.matroid.size - 1} entries")
    return in_bergman_fan(A.matroid, with_special(A, x))


def in_flag_cone(flag: FlagOfFlats, x: Vector, strict: bool = False) -> bool:
    """Whether x lies in cone(e_F1, ..., e_F_{r+1}) + R(1, ..., 1).

    That is: x is constant on each stratum F_i - F_{i-1} and the stratum values
    weakly decrease with i. ``strict=True`` demands strict decrease, i.e. the
    relative interior of the cone. ``x`` is a mapping from element to value or a
    sequence indexed by element.
    """
    vals = _values(x)
    previous = None
    for stratum in flag.strata:
        seen = {vals[e] for e in stratum}
        if len(seen) != 1:
            return False
        (v,) = seen
        if previous is not None and (v > previous or (strict and v == previous)):
            return False
        previous = v
    return True


def in_flag_cone_interior(flag: FlagOfFlats, x: Vector) -> bool:
    return in_flag_cone(flag, x, strict=True)


@lru_cache(maxsize=256)
def _complete_flags(M: Matroid) -> tuple[FlagOfFlats, ...]:
    if M.closure_mask(0):
        # loops: the empty set is not a flat, so there are no complete flags
        return ()
    full = M.ground_mask
    out = []

    def extend(chain):
        top = chain[-1]
        if top == full:
            out.append(chain)
            return
        for g in M.covers_mask(top):
            extend(chain + [g])

    extend([0])
    return tuple(FlagOfFlats(tuple(from_mask(m) for m in chain)) for chain in out)


def complete_flags(M: Matroid) -> list[FlagOfFlats]:
    """Every complete flag of flats, in lexicographic order of the flat sequence."""
    check_flags(M.size)
    return list(_complete_flags(M))


def bergman_membership_via_flags(M: Matroid, x: Sequence) -> bool:
    if len(x) != M.size:
        raise ValueError(f"x must have {M.size} entries")
    return any(in_flag_cone(F, x) for F in complete_flags(M))


def strata_partition(flag: FlagOfFlats) -> SetPartition:
    return SetPartition(flag.strata)
