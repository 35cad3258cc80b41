"""Tropical critical points of an affine matroid.

A critical point of (M, 0) for a weight vector w on {1..n} is a pair (x, y)
with x + y = w, (0, x) in the Bergman fan of M and y in the Bergman fan of
N = (M/0)^perp. Two independent routes compute them:

* :func:`critical_points_fast` builds one point per beta-nbc basis. It needs
  a rapidly increasing w.
* :func:`critical_points_oracle` tries every pair of complete flags (one of M,
  one of N) and keeps the tree pairs whose unique solution lies in both cones.
  It works for any w and reports non-generic w by raising
  :class:`~tropcrit.errors.DegenerateWeights`.

For generic w both counts equal the beta invariant.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .bergman import (
    AffineMatroid,
    complete_flags,
    in_bergman_fan,
    in_flag_cone,
    strata_partition,
)
from .errors import (
    AllTrialsDegenerate,
    DegenerateWeights,
    InputError,
    InternalAssertionFailed,
    NotATree,
    NotRapidlyIncreasing,
    TheoremViolation,
    TropcritError,
)
from .invariants import FlagOfFlats, beta, bnbc_bases, flag_of_basis
from .matroid import Matroid
from .partitions import (
    GraphClass,
    SetPartition,
    TreeSolution,
    generic_infeasibility_witness,
    intersection_graph,
    is_rapidly_increasing,
    powers_of_ten,
    solve_tree,
)

W_LOW, W_HIGH = 1, 10**6


@dataclass(frozen=True)
class CriticalPoint:
    """One critical point together with the combinatorial data that produced it.

    ``coflag`` is a complete flag of N written in the labels 1..n of E - 0.
    ``basis`` is the beta-nbc basis for fast points; for oracle points it is
    the set of stratum minima of ``flag`` (which is that basis when the theory
    holds).
    """

    basis: frozenset[int]
    flag: FlagOfFlats
    coflag: FlagOfFlats
    pi: SetPartition
    pi_perp: SetPartition
    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]
    w: tuple[Fraction, ...]
    solution: Optional[TreeSolution] = field(default=None, compare=False, repr=False)

    @property
    def key(self) -> tuple:
        return (self.x, self.y)

    def sort_key(self) -> tuple:
        return (tuple(sorted(self.basis)), self.x)


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise InternalAssertionFailed(message)


def _require_canonical(A: AffineMatroid) -> None:
    if not A.is_canonical:
        raise InputError("expected an affine matroid whose special element is 0")


def _weights(A: AffineMatroid, w: Sequence) -> tuple[Fraction, ...]:
    w = tuple(Fraction(v) for v in w)
    if len(w) != A.n:
        raise InputError(f"w must have {A.n} entries, got {len(w)}")
    return w


def _y_on_ground(y: Sequence) -> dict[int, Fraction]:
    return {i + 1: v for i, v in enumerate(y)}


def coflag_of_basis(A: AffineMatroid, B) -> FlagOfFlats:
    """F_N(E - B) for a basis B of M containing 0, written in the labels of E."""
    to_n = {g: i for i, g in A.n_to_ground.items()}
    complement = A.matroid.ground - frozenset(B)
    return flag_of_basis(
        A.dual_contraction, frozenset(to_n[c] for c in complement)
    ).relabel(A.n_to_ground)


def critical_points_fast(A: AffineMatroid, w: Sequence) -> list[CriticalPoint]:
    """One critical point per beta-nbc basis, for rapidly increasing w.

    Every output is checked: x + y = w, both vectors lie in the closed cones of
    their flags, and both pass the circuit criterion. A failed check raises
    :class:`InternalAssertionFailed`.
    """
    _require_canonical(A)
    w = _weights(A, w)
    if not is_rapidly_increasing(w):
        raise NotRapidlyIncreasing("the beta-nbc construction needs a rapidly increasing w")
    M, N = A.matroid, A.dual_contraction
    points = []
    for B in bnbc_bases(M, 0):
        F = flag_of_basis(M, B)
        G = coflag_of_basis(A, B)
        pi, pi_perp = strata_partition(F), strata_partition(G)
        try:
            sol = solve_tree(pi, pi_perp, w)
        except NotATree as exc:
            raise InternalAssertionFailed(f"basis {sorted(B)}: {exc}") from exc
        x, y = sol.x, sol.y
        x_full = sol.x_full
        where = f"basis {sorted(B)}"
        _check(all(a + b == c for a, b, c in zip(x, y, w)), f"{where}: x + y != w")
        _check(in_flag_cone(F, x_full), f"{where}: (0, x) outside the cone of F_M(B)")
        _check(in_flag_cone(G, _y_on_ground(y)), f"{where}: y outside the cone of F_N(B^perp)")
        _check(in_bergman_fan(M, x_full), f"{where}: (0, x) fails the circuit criterion for M")
        _check(in_bergman_fan(N, y), f"{where}: y fails the circuit criterion for N")
        points.append(CriticalPoint(B, F, G, pi, pi_perp, x, y, w, sol))
    points.sort(key=CriticalPoint.sort_key)
    return points


def critical_points_oracle(A: AffineMatroid, w: Sequence) -> list[CriticalPoint]:
    """Brute force over all pairs of complete flags of M and N.

    Raises :class:`DegenerateWeights` when w is visibly non-generic: a kept
    solution sits on the boundary of one of its cones, two flag pairs give the
    same point, or some cyclic pair has every cycle sum equal to zero.
    """
    _require_canonical(A)
    w = _weights(A, w)
    M = A.matroid
    m_flags = [(F, strata_partition(F)) for F in complete_flags(M)]
    n_flags = [
        (G, strata_partition(G))
        for G in (H.relabel(A.n_to_ground) for H in complete_flags(A.dual_contraction))
    ]
    found: dict[tuple, CriticalPoint] = {}
    for F, pi in m_flags:
        for G, tau in n_flags:
            kind = intersection_graph(pi, tau).classify().kind
            if kind is not GraphClass.TREE:
                if generic_infeasibility_witness(pi, tau, w) is None:
                    raise DegenerateWeights(
                        f"every cycle of the pair {pi} / {tau} has zero alternating sum"
                    )
                continue
            sol = solve_tree(pi, tau, w)
            x_full, y_map = sol.x_full, _y_on_ground(sol.y)
            if not (in_flag_cone(F, x_full) and in_flag_cone(G, y_map)):
                continue
            if not (in_flag_cone(F, x_full, strict=True) and in_flag_cone(G, y_map, strict=True)):
                raise DegenerateWeights(
                    f"solution for flags {F} / {G} lies on a cone boundary"
                )
            point = CriticalPoint(
                frozenset(min(s) for s in F.strata), F, G, pi, tau, sol.x, sol.y, w, sol
            )
            if point.key in found:
                raise DegenerateWeights(f"point {point.key} arises from two flag pairs")
            found[point.key] = point
    return sorted(found.values(), key=CriticalPoint.sort_key)


def random_weights(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(W_LOW, W_HIGH)) for _ in range(n))


def degree(A: AffineMatroid, trials: int = 3, rng_seed: int = 0) -> int:
    """Number of critical points for generic w, by sampling and the oracle.

    Draws ``trials`` integer vectors with entries uniform in [1, 10^6] from a
    ``random.Random(rng_seed)``; degenerate draws are skipped, and all the
    remaining counts must agree.
    """
    if trials < 1:
        raise InputError("trials must be at least 1")
    if not A.is_canonical:
        A = A.canonical()[0]
    rng = random.Random(rng_seed)
    counts = []
    for _ in range(trials):
        try:
            counts.append(len(critical_points_oracle(A, random_weights(rng, A.n))))
        except DegenerateWeights:
            continue
    if not counts:
        raise AllTrialsDegenerate(f"all {trials} sampled weight vectors were degenerate")
    if len(set(counts)) != 1:
        raise TheoremViolation(f"point counts differ between generic samples: {counts}")
    return counts[0]


@dataclass
class VerificationReport:
    """Outcome of checking the point count three ways on one affine matroid."""

    special: int
    seed: int
    beta: Optional[int] = None
    fast_count: Optional[int] = None
    oracle_count: Optional[int] = None
    random_counts: list[int] = field(default_factory=list)
    samples: list[tuple[Fraction, ...]] = field(default_factory=list)
    resamples: int = 0
    fast_points: list[CriticalPoint] = field(default_factory=list)
    oracle_points: list[CriticalPoint] = field(default_factory=list)
    point_sets_equal: bool = False
    flags_from_bnbc: bool = False
    error: Optional[str] = None
    error_kind: Optional[str] = None

    @property
    def counts_agree(self) -> bool:
        if self.error is not None or self.beta is None:
            return False
        counts = [self.fast_count, self.oracle_count, *self.random_counts]
        return all(c == self.beta for c in counts)

    @property
    def all_agree(self) -> bool:
        return self.counts_agree and self.point_sets_equal and self.flags_from_bnbc


def _flags_come_from_bnbc(A: AffineMatroid, points: list[CriticalPoint]) -> bool:
    good = set(bnbc_bases(A.matroid, 0))
    for p in points:
        if p.basis not in good:
            return False
        if p.flag != flag_of_basis(A.matroid, p.basis):
            return False
        if p.coflag != coflag_of_basis(A, p.basis):
            return False
    return True


def verify_theorem(
    M: Union[Matroid, AffineMatroid],
    num_random_w: int = 3,
    rng_seed: int = 0,
    *,
    special: int = 0,
    max_resamples: Optional[int] = None,
) -> VerificationReport:
    """Compare beta(M), the fast count and oracle counts on one affine matroid.

    The fast and oracle point sets are compared at w = (1, 10, 100, ...);
    then ``num_random_w`` generic samples are counted with the oracle. Library
    errors are caught and recorded in the report rather than raised.
    """
    if isinstance(M, AffineMatroid):
        special, M = M.special, M.matroid
    report = VerificationReport(special=special, seed=rng_seed)
    if max_resamples is None:
        max_resamples = 10 * max(num_random_w, 1)
    try:
        A = AffineMatroid(M, special)
        if not A.is_canonical:
            A = A.canonical()[0]
        report.beta = beta(A.matroid)
        w0 = powers_of_ten(A.n)
        report.fast_points = critical_points_fast(A, w0)
        report.fast_count = len(report.fast_points)
        report.oracle_points = critical_points_oracle(A, w0)
        report.oracle_count = len(report.oracle_points)
        report.point_sets_equal = {p.key for p in report.fast_points} == {
            p.key for p in report.oracle_points
        } and report.fast_count == report.oracle_count
        report.flags_from_bnbc = _flags_come_from_bnbc(A, report.oracle_points)
        rng = random.Random(rng_seed)
        while len(report.random_counts) < num_random_w:
            w = random_weights(rng, A.n)
            try:
                count = len(critical_points_oracle(A, w))
            except DegenerateWeights:
                report.resamples += 1
                if report.resamples > max_resamples:
                    raise AllTrialsDegenerate("too many degenerate samples")
                continue
            report.samples.append(w)
            report.random_counts.append(count)
    except TropcritError as exc:
        report.error = str(exc)
        report.error_kind = type(exc).__name__
    return report
