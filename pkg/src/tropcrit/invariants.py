"""Characteristic polynomial, beta invariant, nbc and beta-nbc bases."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidElement, LoopOrColoopSpecialElement, NotABasis
from .limits import check_ground
from .matroid import Matroid, special_first


@dataclass(frozen=True)
class IntegerPolynomial:
    """Univariate polynomial with integer coefficients, lowest degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> "IntegerPolynomial":
        return IntegerPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def __add__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        m = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (m - len(self.coeffs))
        b = other.coeffs + (0,) * (m - len(other.coeffs))
        return IntegerPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "IntegerPolynomial":
        return IntegerPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        if self.is_zero() or other.is_zero():
            return IntegerPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntegerPolynomial(tuple(out))

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "t" if power == 1 else f"t^{power}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def char_poly(M: Matroid) -> IntegerPolynomial:
    """chi_M(t) = sum over X of (-1)^|X| t^(r(M) - r(X)), summed literally."""
    check_ground(M.size, "char_poly")
    top = M.full_rank
    coeffs = [0] * (top + 1)
    for mask in range(1 << M.size):
        sign = -1 if bin(mask).count("1") % 2 else 1
        coeffs[top - M.rank_mask(mask)] += sign
    return IntegerPolynomial(tuple(coeffs))


def beta(M: Matroid) -> int:
    """Crapo's beta invariant |chi_M'(1)|."""
    return abs(char_poly(M).derivative()(1))


@dataclass(frozen=True)
class FlagOfFlats:
    """A chain of flats from the empty set up to the whole ground set."""

    flats: tuple[frozenset[int], ...]

    @property
    def length(self) -> int:
        return len(self.flats) - 1

    @property
    def strata(self) -> tuple[frozenset[int], ...]:
        """The differences F_i - F_{i-1}, for i = 1..length."""
        return tuple(b - a for a, b in zip(self.flats, self.flats[1:]))

    def relabel(self, mapping: dict[int, int]) -> "FlagOfFlats":
        return FlagOfFlats(tuple(frozenset(mapping[i] for i in f) for f in self.flats))

    def is_complete_flag_of(self, M: Matroid) -> bool:
        fl = self.flats
        if not fl or fl[0] or fl[-1] != M.ground:
            return False
        for i, f in enumerate(fl):
            if not M.is_flat(f) or M.rank(f) != i:
                return False
        return all(a < b for a, b in zip(fl, fl[1:]))

    def __str__(self):
        def name(f):
            if not f:
                return "{}"
            items = sorted(f)
            if all(i < 10 for i in items):
                return "".join(map(str, items))
            return "{" + ",".join(map(str, items)) + "}"

        return " < ".join(name(f) for f in self.flats)


def flag_of_basis(M: Matroid, B: Iterable[int]) -> FlagOfFlats:
    """F_M(B): closures of the largest one, two, ... elements of the basis B."""
    B = frozenset(B)
    if not M.is_basis(B):
        raise NotABasis(f"{sorted(B)} is not a basis")
    desc = sorted(B, reverse=True)
    flats = [frozenset()]
    for i in range(1, len(desc)):
        flats.append(M.closure(desc[:i]))
    flats.append(M.ground)
    return FlagOfFlats(tuple(flats))


def is_nbc_basis(M: Matroid, B: Iterable[int]) -> bool:
    """Whether B contains no broken circuit.

    Uses the flag test: with B = {b_1 > ... > b_k}, B is nbc iff b_i is the
    minimum of cl{b_1..b_i} for every i. That test presumes M is loopless; a
    loop makes the empty set a broken circuit, so no basis is nbc.
    """
    B = frozenset(B)
    if not M.is_basis(B):
        raise NotABasis(f"{sorted(B)} is not a basis")
    if M.loops():
        return False
    desc = sorted(B, reverse=True)
    for i, b in enumerate(desc, start=1):
        if min(M.closure(desc[:i])) != b:
            return False
    return True


def _check_special(M: Matroid, e: int) -> None:
    if not 0 <= e < M.size:
        raise InvalidElement(f"element {e} not in ground set 0..{M.n}")
    if M.is_loop(e) or M.is_coloop(e):
        raise LoopOrColoopSpecialElement(
            f"special element {e} is a {'loop' if M.is_loop(e) else 'coloop'}"
        )


def bnbc_bases(M: Matroid, e: int = 0) -> list[frozenset[int]]:
    """All beta-nbc bases of M for the order e < (other elements in order).

    With e = 0 this is the natural order. B qualifies when it is nbc in M and
    (E - B) + {0} - {1} is an nbc basis of the dual; in particular B contains 0
    and misses 1. Results are sorted lexicographically in the caller's labels.
    """
    _check_special(M, e)
    if e != 0:
        fwd = special_first(M.size, e)
        back = {v: k for k, v in fwd.items()}
        found = bnbc_bases(M.relabel(fwd), 0)
        out = [frozenset(back[i] for i in B) for B in found]
        return sorted(out, key=lambda b: tuple(sorted(b)))
    D = M.dual()
    ground = M.ground
    out = []
    for B in M.sorted_bases():
        if 0 not in B or 1 in B:
            continue
        if not is_nbc_basis(M, B):
            continue
        co = (ground - B | {0}) - {1}
        if D.is_basis(co) and is_nbc_basis(D, co):
            out.append(B)
    return out
