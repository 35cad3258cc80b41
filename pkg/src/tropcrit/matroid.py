"""Matroids on a canonical ground set {0, ..., n} given by their bases.

Subsets travel through the public API as ``frozenset[int]``; internally every
subset is an ``int`` bitmask (bit ``i`` set iff element ``i`` is present), which
is why the ground set is capped at 64 elements.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import (
    EmptyBases,
    ExchangeAxiomViolated,
    InputError,
    InvalidElement,
    InvalidRank,
    InvalidVertexIndex,
    UnequalCardinality,
)
from .limits import HARD_MAX


def to_mask(subset: Iterable[int]) -> int:
    mask = 0
    for i in subset:
        mask |= 1 << i
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class Matroid:
    """An immutable matroid on ``{0, ..., size-1}``.

    Build instances with :func:`from_bases`, :func:`uniform` or :func:`graphic`;
    the constructor itself trusts its input. Derived data (flats, circuits,
    ranks) is memoized on the instance. Concurrent readers may race to fill a
    cache slot but always write the same value.
    """

    def __init__(self, size: int, basis_masks: Iterable[int]):
        self.size = size
        self.basis_masks = frozenset(basis_masks)
        self._rank_cache: dict[int, int] = {}
        self._cover_cache: dict[int, tuple[int, ...]] = {}

    # -- basic data ---------------------------------------------------------

    @property
    def n(self) -> int:
        """Largest element label."""
        return self.size - 1

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(range(self.size))

    @property
    def ground_mask(self) -> int:
        return (1 << self.size) - 1

    @cached_property
    def bases(self) -> frozenset[frozenset[int]]:
        return frozenset(from_mask(b) for b in self.basis_masks)

    @cached_property
    def full_rank(self) -> int:
        return _popcount(next(iter(self.basis_masks)))

    def sorted_bases(self) -> list[frozenset[int]]:
        """Bases in lexicographic order of their sorted element tuples."""
        return sorted(self.bases, key=lambda b: tuple(sorted(b)))

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.size == other.size and self.basis_masks == other.basis_masks

    def __hash__(self):
        return hash((self.size, self.basis_masks))

    def __repr__(self):
        return (
            f"Matroid(size={self.size}, rank={self.full_rank}, "
            f"bases={len(self.basis_masks)})"
        )

    # -- rank and closure ---------------------------------------------------

    def _check_element(self, e: int) -> None:
        if not 0 <= e < self.size:
            raise InvalidElement(f"element {e} not in ground set 0..{self.n}")

    def _mask(self, subset: Iterable[int]) -> int:
        subset = list(subset)
        if any(i < 0 for i in subset):
            raise InvalidElement(f"{sorted(subset)} is not inside 0..{self.n}")
        mask = to_mask(subset)
        if mask >> self.size:
            raise InvalidElement(f"{sorted(subset)} is not inside 0..{self.n}")
        return mask

    def rank_mask(self, mask: int) -> int:
        r = self._rank_cache.get(mask)
        if r is None:
            r = max(_popcount(mask & b) for b in self.basis_masks)
            self._rank_cache[mask] = r
        return r

    def rank(self, subset: Iterable[int] = ()) -> int:
        return self.rank_mask(self._mask(subset))

    def is_independent(self, subset: Iterable[int]) -> bool:
        mask = self._mask(subset)
        return any(mask & b == mask for b in self.basis_masks)

    def is_basis(self, subset: Iterable[int]) -> bool:
        return self._mask(subset) in self.basis_masks

    def closure_mask(self, mask: int) -> int:
        r = self.rank_mask(mask)
        out = mask
        for x in range(self.size):
            bit = 1 << x
            if not mask & bit and self.rank_mask(mask | bit) == r:
                out |= bit
        return out

    def closure(self, subset: Iterable[int]) -> frozenset[int]:
        return from_mask(self.closure_mask(self._mask(subset)))

    def is_flat(self, subset: Iterable[int]) -> bool:
        mask = self._mask(subset)
        return self.closure_mask(mask) == mask

    # -- flats and circuits -------------------------------------------------

    def covers_mask(self, flat: int) -> tuple[int, ...]:
        """Flats covering ``flat`` in the lattice of flats, sorted."""
        cached = self._cover_cache.get(flat)
        if cached is None:
            found = {
                self.closure_mask(flat | (1 << x))
                for x in range(self.size)
                if not flat & (1 << x)
            }
            cached = tuple(sorted(found, key=_mask_key))
            self._cover_cache[flat] = cached
        return cached

    @cached_property
    def _flat_masks(self) -> tuple[int, ...]:
        bottom = self.closure_mask(0)
        seen = {bottom}
        layer = [bottom]
        while layer:
            nxt = []
            for f in layer:
                for g in self.covers_mask(f):
                    if g not in seen:
                        seen.add(g)
                        nxt.append(g)
            layer = nxt
        return tuple(sorted(seen, key=lambda m: (self.rank_mask(m), _mask_key(m))))

    def flats(self) -> list[frozenset[int]]:
        """All flats, ordered by rank and then lexicographically."""
        return [from_mask(m) for m in self._flat_masks]

    def hyperplanes(self) -> list[frozenset[int]]:
        r = self.full_rank
        return [from_mask(m) for m in self._flat_masks if self.rank_mask(m) == r - 1]

    @cached_property
    def _circuit_masks(self) -> tuple[int, ...]:
        # every circuit is the fundamental circuit of some element w.r.t. some basis
        found = set()
        for b in self.basis_masks:
            for e in range(self.size):
                ebit = 1 << e
                if b & ebit:
                    continue
                circ = ebit
                rest = b
                while rest:
                    low = rest & -rest
                    if (b ^ low) | ebit in self.basis_masks:
                        circ |= low
                    rest ^= low
                found.add(circ)
        return tuple(sorted(found, key=lambda m: (_popcount(m), _mask_key(m))))

    def circuits(self) -> list[frozenset[int]]:
        """All circuits, ordered by size and then lexicographically."""
        return [from_mask(m) for m in self._circuit_masks]

    # -- loops, coloops, duality, minors ------------------------------------

    def is_loop(self, e: int) -> bool:
        self._check_element(e)
        return all(not b >> e & 1 for b in self.basis_masks)

    def is_coloop(self, e: int) -> bool:
        self._check_element(e)
        return all(b >> e & 1 for b in self.basis_masks)

    def loops(self) -> frozenset[int]:
        return self.closure(())

    def dual(self) -> "Matroid":
        full = self.ground_mask
        return Matroid(self.size, (full ^ b for b in self.basis_masks))

    def relabel(self, mapping: dict[int, int]) -> "Matroid":
        """Image of this matroid under a bijection ``old -> new`` onto 0..n."""
        if sorted(mapping) != list(range(self.size)) or sorted(
            mapping.values()
        ) != list(range(self.size)):
            raise InvalidElement("relabeling must be a permutation of the ground set")
        return Matroid(
            self.size,
            (to_mask(mapping[i] for i in from_mask(b)) for b in self.basis_masks),
        )

    def _drop(self, e: int, masks: Iterable[int]) -> tuple["Matroid", dict[int, int]]:
        mapping = {i: (i if i < e else i - 1) for i in range(self.size) if i != e}
        low = (1 << e) - 1
        new = {(b & low) | ((b >> (e + 1)) << e) for b in masks}
        return Matroid(self.size - 1, new), mapping

    def contract(self, e: int) -> tuple["Matroid", dict[int, int]]:
        """Contraction ``M/e`` relabeled order-preservingly onto 0..n-1.

        Returns the minor together with the ``old -> new`` label map. Contracting
        a loop is the same as deleting it.
        """
        self._check_element(e)
        if self.is_loop(e):
            return self.delete(e)
        bit = 1 << e
        return self._drop(e, (b for b in self.basis_masks if b & bit))

    def delete(self, e: int) -> tuple["Matroid", dict[int, int]]:
        """Deletion ``M - e`` relabeled order-preservingly onto 0..n-1."""
        self._check_element(e)
        bit = 1 << e
        if self.is_coloop(e):
            return self._drop(e, self.basis_masks)
        return self._drop(e, (b for b in self.basis_masks if not b & bit))


def _mask_key(mask: int) -> tuple[int, ...]:
    return tuple(sorted(from_mask(mask)))


# -- constructors -------------------------------------------------------------

def from_bases(n: int, bases: Iterable[Iterable[int]], check: bool = True) -> Matroid:
    """Matroid on ``{0..n}`` with the given bases.

    The exchange axiom is checked exhaustively unless ``check`` is false.
    """
    if n < 0:
        raise InputError("n must be non-negative")
    size = n + 1
    if size > HARD_MAX:
        raise InputError(f"ground sets larger than {HARD_MAX} are not supported")
    masks = set()
    for b in bases:
        b = list(b)
        if any((not isinstance(i, int)) or i < 0 or i > n for i in b):
            raise InvalidElement(f"basis {b} is not a subset of 0..{n}")
        if len(set(b)) != len(b):
            raise InputError(f"basis {b} repeats an element")
        masks.add(to_mask(b))
    if not masks:
        raise EmptyBases("a matroid needs at least one basis")
    if len({_popcount(m) for m in masks}) != 1:
        raise UnequalCardinality("bases must all have the same size")
    if check:
        _check_exchange(masks)
    return Matroid(size, masks)


def _check_exchange(masks: set[int]) -> None:
    for a in masks:
        for b in masks:
            only_a = a & ~b
            only_b = b & ~a
            while only_a:
                abit = only_a & -only_a
                only_a ^= abit
                rest = only_b
                ok = False
                while rest:
                    bbit = rest & -rest
                    rest ^= bbit
                    if (a ^ abit) | bbit in masks:
                        ok = True
                        break
                if not ok:
                    raise ExchangeAxiomViolated(
                        from_mask(a), from_mask(b), abit.bit_length() - 1
                    )


def uniform(r: int, n_plus_1: int) -> Matroid:
    """The uniform matroid U_{r, n+1}: every r-subset is a basis."""
    if n_plus_1 < 0 or not 0 <= r <= n_plus_1:
        raise InvalidRank(f"need 0 <= r <= n+1, got r={r}, n+1={n_plus_1}")
    if n_plus_1 == 0:
        raise InputError("the ground set must be nonempty")
    if n_plus_1 > HARD_MAX:
        raise InputError(f"ground sets larger than {HARD_MAX} are not supported")
    return Matroid(n_plus_1, (to_mask(c) for c in combinations(range(n_plus_1), r)))


def _find(parent: list[int], v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def _is_forest(num_vertices: int, edges: list[tuple[int, int]]) -> bool:
    parent = list(range(num_vertices))
    for u, v in edges:
        ru, rv = _find(parent, u), _find(parent, v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def graphic(num_vertices: int, edges: list[tuple[int, int]]) -> Matroid:
    """Cycle matroid of a multigraph; edge ``i`` of the list is element ``i``.

    Loops and parallel edges are allowed. Bases are the maximal spanning forests.
    """
    edges = [tuple(e) for e in edges]
    if not edges:
        raise InputError("a graphic matroid needs at least one edge")
    for u, v in edges:
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise InvalidVertexIndex(f"edge {(u, v)} uses a vertex outside 0..{num_vertices - 1}")
    parent = list(range(num_vertices))
    rank = 0
    for u, v in edges:
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[ru] = rv
            rank += 1
    bases = [
        c
        for c in combinations(range(len(edges)), rank)
        if _is_forest(num_vertices, [edges[i] for i in c])
    ]
    return from_bases(len(edges) - 1, bases, check=False)


def special_first(size: int, e: int) -> dict[int, int]:
    """Relabeling ``old -> new`` that sends ``e`` to 0 and keeps the others in order."""
    if not 0 <= e < size:
        raise InvalidElement(f"element {e} not in ground set 0..{size - 1}")
    mapping = {e: 0}
    nxt = 1
    for i in range(size):
        if i != e:
            mapping[i] = nxt
            nxt += 1
    return mapping
