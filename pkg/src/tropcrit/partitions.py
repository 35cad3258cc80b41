"""Set partitions, their intersection graphs, and exact decompositions w = x + y.

A pair of partitions lambda of {0..n} and mu of {1..n} gives a bipartite
multigraph whose vertices are the blocks and whose edge ``e`` joins the block
of lambda containing ``e`` to the block of mu containing ``e``. When that
graph is a tree there is exactly one x constant on the blocks of lambda with
x_0 = 0 and one y constant on the blocks of mu with x + y = w, and both are
alternating sums of w along tree paths.

Vectors on {1..n} are tuples of length n: element ``i`` sits at position i-1.
All arithmetic is exact (``fractions.Fraction``).
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import GroundMismatch, InputError, NotATree, NotCyclic, NotRapidlyIncreasing


@dataclass(frozen=True)
class SetPartition:
    """Blocks of a set partition, canonically ordered by their minimum."""

    blocks: tuple[frozenset[int], ...]
    _lookup: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, blocks: Iterable[Iterable[int]]):
        fb = [frozenset(b) for b in blocks]
        if any(not b for b in fb):
            raise InputError("blocks must be nonempty")
        lookup = {}
        for i, b in enumerate(sorted(fb, key=min)):
            for e in b:
                if e in lookup:
                    raise InputError(f"element {e} appears in two blocks")
                lookup[e] = i
        object.__setattr__(self, "blocks", tuple(sorted(fb, key=min)))
        object.__setattr__(self, "_lookup", lookup)

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        """Read the compact notation ``7|5|24|013689`` or ``{6,59,2,013478}``.

        Each block is a run of single-digit elements.
        """
        body = text.strip().strip("{}")
        sep = "|" if "|" in body else ","
        blocks = [[int(ch) for ch in part.strip()] for part in body.split(sep)]
        return cls(blocks)

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(self._lookup)

    def index_of(self, e: int) -> int:
        return self._lookup[e]

    def block_of(self, e: int) -> frozenset[int]:
        return self.blocks[self._lookup[e]]

    def __len__(self):
        return len(self.blocks)

    def is_constant_on_blocks(self, values: dict[int, Fraction]) -> bool:
        for b in self.blocks:
            vals = {values[e] for e in b if e in values}
            if len(vals) > 1:
                return False
        return True

    def __str__(self):
        return "|".join(_block_name(b) for b in self.blocks)


def _block_name(block: Iterable[int]) -> str:
    items = sorted(block)
    if all(0 <= i < 10 for i in items):
        return "".join(map(str, items))
    return "{" + ",".join(map(str, items)) + "}"


class GraphClass(enum.Enum):
    HAS_CYCLE = "has_cycle"
    DISCONNECTED = "disconnected"
    TREE = "tree"


@dataclass(frozen=True)
class Classification:
    kind: GraphClass
    has_cycle: bool
    disconnected: bool


@dataclass(frozen=True)
class IntersectionGraph:
    """Bipartite multigraph on the blocks of lambda (left) and mu (right).

    Vertex ids: left block ``i`` is ``i``, right block ``j`` is ``len(left) + j``.
    ``edges`` holds ``(label, left_index, right_index)`` for labels 1..n.
    """

    left: tuple[frozenset[int], ...]
    right: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int, int], ...]
    marked: int

    @property
    def num_vertices(self) -> int:
        return len(self.left) + len(self.right)

    def endpoints(self, label: int) -> tuple[int, int]:
        _, i, j = self.edges[label - 1]
        return i, len(self.left) + j

    def vertex_block(self, v: int) -> frozenset[int]:
        if v < len(self.left):
            return self.left[v]
        return self.right[v - len(self.left)]

    def is_left(self, v: int) -> bool:
        return v < len(self.left)

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """For each vertex, its ``(edge label, neighbour)`` pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.num_vertices)]
        for label, i, j in self.edges:
            u, v = i, len(self.left) + j
            adj[u].append((label, v))
            adj[v].append((label, u))
        return adj

    def classify(self) -> Classification:
        parent = list(range(self.num_vertices))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        cycle = False
        components = self.num_vertices
        for label, i, j in self.edges:
            a, b = find(i), find(len(self.left) + j)
            if a == b:
                cycle = True
            else:
                parent[a] = b
                components -= 1
        disconnected = components > 1
        if cycle:
            kind = GraphClass.HAS_CYCLE
        elif disconnected:
            kind = GraphClass.DISCONNECTED
        else:
            kind = GraphClass.TREE
        return Classification(kind, cycle, disconnected)


def intersection_graph(lam: SetPartition, mu: SetPartition) -> IntersectionGraph:
    ground = lam.ground
    n = len(ground) - 1
    if ground != frozenset(range(n + 1)):
        raise GroundMismatch(f"lambda must partition 0..{n}")
    if mu.ground != frozenset(range(1, n + 1)):
        raise GroundMismatch(f"mu must partition 1..{n}")
    edges = tuple((e, lam.index_of(e), mu.index_of(e)) for e in range(1, n + 1))
    return IntersectionGraph(lam.blocks, mu.blocks, edges, lam.index_of(0))


def classify(graph: IntersectionGraph) -> Classification:
    return graph.classify()


@dataclass(frozen=True)
class SignedPath:
    """Edge labels e_1..e_k read with signs +, -, +, ..."""

    labels: tuple[int, ...]

    def evaluate(self, w: Sequence) -> Fraction:
        total = Fraction(0)
        for k, e in enumerate(self.labels):
            term = Fraction(w[e - 1])
            total += term if k % 2 == 0 else -term
        return total

    def __str__(self):
        if not self.labels:
            return "0"
        out = f"w{self.labels[0]}"
        for k, e in enumerate(self.labels[1:], start=1):
            out += f" {'-' if k % 2 else '+'} w{e}"
        return out


@dataclass(frozen=True)
class TreeSolution:
    """The unique decomposition w = x + y for an arboreal pair.

    ``x`` and ``y`` are indexed by 1..n (x_0 = 0 is implicit). The block maps
    carry the value and the signed path of every vertex of the tree.
    """

    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]
    x_blocks: dict
    y_blocks: dict
    x_paths: dict
    y_paths: dict

    @property
    def x_full(self) -> tuple[Fraction, ...]:
        return (Fraction(0),) + self.x


def _as_fractions(w: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in w)


def tree_paths(graph: IntersectionGraph) -> list[tuple[int, ...]]:
    """For each vertex, the edge labels of its tree path to the marked vertex."""
    adj = graph.adjacency()
    paths: list[Optional[tuple[int, ...]]] = [None] * graph.num_vertices
    paths[graph.marked] = ()
    queue = deque([graph.marked])
    while queue:
        u = queue.popleft()
        for label, v in adj[u]:
            if paths[v] is None:
                paths[v] = (label,) + paths[u]
                queue.append(v)
    return paths  # type: ignore[return-value]


def solve_tree(lam: SetPartition, mu: SetPartition, w: Sequence) -> TreeSolution:
    """Solve x + y = w with x constant on lambda, y constant on mu and x_0 = 0."""
    graph = intersection_graph(lam, mu)
    n = len(graph.edges)
    if len(w) != n:
        raise InputError(f"w must have {n} entries, got {len(w)}")
    if graph.classify().kind is not GraphClass.TREE:
        raise NotATree(f"{lam} and {mu} do not form an arboreal pair")
    w = _as_fractions(w)
    paths = tree_paths(graph)
    x_blocks, y_blocks, x_paths, y_paths = {}, {}, {}, {}
    for v, labels in enumerate(paths):
        sp = SignedPath(labels)
        block = graph.vertex_block(v)
        if graph.is_left(v):
            x_paths[block] = sp
            x_blocks[block] = sp.evaluate(w)
        else:
            y_paths[block] = sp
            y_blocks[block] = sp.evaluate(w)
    x = tuple(x_blocks[lam.block_of(e)] for e in range(1, n + 1))
    y = tuple(y_blocks[mu.block_of(e)] for e in range(1, n + 1))
    return TreeSolution(x, y, x_blocks, y_blocks, x_paths, y_paths)


@dataclass(frozen=True)
class CycleWitness:
    """A cycle i_1 i_2 ... i_2k (starting at a lambda block) and its alternating sum."""

    labels: tuple[int, ...]
    value: Fraction


def _cycle_through(graph: IntersectionGraph, tree_adj, label: int) -> list[tuple[int, int]]:
    """Walk of the cycle closed by non-tree edge ``label``, as (label, from-vertex)."""
    a, b = graph.endpoints(label)
    prev = {b: None}
    queue = deque([b])
    while queue:
        u = queue.popleft()
        if u == a:
            break
        for lab, v in tree_adj[u]:
            if v not in prev:
                prev[v] = (lab, u)
                queue.append(v)
    # tree path b -> a, then the closing edge a -> b
    back = []
    v = a
    while prev[v] is not None:
        lab, u = prev[v]
        back.append((lab, u))
        v = u
    walk = list(reversed(back)) + [(label, a)]
    # rotate to start at a left vertex
    if not graph.is_left(walk[0][1]):
        walk = walk[1:] + walk[:1]
    return walk


def generic_infeasibility_witness(
    lam: SetPartition, mu: SetPartition, w: Sequence
) -> Optional[CycleWitness]:
    """A cycle whose alternating w-sum is nonzero, or None if all such sums vanish.

    A nonzero sum certifies that no decomposition exists for this w. Only the
    fundamental cycles of a spanning forest are inspected: the alternating sum
    is linear on the cycle space, so if it vanishes on them it vanishes on all.
    """
    graph = intersection_graph(lam, mu)
    if not graph.classify().has_cycle:
        raise NotCyclic(f"the intersection graph of {lam} and {mu} has no cycle")
    w = _as_fractions(w)
    parent = list(range(graph.num_vertices))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    tree_adj: list[list[tuple[int, int]]] = [[] for _ in range(graph.num_vertices)]
    closing = []
    for label, i, j in graph.edges:
        u, v = i, len(graph.left) + j
        ru, rv = find(u), find(v)
        if ru == rv:
            closing.append(label)
        else:
            parent[ru] = rv
            tree_adj[u].append((label, v))
            tree_adj[v].append((label, u))
    for label in closing:
        walk = _cycle_through(graph, tree_adj, label)
        total = Fraction(0)
        for lab, start in walk:
            total += w[lab - 1] if graph.is_left(start) else -w[lab - 1]
        if total != 0:
            return CycleWitness(tuple(lab for lab, _ in walk), total)
    return None


def is_rapidly_increasing(w: Sequence) -> bool:
    """w_1 > 0 and w_{i+1} > 3 w_i for every consecutive pair."""
    w = _as_fractions(w)
    if not w:
        return True
    if w[0] <= 0:
        return False
    return all(b > 3 * a for a, b in zip(w, w[1:]))


def near_index(w: Sequence, v) -> Optional[int]:
    """The 1-based i with |v - w_i| <= w_1 + ... + w_{i-1}, if any."""
    w = _as_fractions(w)
    if not is_rapidly_increasing(w):
        raise NotRapidlyIncreasing("near_index needs a rapidly increasing vector")
    v = Fraction(v)
    below = Fraction(0)
    for i, wi in enumerate(w, start=1):
        if wi - below <= v <= wi + below:
            return i
        below += wi
    return None


def powers_of_ten(n: int) -> tuple[Fraction, ...]:
    """The canonical rapidly increasing vector (1, 10, ..., 10^(n-1))."""
    return tuple(Fraction(10**i) for i in range(n))
