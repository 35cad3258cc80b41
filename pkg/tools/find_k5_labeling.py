"""Search for edge labelings of K5 with prescribed beta-nbc bases and flags.

Target data: beta-nbc bases 0256 0257 0259 0368 0378 0379; F_M(0257) =
7 < 57 < 2457 < E; F_N(134689) = 9 < 89 < 689 < 46789 < 346789 < [9].
By symmetry edge 7 can be fixed to (0,1) and edge 5 to (2,3).
"""

from itertools import combinations, permutations

from tropcrit.bergman import AffineMatroid
from tropcrit.critical import coflag_of_basis
from tropcrit.invariants import bnbc_bases, flag_of_basis
from tropcrit.matroid import graphic

TARGET_BNBC = [{0, 2, 5, 6}, {0, 2, 5, 7}, {0, 2, 5, 9}, {0, 3, 6, 8}, {0, 3, 7, 8}, {0, 3, 7, 9}]
TARGET_F = [set(), {7}, {5, 7}, {2, 4, 5, 7}, set(range(10))]
TARGET_G = [set(), {9}, {8, 9}, {6, 8, 9}, {4, 6, 7, 8, 9}, {3, 4, 6, 7, 8, 9}, set(range(1, 10))]


def main():
    k5 = list(combinations(range(5), 2))
    rest_edges = [e for e in k5 if e not in [(0, 1), (2, 3)]]
    rest_labels = [0, 1, 2, 3, 4, 6, 8, 9]
    hits = []
    for perm in permutations(rest_labels):
        edges = [None] * 10
        edges[7], edges[5] = (0, 1), (2, 3)
        for lab, e in zip(perm, rest_edges):
            edges[lab] = e
        # cheap filter: {2,4,5,7} must be a triangle plus a disjoint edge
        verts = [set(edges[i]) for i in (2, 4, 5, 7)]
        if len(set().union(*verts)) != 5:
            continue
        M = graphic(5, edges)
        if not M.is_basis({0, 2, 5, 7}):
            continue
        if [set(f) for f in flag_of_basis(M, {0, 2, 5, 7}).flats] != TARGET_F:
            continue
        if sorted(map(sorted, bnbc_bases(M))) != sorted(map(sorted, TARGET_BNBC)):
            continue
        A = AffineMatroid(M, 0)
        if [set(g) for g in coflag_of_basis(A, {0, 2, 5, 7}).flats] != TARGET_G:
            continue
        hits.append(edges)
    print(len(hits), "labelings match")
    for h in hits:
        print(h)


if __name__ == "__main__":
    main()
