from itertools import permutations

import pytest
import sympy

from tropcrit.bergman import AffineMatroid
from tropcrit.documents import load_fixture
from tropcrit.errors import GroundTooLarge, IndexOutOfRange, InvalidElement
from tropcrit.invariants import is_nbc_basis
from tropcrit.matroid import graphic, uniform
from tropcrit.taut import (
    PiecewisePolynomial,
    Polynomial,
    chern_Q,
    chern_S_dual,
    class_affine_bergman,
    class_inverted_dual,
    contraction_with_loop,
    divisibility_check,
    elementary_symmetric,
    lex_first_basis,
)


def t(nv, i, c=1):
    return Polynomial.variable(nv, i, c)


def one(nv):
    return Polynomial.constant(nv, 1)


def to_sympy(p: Polynomial):
    syms = sympy.symbols(f"t0:{p.nvars}")
    expr = sympy.Integer(0)
    for exp, c in p.terms.items():
        term = sympy.Integer(c)
        for s, k in zip(syms, exp):
            term *= s**k
        expr += term
    return sympy.expand(expr), syms


# -- polynomial arithmetic --------------------------------------------------------

def test_polynomial_arithmetic_against_sympy():
    nv = 3
    p = (t(nv, 0) + t(nv, 1, -2)) * (t(nv, 2) + one(nv))
    q = p * p - t(nv, 1)
    ep, syms = to_sympy(q)
    t0, t1, t2 = syms
    assert ep == sympy.expand(((t0 - 2 * t1) * (t2 + 1)) ** 2 - t1)
    assert str(t(2, 0) - t(2, 1)) == "t0 - t1"
    assert str(Polynomial(2)) == "0"


def test_substitute_and_divide():
    nv = 2
    p = t(nv, 0) * t(nv, 0) - t(nv, 1) * t(nv, 1)
    assert p.substitute_equal(0, 1).is_zero()
    q, rem = (t(nv, 0) * t(nv, 1) + t(nv, 1)).divmod_variable(0)
    assert q == t(nv, 1) and rem == t(nv, 1)


def test_elementary_symmetric():
    nv = 3
    vals = [t(nv, i) for i in range(3)]
    assert elementary_symmetric(vals, 0, nv) == one(nv)
    assert elementary_symmetric(vals, 2, nv) == t(nv, 0) * t(nv, 1) + t(nv, 0) * t(nv, 2) + t(nv, 1) * t(nv, 2)
    assert elementary_symmetric(vals, 4, nv).is_zero()


# -- lex-first bases ----------------------------------------------------------------

def test_lex_first_examples(u24, triangle):
    assert lex_first_basis(u24, (0, 1, 2, 3)) == {0, 1}
    assert lex_first_basis(u24, (2, 0, 3, 1)) == {0, 2}
    assert lex_first_basis(triangle, (0, 1, 2)) == {0, 1}
    with pytest.raises(InvalidElement):
        lex_first_basis(u24, (0, 1, 2))


def test_lex_first_is_nbc_in_its_order():
    M = load_fixture("K4").matroid
    for sigma in permutations(range(M.size)):
        B = lex_first_basis(M, sigma)
        assert M.is_basis(B)
        # relabel so that sigma becomes the natural order
        rank_of = {e: i for i, e in enumerate(sigma)}
        R = M.relabel(rank_of)
        assert is_nbc_basis(R, {rank_of[b] for b in B})


# -- Chern class representatives ----------------------------------------------------

def test_chern_S_dual_u12():
    M = uniform(1, 2)
    c1 = chern_S_dual(M, 1)
    assert c1[(0, 1)] == t(2, 0)
    assert c1[(1, 0)] == t(2, 1)
    assert c1.is_continuous()


def test_degree_zero_classes_are_one(u24):
    for sigma, p in chern_S_dual(u24, 0).pieces.items():
        assert p == one(4)
    for sigma, p in chern_Q(u24, 0).pieces.items():
        assert p == one(4)


def test_chern_Q_u23():
    M = uniform(2, 3)
    c = chern_Q(M, 1)
    for sigma in permutations(range(3)):
        (ell,) = set(range(3)) - lex_first_basis(M, sigma)
        assert c[sigma] == t(3, ell, -1)


def test_index_checks(u24):
    with pytest.raises(IndexOutOfRange):
        chern_S_dual(u24, 3)
    with pytest.raises(IndexOutOfRange):
        chern_Q(u24, -1)


def test_taut_ground_cap(monkeypatch):
    monkeypatch.setenv("TROPCRIT_MAX_GROUND", "3")
    with pytest.raises(GroundTooLarge):
        chern_S_dual(uniform(2, 4), 1)


def test_top_classes_are_products():
    M = load_fixture("U25").matroid
    r1, corank = M.full_rank, M.size - M.full_rank
    S = chern_S_dual(M, r1)
    Q = chern_Q(M, corank)
    for sigma in S.chambers():
        B = lex_first_basis(M, sigma)
        prod_B, prod_rest = one(5), one(5)
        for k in B:
            prod_B = prod_B * t(5, k)
        for k in set(range(5)) - B:
            prod_rest = prod_rest * t(5, k)
        assert S[sigma] == prod_B
        sign = Polynomial.constant(5, (-1) ** corank)
        assert Q[sigma] == sign * prod_rest


def test_discontinuity_is_detected():
    nv = 2
    bad = PiecewisePolynomial(2, {(0, 1): t(nv, 0), (1, 0): t(nv, 0) + one(nv)})
    assert not bad.is_continuous()
    assert bad.continuity_failures() == [((0, 1), 0)]


def test_affine_classes_u12():
    A = AffineMatroid(uniform(1, 2), 0)
    first = class_affine_bergman(A)
    assert first[(0, 1)] == t(2, 1, -1)  # B = {0}
    assert first[(1, 0)] == t(2, 0, -1)  # B = {1}
    second = class_inverted_dual(A)
    assert all(p == one(2) for p in second.pieces.values())


def test_inverted_dual_class_u23():
    M = uniform(2, 3)
    A = AffineMatroid(M, 0)
    L = contraction_with_loop(M, 0)
    assert L.is_loop(0)
    second = class_inverted_dual(A)
    for sigma in permutations(range(3)):
        (b,) = lex_first_basis(L, sigma)
        assert second[sigma] == t(3, b)


def test_divisibility_examples():
    rep = divisibility_check(AffineMatroid(uniform(1, 2), 0))
    assert rep.passed
    branches = {c.sigma: c.branch for c in rep.certificates}
    assert branches == {(1, 0): "special_not_in_basis", (0, 1): "cancellation"}
    cancel = [c for c in rep.certificates if c.branch == "cancellation"][0]
    assert cancel.quotient.is_zero()

    rep = divisibility_check(AffineMatroid(uniform(2, 3), 0))
    assert rep.passed and len(rep.certificates) == 6
    rep = divisibility_check(AffineMatroid(uniform(2, 4), 0))
    assert rep.passed and len(rep.certificates) == 24


def test_divisibility_quotients_reconstruct_product():
    A = AffineMatroid(graphic(3, [(0, 1), (1, 2), (0, 2)]), 0)
    M = A.matroid
    first = class_affine_bergman(A)
    bracket = chern_S_dual(M, M.full_rank - 1) - class_inverted_dual(A)
    for c in divisibility_check(A).certificates:
        assert t(3, 0) * c.quotient == first[c.sigma] * bracket[c.sigma]


def test_fano_classes_are_continuous():
    M = load_fixture("fano").matroid
    for j in range(M.size - M.full_rank + 1):
        assert chern_Q(M, j).is_continuous()
