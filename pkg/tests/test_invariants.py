import random
from itertools import combinations

import pytest
from hypothesis import given

import oracles
from conftest import matroids
from tropcrit.documents import load_corpus, load_fixture
from tropcrit.errors import GroundTooLarge, LoopOrColoopSpecialElement, NotABasis
from tropcrit.invariants import (
    FlagOfFlats,
    IntegerPolynomial,
    beta,
    bnbc_bases,
    char_poly,
    flag_of_basis,
    is_nbc_basis,
)
from tropcrit.matroid import from_bases, graphic, uniform


def S(text):
    return frozenset(int(c) for c in text)


def flag(*parts):
    return FlagOfFlats(tuple(S(p) for p in parts))


# -- polynomials ------------------------------------------------------------------

def test_integer_polynomial_basics():
    p = IntegerPolynomial((3, -4, 1))
    assert str(p) == "t^2 - 4t + 3"
    assert p(1) == 0 and p(3) == 0
    assert p.derivative() == IntegerPolynomial((-4, 2))
    assert IntegerPolynomial((0, 0)).is_zero()
    assert (p * IntegerPolynomial((-1, 1))).coeffs == (-3, 7, -5, 1)
    assert (p - p).is_zero()


def test_char_poly_examples(u24, triangle):
    assert char_poly(u24) == IntegerPolynomial((3, -4, 1))
    assert char_poly(graphic(2, [(0, 1), (1, 1)])).is_zero()
    assert char_poly(uniform(1, 1)) == IntegerPolynomial((-1, 1))
    assert char_poly(triangle) == IntegerPolynomial((2, -3, 1))


def test_beta_examples(u24, triangle):
    assert beta(u24) == 2
    assert beta(triangle) == 1
    assert beta(graphic(2, [(0, 1), (1, 1)])) == 0


def test_char_poly_size_cap(monkeypatch):
    monkeypatch.setenv("TROPCRIT_MAX_GROUND", "4")
    with pytest.raises(GroundTooLarge):
        char_poly(uniform(2, 5))


@given(matroids)
def test_char_poly_matches_deletion_contraction(M):
    assert list(char_poly(M).coeffs) == oracles.char_poly_deletion_contraction(M.size, M.bases)


def test_corpus_beta_values():
    for entry in load_corpus():
        M = entry.matroid
        coeffs = oracles.char_poly_deletion_contraction(M.size, M.bases)
        assert beta(M) == oracles.beta_from_coeffs(coeffs) == entry.expected["beta"], entry.name


def test_beta_is_self_dual_on_corpus():
    for entry in load_corpus():
        M = entry.matroid
        assert beta(M) == beta(M.dual()), entry.name


# -- flags and nbc ----------------------------------------------------------------

def test_flag_of_basis_examples(u24):
    assert flag_of_basis(u24, {0, 2}) == flag("", "2", "0123")
    assert flag_of_basis(uniform(3, 3), {0, 1, 2}) == flag("", "2", "12", "012")
    with pytest.raises(NotABasis):
        flag_of_basis(u24, {0})


def test_flag_of_basis_on_labeled_k5():
    M = load_fixture("K5_labeled").matroid
    assert flag_of_basis(M, S("0257")) == flag("", "7", "57", "2457", "0123456789")


@given(matroids)
def test_flag_of_basis_is_complete(M):
    if M.loops():
        return  # the empty set is not a flat, so no complete flag exists
    for B in M.bases:
        F = flag_of_basis(M, B)
        assert F.is_complete_flag_of(M)
        assert len(F.strata) == M.full_rank


def test_nbc_examples(u24):
    assert is_nbc_basis(u24, {0, 2})
    assert not is_nbc_basis(u24, {1, 2})
    with pytest.raises(NotABasis):
        is_nbc_basis(u24, {0, 1, 2})


@given(matroids)
def test_nbc_flag_criterion_matches_broken_circuits(M):
    for B in M.bases:
        assert is_nbc_basis(M, B) == oracles.nbc_by_broken_circuits(M.size, M.bases, B)


@given(matroids)
def test_lexicographically_smallest_basis_is_nbc(M):
    if M.loops():
        return
    first = min(M.bases, key=lambda b: sorted(b))
    assert is_nbc_basis(M, first)


# -- beta-nbc bases -----------------------------------------------------------------

def test_bnbc_examples(u24, triangle):
    assert bnbc_bases(u24) == [S("02"), S("03")]
    # {0,1} would contain 1, which the definition rules out; brute force agrees
    assert bnbc_bases(triangle) == [S("02")]
    assert oracles.bnbc_by_definition(3, triangle.bases) == {S("02")}
    with pytest.raises(LoopOrColoopSpecialElement):
        bnbc_bases(uniform(3, 3))


def test_bnbc_on_labeled_k5():
    M = load_fixture("K5_labeled").matroid
    expected = ["0256", "0257", "0259", "0368", "0378", "0379"]
    assert bnbc_bases(M) == [S(b) for b in expected]


@given(matroids)
def test_bnbc_matches_definition_and_counts_beta(M):
    if M.is_loop(0) or M.is_coloop(0) or M.size < 2:
        return
    found = bnbc_bases(M)
    assert set(found) == oracles.bnbc_by_definition(M.size, M.bases)
    assert len(found) == beta(M)
    for B in found:
        assert 0 in B and 1 not in B


def test_bnbc_with_noncanonical_special():
    M = load_fixture("K4").matroid
    rng = random.Random(5)
    for e in range(M.size):
        found = bnbc_bases(M, e)
        assert len(found) == beta(M)
        assert all(e in B for B in found)
    # a random relabeling keeps the count
    perm = list(range(M.size))
    rng.shuffle(perm)
    R = M.relabel(dict(enumerate(perm)))
    assert len(bnbc_bases(R, 0)) == beta(M)


def test_bnbc_brute_force_on_small_uniforms():
    for r, m in [(1, 2), (2, 3), (2, 4), (2, 5), (3, 5), (3, 6)]:
        M = from_bases(m - 1, combinations(range(m), r))
        assert set(bnbc_bases(M)) == oracles.bnbc_by_definition(M.size, M.bases)
