import random

import pytest

from hochschild.algebra import (
    Algebra,
    center,
    change_basis,
    check_associativity,
    chi_invariant,
    descending_series,
    is_commutative,
    is_nilpotent,
    multiply,
)
from hochschild.catalog import CHI_LAMBDA, CHI_MU, instantiate
from hochschild.linalg import Matrix, span
from hochschild.scalar import ONE, ZERO, Scalar

from conftest import RUNS, run_id
from randalg import random_invertible


def e(k, n=5):
    return tuple(ONE if t == k - 1 else ZERO for t in range(n))


def vec(*coords):
    return tuple(Scalar(x) for x in coords)


def test_multiply_examples():
    lam1 = instantiate("lambda_1")
    assert multiply(lam1, e(1), e(1)) == e(2)
    lam5 = instantiate("lambda_5")
    assert multiply(lam5, e(4), e(5)) == e(3)
    assert multiply(lam5, e(5), e(4)) == tuple(-x for x in e(3))
    assert multiply(lam1, (ZERO,) * 5, e(3)) == (ZERO,) * 5
    with pytest.raises(ValueError):
        multiply(lam1, e(1, 4), e(1))


def test_associativity_examples():
    assert check_associativity(Algebra.zero(5)).ok
    assert check_associativity(Algebra.from_products("k", 1, {(1, 1): {1: 1}})).ok
    bad = Algebra.from_products("bad", 2, {(1, 1): {2: 1}, (2, 1): {1: 1}})
    rep = check_associativity(bad)
    assert not rep.ok
    # (e1 e1) e1 = e2 e1 = e1, e1 (e1 e1) = e1 e2 = 0
    assert rep.first() == (1, 1, 1, vec(1, 0), vec(0, 0))


@pytest.mark.parametrize("run", RUNS, ids=run_id)
def test_catalog_entry_is_associative(run):
    assert check_associativity(instantiate(*run)).ok


def test_descending_series_examples():
    assert [s.dim for s in descending_series(instantiate("lambda_1"))] == [5, 2, 1, 0]
    assert [s.dim for s in descending_series(instantiate("mu_1"))] == [5, 3, 1, 0]
    assert [s.dim for s in descending_series(Algebra.zero(4))] == [4, 0]


def test_chi_examples():
    assert chi_invariant(instantiate("lambda_3")) == (5, 2, 1, 0, 0)
    assert chi_invariant(instantiate("mu_22", 2)) == (5, 3, 1, 0, 0)
    assert chi_invariant(Algebra.zero(5)) == (5, 0, 0, 0, 0)
    unital = Algebra.from_products("k", 1, {(1, 1): {1: 1}})
    assert chi_invariant(unital) == (1,)
    assert not is_nilpotent(unital)
    assert is_nilpotent(Algebra.zero(3))


def _two_sided_power(A, k):
    """Span of all k-fold products of basis elements (any bracketing is equal)."""
    n = A.dim
    cur = [e(i + 1, n) for i in range(n)]
    for _ in range(k - 1):
        cur = span([multiply(A, x, e(i + 1, n)) for x in cur for i in range(n)], n).basis
    return span(cur, n) if cur else span([], n)


@pytest.mark.parametrize("run", RUNS, ids=run_id)
def test_family_invariants(run):
    A = instantiate(*run)
    assert is_nilpotent(A)
    chi = CHI_LAMBDA if run[0].startswith("lambda") else CHI_MU
    assert chi_invariant(A) == chi
    # left-iterated series agrees with the two-sided power span
    for k, term in enumerate(descending_series(A), start=1):
        assert term == _two_sided_power(A, k)


def test_is_commutative_examples():
    assert is_commutative(instantiate("lambda_1"))
    assert not is_commutative(instantiate("mu_1"))
    assert is_commutative(Algebra.zero(3))


def test_center_examples():
    assert center(instantiate("lambda_5")) == span([e(1), e(2), e(3)], 5)
    assert center(instantiate("mu_3")) == span([e(3)], 5)
    lam1 = instantiate("lambda_1")
    assert center(lam1).dim == 5


@pytest.mark.parametrize("run", RUNS, ids=run_id)
def test_center_recheck(run):
    A = instantiate(*run)
    Z = center(A)
    for z in Z.basis:
        for i in range(1, 6):
            assert multiply(A, e(i), z) == multiply(A, z, e(i))
            assert Z.contains(tuple(a - b for a, b in zip(multiply(A, e(i), z), multiply(A, z, e(i)))))
    if is_commutative(A):
        assert Z.dim == 5


def test_mu7_center_excludes_e1_e4():
    # e1 e4 = e5 but e4 e1 = alpha e5, so neither e1 nor e4 is central for alpha != 1
    A = instantiate("mu_7", 2)
    assert multiply(A, e(1), e(4)) != multiply(A, e(4), e(1))
    assert center(A) == span([e(2), e(3), e(5)], 5)
    assert center(instantiate("mu_7", 1)).dim == 5


def test_elementwise_associativity():
    rng = random.Random(5)
    for name, alpha in RUNS:
        A = instantiate(name, alpha)
        for _ in range(5):
            x, y, z = (tuple(Scalar(rng.randint(-3, 3), rng.randint(-1, 1)) for _ in range(5)) for _ in range(3))
            assert multiply(A, multiply(A, x, y), z) == multiply(A, x, multiply(A, y, z))


def test_change_basis_identity_and_swap():
    lam1 = instantiate("lambda_1")
    assert change_basis(lam1, Matrix.identity(5)).same_constants(lam1)
    swap = Matrix([[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 0, 1], [0, 0, 0, 1, 0]])
    # e4 e4 = e5 e5 = e3 is symmetric in e4, e5
    assert change_basis(lam1, swap).same_constants(lam1)
    lam3 = instantiate("lambda_3")
    swapped = change_basis(lam3, swap)
    assert swapped.product_table()[(1, 5)] == {3: ONE}
    assert (1, 4) not in swapped.product_table()
    with pytest.raises(ValueError):
        change_basis(lam1, Matrix.zeros(5, 5))


def test_change_basis_chi_invariant_100():
    rng = random.Random(17)
    A = instantiate("mu_12")
    for _ in range(100):
        B = change_basis(A, random_invertible(rng, 5))
        assert check_associativity(B).ok
        assert chi_invariant(B) == CHI_MU
