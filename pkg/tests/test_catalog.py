import pytest

from hochschild.algebra import check_associativity
from hochschild.catalog import (
    CHI_LAMBDA,
    CHI_MU,
    CatalogError,
    default_bindings,
    expected_results,
    get_entry,
    instantiate,
    label_vector,
    list_entries,
    verification_runs,
)
from hochschild.cohomology import cocycle_space, is_derivation, rho_to_vector
from hochschild.linalg import Matrix, span
from hochschild.scalar import I, ONE, ZERO, Scalar


def test_entry_counts_and_order():
    names = [e.name for e in list_entries()]
    assert names[:6] == [f"lambda_{k}" for k in range(1, 7)]
    assert names[6:] == [f"mu_{k}" for k in range(1, 23)]
    assert all(e.chi_family == CHI_LAMBDA for e in list_entries()[:6])
    assert all(e.chi_family == CHI_MU for e in list_entries()[6:])


def test_parameter_specs():
    assert get_entry("mu_21").param_spec == frozenset({I, -I})
    assert get_entry("mu_21").param_description() == "alpha in {-i, i}"
    assert get_entry("mu_22").param_description() == "alpha in C"
    assert get_entry("mu_1").param_description() == "none"
    assert not get_entry("lambda_1").parameterized


def test_instantiate_examples():
    A = instantiate("mu_22", 0)
    # alpha = 0 kills every alpha-only coefficient
    assert A.product_table()[(4, 1)] == {2: ONE}
    assert A.product_table()[(4, 4)] == {5: ONE}
    assert (5, 4) not in A.product_table()
    lam6 = instantiate("lambda_6", "3/2")
    assert lam6.product_table()[(5, 5)] == {3: Scalar(3) / 2}
    assert lam6.params["alpha"] == Scalar(3) / 2
    assert instantiate("mu_21", "-i").product_table()[(5, 4)] == {3: I}


@pytest.mark.parametrize(
    "name, alpha",
    [("mu_21", 1), ("mu_21", None), ("mu_7", None), ("lambda_1", 2), ("nope", None)],
)
def test_instantiate_errors(name, alpha):
    with pytest.raises(CatalogError):
        instantiate(name, alpha)


def test_expected_examples():
    lam5 = expected_results("lambda_5")
    assert (lam5.dim_z1, lam5.dim_b1, lam5.dim_h1) == (8, 2, 6)
    mu16 = expected_results("mu_16")
    assert (mu16.dim_z1, mu16.dim_b1, mu16.dim_h1) == (6, 0, 6)
    assert expected_results("mu_4").h0_span_labels == ("e3",)
    assert expected_results("mu_7").discrepancy_flags == ("h0",)
    assert expected_results("mu_1").discrepancy_flags == ()


def test_expected_records_consistent():
    for entry in list_entries():
        rec = expected_results(entry.name)
        assert rec.dim_h1 == rec.dim_z1 - rec.dim_b1
        assert rec.h1_class_count == rec.dim_h1
        for label in rec.h0_span_labels:
            label_vector(label)


def test_default_bindings():
    assert default_bindings("lambda_1") == (None,)
    assert set(default_bindings("mu_21")) == {I, -I}
    runs = verification_runs()
    assert len(runs) == 30
    for name, alpha in runs:
        assert check_associativity(instantiate(name, alpha)).ok


def test_label_vector():
    assert label_vector("-e5") == (ZERO, ZERO, ZERO, ZERO, -ONE)
    for bad in ("e0", "e6", "x1", "e"):
        with pytest.raises(ValueError):
            label_vector(bad)


def _generators(build, nparams):
    return [build(*[ONE if k == s else ZERO for k in range(nparams)]) for s in range(nparams)]


def test_lambda2_published_derivations_span_cocycles():
    def rho(r31, r32, r33, r34, r35, r41, r51):
        h = Scalar(1) / 2
        return Matrix([
            [r33 / 3, 0, 0, 0, 0],
            [h * r32 - h * r41, 2 * r33 / 3, 0, -r51, -r41],
            [r31, r32, r33, r34, r35],
            [r41, 0, 0, 2 * r33 / 3, 0],
            [r51, 0, 0, 0, r33 / 3],
        ])

    A = instantiate("lambda_2")
    gens = _generators(rho, 7)
    assert all(is_derivation(A, g) for g in gens)
    assert span([rho_to_vector(g) for g in gens], 25) == cocycle_space(A, 1)


def _mu21_family(alpha):
    def rho(r31, r34, r35, r51, r54):
        k1 = (alpha * alpha * r51 + alpha * r35 - 3 * alpha * r51 + alpha * r54 - r35 - r54) / (2 * alpha)
        k2 = (alpha * r35 - 2 * alpha * r51 + alpha * r54 - r35 - r54) / alpha
        return Matrix([
            [0, 0, 0, 0, 0],
            [k1, 0, 0, alpha * r51 + r35, 0],
            [r31, k2, 0, r34, r35],
            [0, 0, 0, 0, 0],
            [r51, 0, 0, r54, 0],
        ])

    return _generators(rho, 5)


@pytest.mark.parametrize("alpha", [I, -I], ids=["i", "-i"])
def test_mu21_published_family_misses_one_derivation(alpha):
    A = instantiate("mu_21", alpha)
    gens = _mu21_family(alpha)
    assert all(is_derivation(A, g) for g in gens)
    published = span([rho_to_vector(g) for g in gens], 25)
    z1 = cocycle_space(A, 1)
    assert published.dim == 5 and z1.dim == 6
    assert z1.contains_subspace(published)
