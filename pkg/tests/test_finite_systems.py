"""Construction of the finite tables and the exhaustive checkers."""

import random
from fractions import Fraction
from itertools import product

import pytest

from golden_tables import golden_row, golden_tensor
from hnskit import (
    FiniteHNS,
    build_quotient_system,
    check_algebra_laws,
    check_structure_conditions,
    gamma_convolve,
    hnum_multiply,
    involution_index,
    is_canonical,
    multiply_basis,
    project_element,
    project_index,
)

F = Fraction
H = F(1, 2)


@pytest.mark.parametrize("dim", [2, 3, 4, 5, 6])
def test_golden_tables(dim):
    assert build_quotient_system(dim) == FiniteHNS(dim, golden_tensor(dim))


def test_trivial_system():
    g1 = build_quotient_system(1)
    assert g1.dimension == 1
    assert multiply_basis(g1, 1, 1) == (F(1),)


def test_build_rejects_nonpositive_dimension():
    with pytest.raises(ValueError):
        build_quotient_system(0)
    with pytest.raises(ValueError):
        build_quotient_system(-2)


def test_tensor_shape_validation():
    with pytest.raises(ValueError):
        FiniteHNS(2, [[[1, 0], [0, 1]]])  # one plane short
    with pytest.raises(ValueError):
        FiniteHNS(2, [[[1, 0], [0, 1]], [[0, 1]]])


def test_project_index():
    assert project_index(0, 4) == 1
    assert project_index(7, 4) == 4
    assert project_index(6, 3) == 1
    with pytest.raises(ValueError):
        project_index(-1, 4)
    with pytest.raises(ValueError):
        project_index(2, 0)


def test_project_element():
    from hnskit import GammaElement

    x = project_element(GammaElement({0: 1}), 3)
    assert x.coeffs == (F(1), F(0), F(0))
    x = project_element(GammaElement({1: H, 4: H}), 3)
    assert x.coeffs == (F(0), F(1), F(0))
    x = project_element(GammaElement({2: 1, 5: 1}), 4)
    assert x.coeffs == (F(0), F(1), F(1), F(0))
    assert x.system == build_quotient_system(4)


def test_multiply_basis():
    g3 = build_quotient_system(3)
    assert multiply_basis(g3, 2, 3) == (H, H, F(0))
    g6 = build_quotient_system(6)
    assert multiply_basis(g6, 1, 4) == g6.unit_row(4)
    assert multiply_basis(g6, 2, 6) == (H, F(0), F(0), F(0), H, F(0))
    with pytest.raises(ValueError):
        multiply_basis(g3, 0, 1)
    with pytest.raises(ValueError):
        multiply_basis(g3, 1, 4)


def test_canonicity_boundary():
    for dim in range(1, 13):
        assert is_canonical(build_quotient_system(dim)) == (dim <= 2)


def test_is_canonical_accepts_signed_units():
    # a complex-numbers style table: e2*e2 = -e1 is still canonical
    sys = FiniteHNS(2, [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]])
    assert is_canonical(sys)


def test_involution_index():
    assert involution_index(1, 5, "reflection") == 1
    assert involution_index(2, 5, "reflection") == 5
    assert involution_index(3, 4, "identity") == 3
    with pytest.raises(ValueError):
        involution_index(0, 5, "identity")
    with pytest.raises(ValueError):
        involution_index(2, 5, "mirror")


@pytest.mark.parametrize("dim", range(1, 13))
def test_reflection_is_an_involution_fixing_unit(dim):
    images = [involution_index(i, dim, "reflection") for i in range(1, dim + 1)]
    assert sorted(images) == list(range(1, dim + 1))
    assert images[0] == 1
    for i in range(1, dim + 1):
        assert involution_index(images[i - 1], dim, "reflection") == i


def _expected_condition_witnesses(dim, star):
    """Independent rescan of the transcription table."""
    expected = []
    for i, j, k in product(range(1, dim + 1), repeat=3):
        lhs = golden_row(dim, i, j)[k - 1]
        rhs = golden_row(dim, k, star[i - 1])[j - 1]
        if lhs != rhs:
            expected.append((i, j, k, lhs, rhs))
    return expected


@pytest.mark.parametrize("choice", ["identity", "reflection"])
def test_condition_report_on_g3(choice):
    report = check_structure_conditions(build_quotient_system(3), choice)
    assert report.positivity_holds
    assert report.unit_diagonal_holds
    assert not report.adjoint_symmetry_holds
    star = [involution_index(i, 3, choice) for i in range(1, 4)]
    assert list(report.failure_witnesses) == _expected_condition_witnesses(3, star)


def test_condition_report_witness_221():
    report = check_structure_conditions(build_quotient_system(3), "identity")
    assert (2, 2, 1, H, F(1)) in report.failure_witnesses


def test_condition_report_clean_table():
    report = check_structure_conditions(build_quotient_system(2), "identity")
    assert report.positivity_holds
    assert report.unit_diagonal_holds
    assert report.adjoint_symmetry_holds
    assert report.failure_witnesses == ()


def test_condition_report_flags_negative_entry():
    sys = FiniteHNS(2, [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]])
    report = check_structure_conditions(sys, "identity")
    assert not report.positivity_holds
    assert (2, 2, 1, F(-1), F(0)) in report.failure_witnesses


@pytest.mark.parametrize("dim", range(1, 13))
def test_laws_unital_commutative(dim):
    report = check_algebra_laws(build_quotient_system(dim))
    assert report.unital
    assert report.commutative


def test_laws_associative_boundary():
    # the collapsed tables stop being associative as soon as the two
    # product terms can land in genuinely different classes
    for dim in range(1, 13):
        report = check_algebra_laws(build_quotient_system(dim))
        assert report.associative == (dim <= 2), dim


def test_associativity_witness_is_genuine():
    report = check_algebra_laws(build_quotient_system(3))
    i, j, k, s = report.associativity_witnesses[0].indices
    C = golden_tensor(3)
    lhs = sum(C[i - 1][j - 1][r] * C[r][k - 1][s - 1] for r in range(3))
    rhs = sum(C[j - 1][k - 1][r] * C[i - 1][r][s - 1] for r in range(3))
    assert lhs != rhs
    assert (lhs, rhs) == (report.associativity_witnesses[0].lhs, report.associativity_witnesses[0].rhs)


def test_laws_on_mutated_table():
    tensor = golden_tensor(3)
    tensor[1][1][0] = F(1)  # bump C[2][2][1] from 1/2 to 1
    report = check_algebra_laws(FiniteHNS(3, tensor))
    assert report.unital
    assert not report.associative
    assert report.associativity_witnesses  # concrete witness triple available


def test_laws_detect_broken_unit():
    tensor = golden_tensor(2)
    tensor[0][1][1] = F(0)  # e1*e2 no longer e2
    report = check_algebra_laws(FiniteHNS(2, tensor))
    assert not report.unital
    assert report.unit_witnesses


@pytest.mark.parametrize("dim", range(1, 13))
def test_constants_are_dyadic_and_normalized(dim):
    sys = build_quotient_system(dim)
    allowed = {F(0), H, F(1)}
    for i in range(dim):
        for j in range(dim):
            row = sys.constants[i][j]
            assert set(row) <= allowed
            assert sum(row) == 1
    for i in range(1, dim + 1):
        assert multiply_basis(sys, i, i)[0] >= H


def test_projection_homomorphism_with_reduced_support():
    # exact statement: projection intertwines the products whenever both
    # supports already lie below the modulus
    from hnskit import GammaElement

    rng = random.Random(2024)
    for _ in range(300):
        dim = rng.randint(2, 8)
        x = GammaElement({rng.randrange(dim): F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(4)})
        y = GammaElement({rng.randrange(dim): F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(4)})
        lhs = project_element(gamma_convolve(x, y), dim)
        rhs = hnum_multiply(project_element(x, dim), project_element(y, dim))
        assert lhs == rhs


def test_projection_homomorphism_fails_once_indices_wrap():
    # frozen counterexample: indices 2 and 4 against modulus 3
    from hnskit import GammaElement, gamma_delta

    lhs = project_element(gamma_convolve(gamma_delta(2), gamma_delta(4)), 3)
    rhs = hnum_multiply(project_element(gamma_delta(2), 3), project_element(gamma_delta(4), 3))
    assert lhs.coeffs == (H, F(0), H)
    assert rhs.coeffs == (H, H, F(0))
    assert lhs != rhs
