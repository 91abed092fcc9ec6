import pytest

from poisson_forge.division import (DivisionProblem, division_group_basis,
                                    division_group_dim,
                                    division_group_dim_via_kernel_basis,
                                    ideal_dim_binomial_print, ideal_slice_dim,
                                    lefschetz_problem, regular_sequence_check,
                                    submodule_contains, verify_division_basis)
from poisson_forge.exterior import FORM, GradedElement, de_rham
from poisson_forge.polynomials import Polynomial


def x(i):
    return Polynomial.variable(4, i)


def test_d1_vanishes(cat):
    for w in range(1, 13):
        assert division_group_dim(lefschetz_problem(1, w, cat)) == 0


def test_d2_dimensions(cat):
    for d in range(0, 11):
        dim = division_group_dim(lefschetz_problem(2, d + 2, cat))
        assert dim == 2 * (d + 1)


def test_d2_nonzero_refutes_depth_bound(cat):
    # an isolated-intersection depth of 3 would force D^2 = 0; it is not
    assert division_group_dim(lefschetz_problem(2, 2, cat)) == 2


def test_constant_coefficient_forms_divide_freely():
    dx1 = GradedElement.basis(4, FORM, (1,))
    dx2 = GradedElement.basis(4, FORM, (2,))
    for w in range(2, 8):
        prob = DivisionProblem([dx1, dx2], 2, w)
        assert division_group_dim(prob) == 0


def test_two_path_agreement(cat):
    for p, w in [(1, 3), (1, 6), (2, 2), (2, 5), (2, 8), (3, 4), (3, 6)]:
        prob = lefschetz_problem(p, w, cat)
        assert division_group_dim(prob) == \
            division_group_dim_via_kernel_basis(prob)


def test_basis_instantiation(cat):
    b0 = division_group_basis(lefschetz_problem(2, 2, cat), cat)
    assert b0 == [cat.beta1, cat.beta2]
    b1 = division_group_basis(lefschetz_problem(2, 3, cat), cat)
    assert b1 == [cat.beta2 * x(1), cat.beta2 * x(3),
                  cat.beta2 * x(2), cat.beta2 * x(4)]
    for d in range(0, 8):
        count, dim, indep, inker = verify_division_basis(
            lefschetz_problem(2, d + 2, cat), cat)
        assert count == dim == 2 * (d + 1)
        assert indep and inker
    with pytest.raises(ValueError):
        division_group_basis(lefschetz_problem(1, 3, cat), cat)


def test_relation_classes_vanish(cat):
    prob = lefschetz_problem(2, 4, cat)
    assert submodule_contains(prob, cat.beta1 * cat.f1 - cat.beta2 * cat.f2)
    assert submodule_contains(prob, cat.beta1 * cat.f2 + cat.beta2 * cat.f1)
    assert not submodule_contains(lefschetz_problem(2, 2, cat), cat.beta1)


def test_ideal_slices(cat):
    assert ideal_slice_dim(0, cat) == (0, 1)
    assert ideal_slice_dim(1, cat) == (0, 4)
    for d in range(1, 11):
        dim_j, quot = ideal_slice_dim(d, cat)
        assert quot == 2 * (d + 1)
        if d >= 2:
            assert dim_j == ideal_dim_binomial_print(d)


def test_regular_sequences(cat):
    ok, fail = regular_sequence_check(
        [x(1) * x(3) + x(2) * x(4), x(1) * x(4) - x(2) * x(3)], 8)
    assert ok and fail is None
    ok, fail = regular_sequence_check([cat.f1, cat.f2], 8)
    assert ok and fail is None
    ok, fail = regular_sequence_check([x(1), x(1)], 6)
    assert not ok and fail == (1, 0)
    with pytest.raises(ValueError):
        regular_sequence_check([x(1) + x(2) * x(3)], 4)


def test_problem_validation(cat):
    with pytest.raises(ValueError):
        DivisionProblem([], 1, 2)
    with pytest.raises(ValueError):
        DivisionProblem([cat.beta1], 1, 2)        # a 2-form cannot divide
    with pytest.raises(ValueError):
        DivisionProblem([cat.df1], 2, 1)          # weight below degree
