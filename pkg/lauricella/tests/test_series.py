# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

import numpy as np
from numpy.testing import assert_allclose
from pytest import mark, raises

from lauricella.exceptions import DimensionError, DomainGuardError, InputError
from lauricella.models.lauricella_kind import (
    KIND_TAGS,
    LauricellaKind,
    MultiIndex,
    ParameterSet,
    Point,
)
from lauricella.models.matrix_core import ComplexMatrix, ToleranceConfig
from lauricella.models.series import (
    SeriesConfig,
    coefficient,
    evaluate,
    evaluate_shifted,
    total_degree_shell,
)

from .oracles import SMALL_POINT, commuting_params, scalar_params, scalar_series

CFG = SeriesConfig()
TOL = ToleranceConfig()

REAL_A = (0.7, 1.3, 0.45)
REAL_B = (1.1, 0.6, 1.8)
REAL_C = (1.9, 2.6, 1.35)

NATIVE_TAGS = [tag for tag in KIND_TAGS if tag not in ("F1", "F2", "F5", "F9")]


def _real_params(kind):
    return ParameterSet.scalars(
        REAL_A[: kind.group_size("a")],
        REAL_B[: kind.group_size("b")],
        REAL_C[: kind.group_size("c")],
    )


def test_shell_enumeration():
    shell = total_degree_shell(3, 4)
    assert len(shell) == 15
    assert set(shell.sum(axis=1)) == {4}
    assert len({tuple(row) for row in shell}) == 15


@mark.parametrize("tag", ["GA", "GB", "GC", "GD", "F3", "F4", "F13"])
def test_origin_gives_identity(tag):
    kind = LauricellaKind(tag)
    params = commuting_params(kind, seed=3)
    result = evaluate(kind, params, (0, 0, 0), CFG, TOL)
    assert result.value.allclose(ComplexMatrix.identity(2), atol=0.0)
    assert result.shells_used == 1
    assert result.converged


def test_single_variable_binomial():
    # a = c reduces GA to (1 - x)^-b
    kind = LauricellaKind("GA", arity=1)
    params = ParameterSet.scalars([1.3], [0.7], [1.3])
    result = evaluate(kind, params, (0.25,), CFG, TOL)
    assert_allclose(result.value.entries[0, 0], 0.75 ** -0.7, rtol=1e-12)


def test_gd_product_formula():
    # a = c turns GD into prod_j (1 - x_j)^-b_j
    kind = LauricellaKind("GD", arity=2)
    params = ParameterSet.scalars([1.6], [0.4, 1.2], [1.6])
    x = (0.1, -0.2)
    result = evaluate(kind, params, x, CFG, TOL)
    expected = 0.9 ** -0.4 * 1.2 ** -1.2
    assert_allclose(result.value.entries[0, 0], expected, rtol=1e-12)


def test_matrix_single_variable_binomial():
    # commuting A = C gives (1 - x)^-B on the eigenvalues of B
    kind = LauricellaKind("GA", arity=1)
    similarity = np.array([[1.0, 0.4], [-0.2, 1.0]])
    inverse = np.linalg.inv(similarity)
    a = ComplexMatrix(similarity @ np.diag([1.2, 2.1]) @ inverse)
    b = ComplexMatrix(similarity @ np.diag([0.6, 1.4]) @ inverse)
    result = evaluate(kind, ParameterSet([a], [b], [a]), (0.3,), CFG, TOL)
    expected = similarity @ np.diag(0.7 ** -np.array([0.6, 1.4])) @ inverse
    assert_allclose(result.value.entries, expected, atol=1e-12)


def test_generic_coefficient():
    kind = LauricellaKind("GA", arity=2)
    params = ParameterSet.scalars([1.0], [1.0, 1.0], [1.0, 1.0])
    assert coefficient(kind, params, (1, 1), TOL).entries[0, 0] == 2


def test_three_variable_coefficient():
    kind = LauricellaKind("F3")
    params = _real_params(kind)
    a, b, c = REAL_A, REAL_B, REAL_C
    # m = (0, 1, 1): (A_2)_2 (B_1)_1 (B_2)_1 / ((C_2)_1 (C_3)_1)
    expected = a[1] * (a[1] + 1) * b[0] * b[1] / (c[1] * c[2])
    value = coefficient(kind, params, (0, 1, 1), TOL).entries[0, 0]
    assert_allclose(value, expected, rtol=1e-14)


@mark.parametrize("tag", NATIVE_TAGS)
def test_scalar_series_matches_term_by_term_sum(tag):
    kind = LauricellaKind(tag)
    params = _real_params(kind)
    result = evaluate(kind, params, SMALL_POINT, CFG, TOL)
    expected = scalar_series(
        tag,
        REAL_A[: kind.group_size("a")],
        REAL_B[: kind.group_size("b")],
        REAL_C[: kind.group_size("c")],
        SMALL_POINT,
    )
    assert result.converged
    assert_allclose(result.value.entries[0, 0], expected, rtol=1e-12)


@mark.parametrize("tag", NATIVE_TAGS)
def test_random_points_match_term_by_term_sum(tag):
    kind = LauricellaKind(tag)
    params = _real_params(kind)
    groups = (
        REAL_A[: kind.group_size("a")],
        REAL_B[: kind.group_size("b")],
        REAL_C[: kind.group_size("c")],
    )
    rng = np.random.default_rng(sum(map(ord, tag)))
    for _point in range(20):
        direction = rng.uniform(0.2, 1.0, 3) * np.exp(2j * np.pi * rng.random(3))
        # growth rate 0.1 per shell keeps the reference sum short
        x = direction * np.exp(np.log(0.1) - kind.guard_value(direction))
        result = evaluate(kind, params, tuple(x), CFG, TOL)
        expected = scalar_series(tag, *groups, tuple(x), degree=22)
        assert_allclose(result.value.entries[0, 0], expected, rtol=1e-12)


@mark.parametrize("tag", ["GA", "GB", "GC", "GD"])
def test_generic_kinds_at_two_variables(tag):
    kind = LauricellaKind(tag, arity=2)
    params = _real_params(kind)
    x = (0.05, -0.04j)
    result = evaluate(kind, params, x, CFG, TOL)
    expected = scalar_series(
        tag,
        REAL_A[: kind.group_size("a")],
        REAL_B[: kind.group_size("b")],
        REAL_C[: kind.group_size("c")],
        x,
    )
    assert_allclose(result.value.entries[0, 0], expected, rtol=1e-12)


@mark.parametrize(
    "alias, generic", [("F1", "GA"), ("F2", "GB"), ("F5", "GC"), ("F9", "GD")]
)
def test_aliases_share_the_generic_code_path(alias, generic):
    assert LauricellaKind(alias) == LauricellaKind(generic, arity=3)
    params = commuting_params(LauricellaKind(generic), seed=11)
    first = evaluate(LauricellaKind(alias), params, SMALL_POINT, CFG, TOL)
    second = evaluate(LauricellaKind(generic), params, SMALL_POINT, CFG, TOL)
    assert np.array_equal(first.value.entries, second.value.entries)


@mark.parametrize("tag, groups", [("GA", "bc"), ("GB", "ab"), ("GC", "c"), ("GD", "b")])
def test_permuting_variables(tag, groups):
    kind = LauricellaKind(tag, arity=3)
    params = commuting_params(kind, seed=5)
    order = (2, 0, 1)
    lists = {group: list(params.group(group)) for group in "abc"}
    for group in groups:
        lists[group] = [lists[group][i] for i in order]
    permuted = ParameterSet(lists["a"], lists["b"], lists["c"])
    x = Point(SMALL_POINT)
    moved = Point(tuple(x[i] for i in order))
    first = evaluate(kind, params, x, CFG, TOL).value
    second = evaluate(kind, permuted, moved, CFG, TOL).value
    assert first.allclose(second, atol=1e-12)


def test_shifted_evaluation():
    kind = LauricellaKind("F4")
    params = scalar_params(kind)
    shifts = [("A_1", 2), ("C_2", -1)]
    shifted = evaluate_shifted(kind, params, shifts, SMALL_POINT, CFG, TOL)
    manual = evaluate(
        kind, params.with_shifts(kind, shifts), SMALL_POINT, CFG, TOL
    )
    assert shifted.value.allclose(manual.value, atol=0.0)


def test_shift_of_unknown_parameter():
    kind = LauricellaKind("F4")
    with raises(InputError, match="no parameter 'A_2'"):
        evaluate_shifted(kind, scalar_params(kind), [("A_2", 1)], SMALL_POINT, CFG, TOL)


def test_guard_region():
    kind = LauricellaKind("GA", arity=2)
    params = scalar_params(kind)
    with raises(DomainGuardError, match="guard region"):
        evaluate(kind, params, (0.3, 0.3), CFG, TOL)
    with raises(DomainGuardError):
        evaluate(kind, params, (0.2, 0.2), SeriesConfig(domain_guard=0.5), TOL)


def test_guard_is_homogeneous():
    for tag in ("GC", "F4", "F7"):
        kind = LauricellaKind(tag)
        base = kind.guard_value(SMALL_POINT)
        scaled = kind.guard_value(Point(SMALL_POINT).scaled(0.5).coords)
        assert_allclose(scaled, base + np.log(0.5), atol=1e-12)


def test_truncation_is_reported():
    kind = LauricellaKind("GB", arity=2)
    params = scalar_params(kind)
    result = evaluate(kind, params, (0.45, 0.45), SeriesConfig(max_degree=5), TOL)
    assert not result.converged
    assert result.shells_used == 6
    assert result.last_shell_norm > 0


def test_quiet_shell_at_the_degree_cap_counts_as_converged():
    kind = LauricellaKind("GA", arity=2)
    cfg = SeriesConfig(max_degree=1)
    result = evaluate(kind, scalar_params(kind), (0, 0), cfg, TOL)
    assert result.converged
    assert result.last_shell_norm == 0.0
    assert result.shells_used == 1


@mark.parametrize("max_degree", [1, 2, 3, 8, 64])
def test_converged_flag_follows_the_last_shell(max_degree):
    kind = LauricellaKind("GB", arity=2)
    cfg = SeriesConfig(max_degree=max_degree)
    for x in ((0.0, 1e-9), (0.05, -0.04j), (0.3, 0.2)):
        result = evaluate(kind, scalar_params(kind), x, cfg, TOL)
        assert result.converged == (result.last_shell_norm <= cfg.term_tol)


def test_arity_and_group_sizes_are_checked():
    kind = LauricellaKind("GD", arity=3)
    with raises(DimensionError, match="takes 3 variables"):
        evaluate(kind, scalar_params(kind), (0.1, 0.1), CFG, TOL)
    params = ParameterSet.scalars([1.0], [1.0, 1.0], [1.0])
    with raises(DimensionError, match="B-group"):
        evaluate(kind, params, SMALL_POINT, CFG, TOL)
    with raises(DimensionError, match="at least one matrix"):
        ParameterSet([], [], [])


def test_partial_sums_of_a_multi_index():
    m = MultiIndex((2, 0, 3))
    assert [m.partial_sum(j) for j in range(4)] == [0, 2, 2, 5]
    assert m.degree == 5
    with raises(InputError):
        MultiIndex((1, -1))


def test_unknown_kind():
    with raises(InputError, match="Unknown function kind"):
        LauricellaKind("F15")
    with raises(InputError, match="three variable"):
        LauricellaKind("F7", arity=2)
