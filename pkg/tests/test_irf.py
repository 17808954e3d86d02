"""Tests for the face models: heights, face weights and partition functions."""
from fractions import Fraction

import numpy as np
import pytest

from elliptic_rmatrix.exceptions import AdmissibilityError, DomainError, ResourceError
from elliptic_rmatrix.irf import (
	Height,
	admissible,
	base_height,
	boltzmann_weight,
	check_star_triangle,
	face_operator,
	partition_function,
	partition_function_transfer,
	seed_configuration,
	star_triangle_heights,
	weight_index,
	weights_of_vector_rep,
	)
from elliptic_rmatrix.rmatrix import RMatrixSpec

TAU = 0.1 + 1.1j
HBAR = 0.12 + 0.03j
Z12 = 0.21 + 0.07j
Z23 = 0.13 - 0.05j


@pytest.fixture
def felder():
	return RMatrixSpec.felder(2, TAU, HBAR)


@pytest.fixture
def intermediate():
	return RMatrixSpec('intermediate', 2, 2, TAU, HBAR)


def test_height_arithmetic():
	a = Height([0, Fraction(1, 2)])
	b = Height([1, 1])
	assert a + b == Height([1, Fraction(3, 2)])
	assert b - a == Height([1, Fraction(1, 2)])
	assert 2 * a == a * 2 == Height([0, 1])
	assert list(a) == [0, Fraction(1, 2)]
	assert len(a) == 2
	assert hash(a) == hash(Height(['0', '1/2']))
	assert repr(a) == 'Height(0, 1/2)'
	np.testing.assert_allclose(a.to_complex(), [0, 0.5])


def test_height_errors():
	with pytest.raises(DomainError):
		Height([])
	with pytest.raises(DomainError):
		Height([0, 1]) + Height([0, 1, 2])
	with pytest.raises(TypeError):
		Height([0, 1]) + 1


def test_weights_of_vector_rep():
	mu = weights_of_vector_rep(3)
	assert len(mu) == 3
	assert sum(mu[1:], mu[0]) == Height([0, 0, 0])
	assert mu[0] == Height([Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3)])
	assert weight_index(mu[2]) == 2
	assert weight_index(Height([0, 0, 0])) is None
	assert base_height(3) == Height([0, Fraction(1, 3), Fraction(2, 3)])


def test_admissible():
	mu = weights_of_vector_rep(2)
	a = base_height(2)
	assert admissible(a, a + mu[0], a + mu[0] + mu[1], a + mu[1])
	assert admissible(a, a + mu[0], a + 2 * mu[0], a + mu[0])
	assert not admissible(a, a, a + mu[0], a + mu[1])


def test_face_operator_shapes(felder, intermediate):
	mu = weights_of_vector_rep(2)
	a = base_height(2)
	corners = (a, a + mu[0], a + mu[0] + mu[1], a + mu[1])
	assert face_operator(*corners, Z12, felder).shape == (1, 1)
	assert face_operator(*corners, Z12, intermediate).shape == (4, 4)
	value = boltzmann_weight(*corners, Z12, felder)
	assert value == face_operator(*corners, Z12, felder)[0, 0]


def test_face_operator_errors(felder, intermediate):
	a = base_height(2)
	with pytest.raises(AdmissibilityError):
		face_operator(a, a, a, a, Z12, felder)
	with pytest.raises(DomainError):
		boltzmann_weight(a, a, a, a, Z12, intermediate)
	with pytest.raises(DomainError):
		face_operator(a, a, a, a, Z12, felder, argument='edge')
	with pytest.raises(DomainError):
		face_operator(base_height(3), base_height(3), base_height(3), base_height(3), Z12, felder)


def test_star_triangle_heights():
	a = base_height(2)
	mu = weights_of_vector_rep(2)
	b, c, d, e, f = star_triangle_heights(a, (0, 1, 0), (1, 0, 0))
	assert f == a + mu[0]
	assert e == f + mu[1]
	assert d == e + mu[0]
	assert b == a + mu[1]
	assert c == b + mu[0]
	with pytest.raises(DomainError):
		star_triangle_heights(a, (0, 1, 0), (1, 1, 0))


@pytest.mark.parametrize('family', ['felder', 'intermediate'])
@pytest.mark.parametrize('input_steps, output_steps', [
	((0, 1, 0), (1, 0, 0)),
	((0, 1, 1), (1, 1, 0)),
	((0, 0, 1), (0, 1, 0)),
	((1, 0, 1), (1, 0, 1)),
	])
def test_star_triangle(family, input_steps, output_steps, felder, intermediate):
	spec = felder if family == 'felder' else intermediate
	a = base_height(2)
	b, c, d, e, f = star_triangle_heights(a, input_steps, output_steps)
	report = check_star_triangle(a, b, c, d, e, f, Z12, Z12 + Z23, Z23, spec)
	assert not report.vacuous
	assert report.passed, report.max_abs
	assert report.notes['lhs_terms'] + report.notes['rhs_terms'] > 0


def test_star_triangle_vacuous(felder):
	a = base_height(2)
	far = a + 10 * weights_of_vector_rep(2)[0]
	report = check_star_triangle(a, far, far, far, far, far, Z12, Z12 + Z23, Z23, felder)
	assert report.vacuous
	assert not report.passed
	assert report.notes['lhs_terms'] == report.notes['rhs_terms'] == 0


def test_seed_configuration():
	grid = seed_configuration(2, 3)
	assert len(grid) == 3
	assert len(grid[0]) == 4
	mu = weights_of_vector_rep(2)
	assert grid[1][2] - grid[0][0] == mu[0] + 2 * mu[1]
	with pytest.raises(DomainError):
		seed_configuration(1, 1, base=[0])


def test_partition_function_single_face(felder):
	grid = seed_configuration(1, 1)
	expected = boltzmann_weight(grid[0][0], grid[0][1], grid[1][1], grid[1][0], Z12, felder)
	assert partition_function(1, 1, Z12, felder) == pytest.approx(expected)


@pytest.mark.parametrize('rows, cols', [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_partition_function_fixed(rows, cols, felder):
	brute = partition_function(rows, cols, Z12, felder)
	transfer = partition_function_transfer(rows, cols, Z12, felder)
	assert brute != 0
	assert transfer == pytest.approx(brute, rel=1e-10)


@pytest.mark.parametrize('rows, cols', [(2, 2), (2, 4)])
def test_partition_function_periodic(rows, cols, felder):
	brute = partition_function(rows, cols, Z12, felder, boundary='periodic')
	transfer = partition_function_transfer(rows, cols, Z12, felder, boundary='periodic')
	assert brute != 0
	assert transfer == pytest.approx(brute, rel=1e-10)


def test_partition_function_intermediate_at_l1():
	spec = RMatrixSpec('intermediate', 3, 1, TAU, HBAR)
	brute = partition_function(2, 2, Z12, spec)
	assert partition_function_transfer(2, 2, Z12, spec) == pytest.approx(brute, rel=1e-10)


def test_partition_function_errors(felder, intermediate):
	with pytest.raises(DomainError):
		partition_function(2, 2, Z12, intermediate)
	with pytest.raises(DomainError):
		partition_function(2, 2, Z12, felder, boundary='twisted')
	with pytest.raises(DomainError):
		partition_function_transfer(2, 2, Z12, felder, boundary='twisted')
	with pytest.raises(ResourceError):
		partition_function(6, 6, Z12, felder)


def test_translation_moves_into_u(felder):
	mu = weights_of_vector_rep(2)
	a = base_height(2)
	corners = (a, a + mu[0], a + mu[0] + mu[1], a + mu[1])
	h = mu[0]
	u = np.array([0.05, -0.02j])
	shifted = boltzmann_weight(*(x + h for x in corners), Z12, felder, u=u)
	moved = boltzmann_weight(*corners, Z12, felder, u=u + HBAR * h.to_complex())
	assert shifted == pytest.approx(moved, rel=1e-12)


def test_partition_function_under_translation(felder):
	base = base_height(2)
	h = weights_of_vector_rep(2)[0]
	plain = partition_function(2, 2, Z12, felder)
	shifted = partition_function(2, 2, Z12, felder, base=base + h)
	moved = partition_function(2, 2, Z12, felder, u=HBAR * h.to_complex())
	assert shifted == pytest.approx(moved, rel=1e-10)
	assert shifted == pytest.approx(
		partition_function_transfer(2, 2, Z12, felder, base=base + h), rel=1e-10,
		)
	# heights are absolute: a weight translation alone changes Z
	assert shifted != pytest.approx(plain, rel=1e-3)
	diagonal = Height([Fraction(1, 3), Fraction(1, 3)])
	assert partition_function(2, 2, Z12, felder, base=base + diagonal) == pytest.approx(plain, rel=1e-10)
