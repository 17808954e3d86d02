"""Tests for the theta, Eisenstein and Kronecker functions."""
import cmath
import math

from hypothesis import given, settings, strategies
import numpy as np
import pytest

from elliptic_rmatrix._util import contour_derivative, e
from elliptic_rmatrix.elliptic import (
	Characteristics,
	ModularParam,
	ODD,
	dedekind_eta,
	eisenstein,
	eta1,
	eta1_series,
	omega,
	phi,
	phi_deformed,
	phi_deformed_trig,
	phi_rational,
	phi_trig,
	phi_u_derivative,
	theta,
	theta_char,
	theta_derivative,
	theta_product,
	weierstrass_p,
	weierstrass_p_series,
	weierstrass_zeta,
	)
from elliptic_rmatrix.exceptions import DomainError, PoleError

TAU = 0.2 + 1.1j
U = 0.31 + 0.22j
Z = 0.17 - 0.12j

cell_points = strategies.builds(
	lambda x, y: x + y * TAU,
	strategies.floats(min_value=0.05, max_value=0.95),
	strategies.floats(min_value=0.05, max_value=0.95),
	)


def test_modular_param():
	tau = ModularParam(TAU)
	assert complex(tau) == TAU
	assert tau.q == pytest.approx(cmath.exp(2j * math.pi * TAU))
	assert tau == ModularParam(TAU)
	assert hash(tau) == hash(ModularParam(TAU))
	assert repr(tau) == 'ModularParam({!r})'.format(TAU)
	with pytest.raises(DomainError):
		ModularParam(-1j)


def test_characteristics():
	a, b = ODD
	assert a == b == 0.5
	assert Characteristics('1/2', 0.5) == ODD


@settings(max_examples=30)
@given(cell_points)
def test_theta_series_matches_product(z):
	assert theta(z, TAU) == pytest.approx(theta_product(z, TAU), rel=1e-10, abs=1e-13)


def test_theta_odd():
	assert theta(-Z, TAU) == pytest.approx(-theta(Z, TAU))
	assert theta_char(0.5, 0.5, Z, TAU) == theta(Z, TAU)


def test_theta_quasi_periodicity():
	assert theta(Z + 1, TAU) == pytest.approx(-theta(Z, TAU))
	factor = -cmath.exp(-1j * math.pi * TAU - 2j * math.pi * Z)
	assert theta(Z + TAU, TAU) == pytest.approx(factor * theta(Z, TAU))


def test_theta_derivative_at_zero():
	assert theta_derivative(1, 0, TAU) == pytest.approx(-2 * math.pi * dedekind_eta(TAU) ** 3, rel=1e-12)


def test_theta_derivative_matches_contour():
	numeric = contour_derivative(lambda z: theta(z, TAU), Z, order=2)
	assert theta_derivative(2, Z, TAU) == pytest.approx(numeric, rel=1e-9)


def test_theta_vectorized():
	points = np.array([Z, U, 0.5])
	np.testing.assert_allclose(theta(points, TAU), [theta(x, TAU) for x in points])


def test_eisenstein_periodicity():
	assert eisenstein(1, Z + 1, TAU) == pytest.approx(eisenstein(1, Z, TAU))
	assert eisenstein(1, Z + TAU, TAU) == pytest.approx(eisenstein(1, Z, TAU) - 2j * math.pi)
	assert eisenstein(2, Z + TAU, TAU) == pytest.approx(eisenstein(2, Z, TAU))
	assert eisenstein(1, -Z, TAU) == pytest.approx(-eisenstein(1, Z, TAU))


@pytest.mark.parametrize('j', [1, 2, 3])
def test_eisenstein_recursion(j):
	derivative = contour_derivative(lambda z: eisenstein(j, z, TAU), Z, radius=0.03)
	assert eisenstein(j + 1, Z, TAU) == pytest.approx(-derivative / j, rel=1e-9)


def test_eisenstein_laurent():
	z = 1e-3
	expected = 1 / z - 2 * eta1(TAU) * z
	assert eisenstein(1, z, TAU) == pytest.approx(expected, rel=1e-8)


def test_eisenstein_errors():
	with pytest.raises(DomainError):
		eisenstein(5, Z, TAU)
	with pytest.raises(PoleError):
		eisenstein(1, TAU, TAU)


def test_eta1():
	assert eta1(TAU) == pytest.approx(eta1_series(TAU), rel=1e-11)
	assert eta1(1j) == pytest.approx(math.pi / 2, rel=1e-11)


def test_weierstrass():
	assert weierstrass_p(Z, TAU) == pytest.approx(weierstrass_p_series(Z, TAU), rel=1e-10)
	derivative = contour_derivative(lambda z: weierstrass_zeta(z, TAU), Z, radius=0.03)
	assert derivative == pytest.approx(-weierstrass_p(Z, TAU), rel=1e-9)
	with pytest.raises(DomainError):
		weierstrass_p_series(2 * TAU, TAU)


def test_phi_symmetry():
	assert phi(U, Z, TAU) == pytest.approx(phi(Z, U, TAU))
	assert phi(-U, -Z, TAU) == pytest.approx(-phi(U, Z, TAU))


def test_phi_quasi_periodicity():
	assert phi(U, Z + 1, TAU) == pytest.approx(phi(U, Z, TAU))
	assert phi(U, Z + TAU, TAU) == pytest.approx(e(-U) * phi(U, Z, TAU))


def test_phi_residue():
	z = 1e-7
	assert z * phi(U, z, TAU) == pytest.approx(1, rel=1e-6)


def test_phi_poles():
	with pytest.raises(PoleError) as info:
		phi(U, 1 + TAU, TAU)
	assert 'phi: z' in str(info.value)
	with pytest.raises(PoleError):
		phi(0, Z, TAU)


def test_phi_vectorized():
	values = phi(np.array([U, 2 * U]), Z, TAU)
	assert values[1] == pytest.approx(phi(2 * U, Z, TAU))


def test_phi_u_derivative():
	numeric = contour_derivative(lambda u: phi(u, Z, TAU), U, radius=0.03)
	assert phi_u_derivative(U, Z, TAU) == pytest.approx(numeric, rel=1e-9)


def test_phi_u_derivative_near_sum_pole():
	# u + z on the lattice is harmless for ∂_u φ
	value = phi_u_derivative(U, 1 - U, TAU)
	assert np.isfinite(value)


@pytest.mark.parametrize('a', [(0, 1), (1, 2), (2, 2)])
def test_phi_deformed_periodic_in_a(a):
	m = 3
	expected = phi_deformed(a, m, U, Z, TAU)
	assert phi_deformed((a[0] + m, a[1]), m, U, Z, TAU) == pytest.approx(expected)
	assert phi_deformed((a[0], a[1] - m), m, U, Z, TAU) == pytest.approx(expected)


def test_phi_deformed_zero_index():
	assert phi_deformed((0, 0), 2, U, Z, TAU) == pytest.approx(phi(U, Z, TAU))
	assert omega((1, 1), 2, TAU) == pytest.approx((1 + TAU) / 2)


def test_phi_deformed_pole_context():
	with pytest.raises(PoleError) as info:
		phi_deformed((1, 0), 2, -0.5, Z, TAU)
	assert 'a=(1, 0)' in str(info.value)


def test_phi_trig_limit():
	assert phi(0.21 + 0.02j, Z, 10j) == pytest.approx(phi_trig(0.21 + 0.02j, Z), rel=1e-10)


@pytest.mark.parametrize('a', [(0, 0), (1, 0), (0, 1), (1, 1)])
def test_phi_deformed_trig_limit(a):
	eta = 0.1 + 0.03j
	z = 0.23 + 0.05j
	expected = phi_deformed_trig(a, 2, eta, z)
	assert phi_deformed(a, 2, eta, z, 12j) == pytest.approx(expected, rel=1e-10)


def test_phi_rational_limit():
	eps = 1e-5
	assert eps * phi_trig(eps * U, eps * Z) == pytest.approx(phi_rational(U, Z), rel=1e-8)


characteristics = strategies.fractions(min_value=-2, max_value=2, max_denominator=6)


@settings(max_examples=30)
@given(characteristics, characteristics, cell_points)
def test_theta_char_shift_in_z(a, b, z):
	expected = e(float(a)) * theta_char(a, b, z, TAU)
	assert theta_char(a, b, z + 1, TAU) == pytest.approx(expected, rel=1e-10, abs=1e-13)


@settings(max_examples=30)
@given(characteristics, characteristics, cell_points)
def test_theta_char_periodic_in_a(a, b, z):
	expected = theta_char(a, b, z, TAU)
	assert theta_char(a + 1, b, z, TAU) == pytest.approx(expected, rel=1e-10, abs=1e-13)


@pytest.mark.parametrize('m', [2, 3, 4])
@pytest.mark.parametrize('a', [(0, 0), (1, 0), (0, 1), (1, 2), (3, 3)])
def test_phi_deformed_quasi_periodicity(a, m):
	value = phi_deformed(a, m, U, Z, TAU)
	z_shift = cmath.exp(2j * math.pi * a[1] / m)
	assert phi_deformed(a, m, U, Z + 1, TAU) == pytest.approx(z_shift * value, rel=1e-10)
	assert phi_deformed(a, m, U + TAU, Z, TAU) == pytest.approx(e(-Z) * value, rel=1e-10)


@settings(max_examples=20)
@given(cell_points)
def test_phi_laurent_constant_term_is_e1(z):
	# the mean over a circle around u = 0 drops the 1/u term
	nodes = 0.05 * np.exp(2j * math.pi * np.arange(32) / 32)
	constant = np.mean(phi(nodes, z, TAU))
	assert constant == pytest.approx(eisenstein(1, z, TAU), rel=1e-10, abs=1e-12)
