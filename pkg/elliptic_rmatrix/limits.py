"""Classical limits and the trigonometric and rational degenerations.

Near ħ = 0 each elliptic R-matrix behaves like

	R(ħ) = c/ħ·Id + c·r + O(ħ)

with a family-dependent constant c and the classical r-matrix r. The
numerical limit recovers c and r from F(ħ) = ħ·R(ħ) sampled at
ħ = h0/2^k; the closed forms below give r directly.
"""
import logging

import numpy as np

from ._util import TWO_PI_I, check_order, guard_line_poles
from .elliptic import (
	eisenstein,
	phi,
	phi_deformed,
	phi_deformed_trig,
	phi_rational,
	phi_trig,
	)
from .exceptions import DomainError, NumericError
from .heisenberg import lattice, t_matrix
from .rmatrix import as_dynamical, assemble

__all__ = (
	'SCALAR_TOL',
	'CONVERGENCE_TOL',
	'classical_constant',
	'classical_r',
	'classical_limit_numeric',
	'build_trig',
	'build_rational',
	)

logger = logging.getLogger(__name__)

SCALAR_TOL = 1e-6
CONVERGENCE_TOL = 1e-4


def classical_constant(spec):
	"""Return c in R(ħ) = c/ħ·Id + c·r + O(ħ) for an elliptic spec."""
	if spec.family == 'vertex':
		return (spec.n / TWO_PI_I) ** 2
	if spec.family == 'felder':
		return 1.0
	if spec.family == 'intermediate':
		if spec.cartan_weight not in (None, -spec.l):
			raise DomainError('the classical limit needs the default cartan weight')
		return -(spec.l / TWO_PI_I) ** 2
	raise DomainError('no classical constant for family {!r}'.format(spec.family))


def _vertex_r(n, z, tau):
	c0 = (n / TWO_PI_I) ** 2
	r = eisenstein(1, z, tau) * np.eye(n * n, dtype=complex)
	for a in lattice(n, include_zero=False):
		coefficient = phi_deformed(a, n, 0, z, tau)
		r += coefficient / c0 * np.kron(t_matrix(a.a1, a.a2, n), t_matrix(-a.a1, -a.a2, n))
	return r


def _felder_r(n, u, z, tau, include_cartan):
	r = np.zeros((n * n, n * n), dtype=complex)
	e1_z = eisenstein(1, z, tau)
	for i in range(n):
		r[i * n + i, i * n + i] = e1_z
		for j in range(n):
			if i == j:
				continue
			r[i * n + j, j * n + i] = phi(u[i] - u[j], z, tau)
			if include_cartan:
				r[i * n + j, i * n + j] = -eisenstein(1, u[i] - u[j], tau)
	return r


def _intermediate_r(p, l, u, z, tau, include_cartan):
	e1_z = eisenstein(1, z, tau)

	def r_coefficient(i, j, a):
		if i == j and a.is_zero():
			return e1_z
		return phi_deformed((-a.a1, -a.a2), l, -(u[i] - u[j]), z, tau)

	def rho_coefficient(i, j):
		if not include_cartan:
			return 0
		return l * eisenstein(1, l * (u[i] - u[j]), tau)

	c = -(l / TWO_PI_I) ** 2
	return assemble(p, l, r_coefficient, rho_coefficient) / c


def classical_r(spec, u=None, z=0.3, include_cartan=True):
	"""Return the closed-form classical r-matrix of an elliptic spec.

	Args:
		spec: An RMatrixSpec of an elliptic family.
		u: Dynamical vector (ignored for vertex).
		z: Spectral parameter.
		include_cartan: Keep the Σ E₁(u_ij)·E_ii ⊗ E_jj part (dynamical
			families only); the modified classical dynamical Yang-Baxter
			equation holds with or without it.
	"""
	if spec.family == 'vertex':
		return _vertex_r(spec.n, z, spec.tau)
	if spec.family == 'felder':
		return _felder_r(spec.n, as_dynamical(u, spec.n), z, spec.tau, include_cartan)
	if spec.family == 'intermediate':
		classical_constant(spec)
		return _intermediate_r(
			spec.p, spec.l, as_dynamical(u, spec.p), z, spec.tau, include_cartan,
			)
	raise DomainError('no classical r-matrix for family {!r}'.format(spec.family))


def _interpolate(steps, samples):
	"""Constant and linear coefficients of the polynomial through the samples."""
	count = len(steps)
	vander = np.vander(steps, count, increasing=True)
	coefficients = np.linalg.solve(vander, samples.reshape(count, -1))
	return coefficients[0], coefficients[1]


def classical_limit_numeric(spec, u=None, z=0.3, h0=0.02, levels=6, rtol=CONVERGENCE_TOL):
	"""Extract (c, r) from F(ħ) = ħ·R(ħ) at ħ = h0/2^k, k < levels.

	The samples are interpolated by a polynomial of degree levels - 1 whose
	constant and linear coefficients give F(0) = c·Id and F'(0) = c·r. The
	same fit through the levels - 1 finest samples must agree with it to
	rtol, each coefficient relative to its largest entry.

	Raises:
		NumericError: If the two fits disagree, or F(0) is not a multiple of
			the identity.
	"""
	levels = check_order('levels', levels, minimum=3)
	steps = 0.5 ** np.arange(levels)
	samples = np.array([
		h0 * t * spec.build(u, z, hbar=h0 * t)
		for t in steps
		])
	shape = samples.shape[1:]
	f0, f1 = _interpolate(steps, samples)
	f0_fine, f1_fine = _interpolate(steps[1:], samples[1:])
	disagreement = max(
		np.max(np.abs(f0 - f0_fine)) / np.max(np.abs(f0)),
		np.max(np.abs(f1 - f1_fine)) / np.max(np.abs(f1)),
		)
	logger.debug('classical limit of %r: successive fits differ by %.2e', spec, disagreement)
	if not disagreement < rtol:
		raise NumericError(
			'extrapolation did not converge: successive fits differ by {:.3e}'.format(disagreement),
			)
	f0 = f0.reshape(shape)
	f1 = f1.reshape(shape) / h0
	c = np.trace(f0) / shape[0]
	if abs(c) == 0:
		raise NumericError('ħ·R(ħ) vanishes at ħ = 0')
	deviation = np.max(np.abs(f0 - c * np.eye(shape[0]))) / abs(c)
	if deviation > SCALAR_TOL:
		raise NumericError(
			'ħ·R(ħ) at ħ = 0 is not scalar: relative deviation {:.3e}'.format(deviation),
			)
	logger.debug('classical limit of %r: c = %s, deviation %.2e', spec, c, deviation)
	return complex(c), f1 / c


def build_trig(p, l, u, z, hbar, cartan_weight=None):
	"""The Im τ → ∞ limit of the intermediate R-matrix.

	Raises:
		PoleError: If a cot or 1/sin term is evaluated at an integer, e.g.
			at z = 0 or at u_ij = 0 for i != j.
	"""
	p = check_order('p', p)
	l = check_order('l', l)
	u = as_dynamical(u, p)
	weight = -l if cartan_weight is None else cartan_weight

	def r_coefficient(i, j, a):
		shift = hbar if i == j else 0
		return phi_deformed_trig((-a.a1, -a.a2), l, -(u[i] - u[j]) - shift, z)

	def rho_coefficient(i, j):
		return weight * phi_trig(-l * (u[i] - u[j]), l * hbar)

	return assemble(p, l, r_coefficient, rho_coefficient)


def build_rational(p, l, u, z, hbar, cartan_weight=None):
	"""The rational degeneration of the intermediate R-matrix.

	This is the ε → 0 limit of ε·R_trig(εu, εħ, εz). Entrywise,
	ε·π cot(πεz) → 1/z and ε·π e((t - ½)εz)/sin(πεz) → 1/z, while for
	a = (a₁, 0) with a₁ ≢ 0 mod l the term ε·π cot π(εη - a₁/l) vanishes.
	So r^a_ij = 1/z for a ≠ 0, r^0_ij = 1/z - 1/(u_ij + δ_ij ħ) and
	ρ_ij = w·(1/(l·ħ) - 1/(l·u_ij)).

	Raises:
		PoleError: If z, ħ, or some u_ij (i != j) vanishes.
	"""
	p = check_order('p', p)
	l = check_order('l', l)
	u = as_dynamical(u, p)
	weight = -l if cartan_weight is None else cartan_weight

	def r_coefficient(i, j, a):
		if not a.is_zero():
			guard_line_poles(z, period=None, context='rational: z')
			return 1 / z
		shift = hbar if i == j else 0
		return phi_rational(-(u[i] - u[j]) - shift, z)

	def rho_coefficient(i, j):
		return weight * phi_rational(-l * (u[i] - u[j]), l * hbar)

	return assemble(p, l, r_coefficient, rho_coefficient)
