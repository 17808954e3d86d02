"""Randomized residual checks of the functional identities of φ, E₁ and E₂."""
import logging
import math

import numpy as np

from ._util import (
	TWO_PI_I,
	as_tau,
	contour_derivative,
	mixed_contour_derivative,
	nearest_lattice_point,
	sample_cell,
	)
from .elliptic import eisenstein, omega, phi, phi_deformed, phi_u_derivative
from .exceptions import PoleError
from .reports import ResidualReport

__all__ = ('IDENTITIES', 'SAMPLE_MARGIN', 'identity_residual', 'identity_suite')

logger = logging.getLogger(__name__)

SAMPLE_MARGIN = 1e-3
HEAT_MARGIN = 0.1
MAX_RETRIES = 200


class _Skip(Exception):
	pass


def _scaled_residual(terms):
	"""|Σ terms| relative to the largest term (and at least 1)."""
	terms = [complex(t) for t in terms]
	scale = max([1.0] + [abs(t) for t in terms])
	return abs(sum(terms)) / scale


def _draw(rng, tau, count, avoid, margin):
	"""Draw `count` points of the fundamental cell keeping avoid(points) off the poles.

	avoid returns pairs (value, order); every value must stay margin away from
	the lattice (Z + τZ)/order.
	"""
	for _ in range(MAX_RETRIES):
		points = sample_cell(rng, tau, count)
		ok = True
		for value, order in avoid(points):
			distance, _ = nearest_lattice_point(value, tau, order)
			if distance < margin:
				ok = False
				break
		if ok:
			return points
	raise _Skip()


def _fay(rng, tau, margin):
	u1, u2, z1, z2 = _draw(
		rng, tau, 4,
		lambda p: [(x, 1) for x in (p[0], p[1], p[2], p[3], p[0] + p[1], p[3] - p[2])],
		margin,
		)
	return _scaled_residual([
		phi(u1, z1, tau) * phi(u2, z2, tau),
		-phi(u1 + u2, z1, tau) * phi(u2, z2 - z1, tau),
		-phi(u1 + u2, z2, tau) * phi(u1, z1 - z2, tau),
		])


def _calogero(rng, tau, margin):
	u, v, z = _draw(
		rng, tau, 3,
		lambda p: [(x, 1) for x in (p[0], p[1], p[2], p[0] + p[1])],
		margin,
		)
	return _scaled_residual([
		phi(u, z, tau) * phi_u_derivative(v, z, tau),
		-phi(v, z, tau) * phi_u_derivative(u, z, tau),
		-eisenstein(2, u, tau) * phi(u + v, z, tau),
		eisenstein(2, v, tau) * phi(u + v, z, tau),
		])


def _product(rng, tau, margin):
	u, z = _draw(rng, tau, 2, lambda p: [(p[0], 1), (p[1], 1)], margin)
	return _scaled_residual([
		phi(u, z, tau) * phi(-u, z, tau),
		-eisenstein(2, z, tau),
		eisenstein(2, u, tau),
		])


def _triple_poles(p):
	v, u1, u2, z, w = p
	return [
		(x, 1) for x in (v, u1, u2, z, w, z - w, u1 - v, u2 + v, u1 - u2 - v)
		]


def _triple(rng, tau, margin):
	v, u1, u2, z, w = _draw(rng, tau, 5, _triple_poles, margin)
	f = (
		eisenstein(1, v, tau)
		- eisenstein(1, u1 - u2 - v, tau)
		+ eisenstein(1, u1 - v, tau)
		- eisenstein(1, u2 + v, tau)
		)
	return _scaled_residual([
		phi(v, z - w, tau) * phi(u1 - v, z, tau) * phi(u2 + v, w, tau),
		-phi(u1 - u2 - v, z - w, tau) * phi(u2 + v, z, tau) * phi(u1 - v, w, tau),
		-phi(u1, z, tau) * phi(u2, w, tau) * f,
		])


def _triple_degenerate(rng, tau, margin):
	v, u1, z, w = _draw(
		rng, tau, 4,
		lambda p: [(x, 1) for x in (p[0], p[1], p[2], p[3], p[2] - p[3], p[1] - p[0])],
		margin,
		)
	return _scaled_residual([
		phi(v, z - w, tau) * phi(u1 - v, z, tau) * phi(v, w, tau),
		-phi(u1 - v, z - w, tau) * phi(v, z, tau) * phi(u1 - v, w, tau),
		-phi(u1, z, tau) * (eisenstein(2, v, tau) - eisenstein(2, u1 - v, tau)),
		])


def _heat(rng, tau, margin):
	u, w = _draw(rng, tau, 2, lambda p: [(p[0], 1), (p[1], 1)], max(margin, HEAT_MARGIN))
	radius = 0.25 * min(HEAT_MARGIN, tau.imag)
	# Moving τ moves the lattice point n1 + n2τ by n2·dτ.
	reach = 1 + abs(u.imag) / tau.imag + abs(w.imag) / tau.imag
	radius_tau = 0.25 * min(HEAT_MARGIN / reach, tau.imag)
	d_tau = contour_derivative(
		lambda taus: [phi(u, w, t) for t in taus],
		tau,
		radius=radius_tau,
		)
	d_uw = mixed_contour_derivative(lambda x, y: phi(x, y, tau), u, w, radius=radius)
	return _scaled_residual([d_tau, -d_uw / TWO_PI_I])


def _e2_sum(m):
	def check(rng, tau, margin):
		(z, ) = _draw(rng, tau, 1, lambda p: [(p[0], m)], margin)
		total = sum(
			eisenstein(2, z + omega((a1, a2), m, tau), tau)
			for a1 in range(m)
			for a2 in range(m)
			)
		return _scaled_residual([total, -m * m * eisenstein(2, m * z, tau)])
	return check


def _lattice_pair(rng, m, nonzero_sum=True):
	while True:
		a = tuple(int(x) for x in rng.integers(0, m, 2))
		b = tuple(int(x) for x in rng.integers(0, m, 2))
		if not nonzero_sum or (a[0] + b[0]) % m or (a[1] + b[1]) % m:
			return a, b


def _add(*indices):
	return tuple(sum(parts) for parts in zip(*indices))


def _neg(a):
	return (-a[0], -a[1])


def _deformed_fay(rng, tau, margin):
	m = int(rng.integers(2, 4))
	a, b = _lattice_pair(rng, m, nonzero_sum=False)
	ab = _add(a, b)
	om = {name: omega(x, m, tau) for name, x in (('a', a), ('b', b), ('ab', ab))}
	u, v, z, w = _draw(
		rng, tau, 4,
		lambda p: [
			(p[0] + om['ab'], 1), (p[1] - om['b'], 1), (p[0] + p[1] + om['a'], 1),
			(p[2], 1), (p[3], 1), (p[2] - p[3], 1),
			],
		margin,
		)
	return _scaled_residual([
		phi_deformed(ab, m, u, z - w, tau) * phi_deformed(_neg(b), m, v, z, tau),
		phi_deformed(a, m, u + v, z, tau) * phi_deformed(_neg(ab), m, -u, w, tau),
		-phi_deformed(a, m, u + v, z - w, tau) * phi_deformed(_neg(b), m, v, w, tau),
		])


def _deformed_triple(degenerate):
	def check(rng, tau, margin):
		m = int(rng.integers(2, 4))
		a, b = _lattice_pair(rng, m)
		if degenerate:
			b = _neg(a)
		c = tuple(int(x) for x in rng.integers(0, m, 2))
		abc = _add(a, b, c)
		mbc = _neg(_add(b, c))
		amc = _add(a, _neg(c))
		om = {
			'a': omega(a, m, tau),
			'b': omega(b, m, tau),
			'c': omega(c, m, tau),
			}

		def poles(p):
			u, v, z, w = p
			return [
				(u + om['a'] + om['b'] + om['c'], 1),
				(v - om['b'] - om['c'], 1),
				(u + om['c'], 1),
				(v + om['a'] - om['c'], 1),
				(u + v + om['a'], 1),
				(z, 1), (w, 1), (z - w, 1),
				]

		u, v, z, w = _draw(rng, tau, 4, poles, margin)
		terms = [
			phi_deformed(abc, m, u, z - w, tau)
			* phi_deformed(mbc, m, v, z, tau)
			* phi_deformed(c, m, u, w, tau),
			-phi_deformed(amc, m, v, z - w, tau)
			* phi_deformed(c, m, u, z, tau)
			* phi_deformed(mbc, m, v, w, tau),
			]
		if degenerate:
			factor = (
				eisenstein(2, u + om['c'], tau)
				- eisenstein(2, v + om['a'] - om['c'], tau)
				)
			terms.append(-phi_deformed(a, m, u + v, z, tau) * factor)
		else:
			factor = (
				eisenstein(1, u + om['a'] + om['b'] + om['c'], tau)
				- eisenstein(1, v + om['a'] - om['c'], tau)
				+ eisenstein(1, v - om['b'] - om['c'], tau)
				- eisenstein(1, u + om['c'], tau)
				)
			terms.append(
				-phi_deformed(a, m, u + v, z, tau)
				* phi_deformed(_neg(_add(a, b)), m, 0, w, tau)
				* factor
				)
		return _scaled_residual(terms)
	return check


IDENTITIES = {
	'fay': _fay,
	'calogero': _calogero,
	'product': _product,
	'triple': _triple,
	'triple_degenerate': _triple_degenerate,
	'heat': _heat,
	'e2_sum_m2': _e2_sum(2),
	'e2_sum_m3': _e2_sum(3),
	'e2_sum_m4': _e2_sum(4),
	'deformed_fay': _deformed_fay,
	'deformed_triple': _deformed_triple(degenerate=False),
	'deformed_triple_degenerate': _deformed_triple(degenerate=True),
	}


def identity_residual(name, tau, rng, margin=SAMPLE_MARGIN):
	"""Return the scaled residual of one identity at one random sample.

	Returns None when no admissible sample was found.
	"""
	tau = as_tau(tau)
	try:
		return IDENTITIES[name](rng, tau, margin)
	except (_Skip, PoleError):
		return None


def identity_suite(tau, n_samples=100, tol=1e-10, seed=0, margin=SAMPLE_MARGIN, names=None):
	"""Check every identity at n_samples random argument tuples.

	Failures are recorded, never raised. The residual of a sample is
	|LHS - RHS| divided by the largest term (or 1 if all terms are small).

	Args:
		tau: The modular parameter.
		n_samples: Random tuples per identity.
		tol: Pass threshold on the worst residual.
		seed: Seed of the random generator; recorded in the report.
		margin: Minimal distance of any argument from a pole.
		names: Subset of IDENTITIES to run (default: all).
	Returns:
		A ResidualReport with one component per evaluated identity. An
		identity whose samples were all skipped is listed under
		notes['unevaluated'] and fails the report.
	"""
	tau = as_tau(tau)
	rng = np.random.default_rng(seed)
	names = list(IDENTITIES if names is None else names)
	components = {}
	unevaluated = []
	skipped = 0
	done = 0
	for name in names:
		worst = 0.0
		evaluated = 0
		for _ in range(n_samples):
			residual = identity_residual(name, tau, rng, margin)
			if residual is None:
				skipped += 1
				continue
			evaluated += 1
			if math.isnan(residual):
				worst = float('nan')
				break
			worst = max(worst, residual)
		done += evaluated
		if not evaluated:
			unevaluated.append(name)
			logger.warning('identity %s: no admissible sample', name)
			continue
		components[name] = worst
		logger.info('identity %s: worst residual %.3e', name, worst)
	if skipped:
		logger.warning('identity suite skipped %d samples', skipped)
	report = ResidualReport.from_components(
		'identities',
		tol,
		components,
		params={'tau': tau, 'margin': margin},
		seed=seed,
		samples=done,
		skipped=skipped,
		)
	report.passed = not unevaluated and all(
		not math.isnan(value) and value < tol for value in components.values()
		)
	if unevaluated:
		report.notes['unevaluated'] = unevaluated
	return report
