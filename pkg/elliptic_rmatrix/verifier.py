"""Residual checks of the Yang-Baxter type equations and the symmetries of R.

Every check samples its arguments from a seeded generator, evaluates both
sides of an equation on V ⊗ V ⊗ V (or V ⊗ V) and records the worst relative
residual in a ResidualReport. Failures are recorded, never raised; samples
that land on a pole are redrawn or counted as skipped.
"""
import logging

import numpy as np

from ._util import (
	as_tau,
	contour_derivative,
	e,
	nearest_lattice_point,
	relative_residual,
	sample_cell,
	)
from .elliptic import eisenstein
from .exceptions import DomainError, PoleError, ResourceError
from .heisenberg import (
	block_diagonal_cartan,
	boundary_twists,
	clock_matrix,
	embed,
	shift_matrix,
	swap_operator,
	)
from .limits import (
	build_rational,
	build_trig,
	classical_constant,
	classical_limit_numeric,
	classical_r,
	)
from .reports import ResidualReport
from .rmatrix import as_dynamical, build_felder, build_intermediate, build_vertex

__all__ = (
	'MAX_DIMENSION',
	'SAMPLE_MARGIN',
	'ShiftConvention',
	'CONVENTIONS',
	'shifted_action',
	'check_qybe',
	'check_qdybe',
	'determine_convention',
	'check_unitarity',
	'unitarity_scalar',
	'check_symmetries',
	'check_classical',
	'check_classical_limit',
	'check_degenerations',
	)

logger = logging.getLogger(__name__)

MAX_DIMENSION = 8
SAMPLE_MARGIN = 1e-3
CLASSICAL_MARGIN = 0.1
CLASSICAL_RADIUS = 0.02
DEGENERATE_TAU = 15j
RATIONAL_SCALE = 1e-5
MAX_RETRIES = 200

# (legs, shift sign) for the three factors of each side. A zero sign means no
# shift; otherwise u_s moves by -sign·σ·ħ on the spectator's weight e_s.
_FORMS = {
	'z1': (
		(((0, 1), 0), ((0, 2), 1), ((1, 2), 0)),
		(((1, 2), 1), ((0, 2), 0), ((0, 1), 1)),
		),
	'symmetric': (
		(((0, 1), -1), ((0, 2), 1), ((1, 2), -1)),
		(((1, 2), 1), ((0, 2), 1), ((0, 1), 1)),
		),
	}


class _Skip(Exception):
	pass


class ShiftConvention:
	"""How the dynamical shifts of the QDYB equation are applied.

	With form 'z1' and sign σ the equation reads

		R12(u, z-w) R13(u - σħh2, z) R23(u, w) = R23(u - σħh1, w) R13(u, z) R12(u - σħh3, z-w)

	where hk is the weight of the k-th leg. The 'symmetric' form shifts
	every factor.
	"""

	__slots__ = ('sign', 'form')

	def __init__(self, sign=1, form='z1'):
		if sign not in (1, -1):
			raise DomainError('sign must be +1 or -1, got {!r}'.format(sign))
		if form not in _FORMS:
			raise DomainError('unknown form {!r}'.format(form))
		self.sign = sign
		self.form = form

	def __iter__(self):
		yield self.sign
		yield self.form

	@property
	def name(self):
		return '{}{}'.format(self.form, '+' if self.sign > 0 else '-')

	def sides(self):
		"""Return the (lhs, rhs) factor lists as (legs, shift sign) pairs."""
		lhs, rhs = _FORMS[self.form]
		return (
			tuple((legs, sign * self.sign) for legs, sign in lhs),
			tuple((legs, sign * self.sign) for legs, sign in rhs),
			)

	def __eq__(self, other):
		if isinstance(other, ShiftConvention):
			return tuple(self) == tuple(other)
		return NotImplemented

	def __hash__(self):
		return hash((ShiftConvention, self.sign, self.form))

	def __repr__(self):
		return '{class_name}({sign}, {form!r})'.format(
			class_name=self.__class__.__name__,
			sign=self.sign,
			form=self.form,
			)


CONVENTIONS = tuple(
	ShiftConvention(sign, form)
	for form in ('z1', 'symmetric')
	for sign in (1, -1)
	)


def _check_dimension(spec):
	if spec.n > MAX_DIMENSION:
		raise ResourceError('N = {} exceeds the limit {} for V⊗V⊗V checks'.format(
			spec.n,
			MAX_DIMENSION,
			))


def _weight_mask(n, l, leg, s):
	"""Boolean mask over the basis of V⊗V⊗V selecting weight e_s on `leg`."""
	index = np.indices((n, n, n))[leg].reshape(-1)
	return index // l == s


def _spectator(legs):
	return ({0, 1, 2} - set(legs)).pop()


def shifted_action(spec, legs, u, z, sign=1, shift=None):
	"""Return R on `legs` of V⊗V⊗V with u_s shifted by -sign·ħ on spectator weight e_s.

	Args:
		spec: The RMatrixSpec to build.
		legs: Two of the legs 0, 1, 2; the third one is the spectator.
		u: Dynamical vector.
		z: Spectral parameter.
		sign: Direction of the shift; 0 gives the unshifted embedding.
		shift: Size of the shift (defaults to spec.hbar).
	Raises:
		PoleError: With the spectator weight attached.
	"""
	n = spec.n
	legs = tuple(legs)
	if not spec.dynamical or sign == 0:
		return embed(spec.build(u, z), legs, n)
	u = as_dynamical(u, spec.p)
	shift = spec.hbar if shift is None else shift
	spectator = _spectator(legs)
	total = np.zeros((n ** 3, n ** 3), dtype=complex)
	for s in range(spec.p):
		shifted = u.copy()
		shifted[s] -= sign * shift
		try:
			r = spec.build(shifted, z)
		except PoleError as error:
			raise error.with_context('spectator weight {}'.format(s)) from None
		mask = _weight_mask(n, spec.l, spectator, s)
		total += embed(r, legs, n) * mask[None, :]
	return total


def _differences(u):
	return [u[i] - u[j] for i in range(len(u)) for j in range(len(u)) if i < j]


def _sampling_tau(spec):
	return 1j if spec.tau is None else spec.tau


def _sample_arguments(rng, spec, margin, shifts=True):
	"""Draw (u, z, w) keeping every R-matrix argument off Λ/l."""
	tau = _sampling_tau(spec)
	hbar = spec.hbar
	for _ in range(MAX_RETRIES):
		u = sample_cell(rng, tau, spec.p) if spec.dynamical else np.zeros(spec.p, dtype=complex)
		z, w = sample_cell(rng, tau, 2)
		values = [z, w, z - w]
		for difference in _differences(u):
			values.append(difference)
			if shifts:
				values.extend((difference + hbar, difference - hbar))
		if shifts:
			values.append(hbar)
		distance, _ = nearest_lattice_point(np.array(values), tau, spec.l)
		if np.min(distance) >= margin:
			return u, complex(z), complex(w)
		logger.debug('rejected sample at distance %.2e from a pole', np.min(distance))
	raise _Skip()


def _run(check, spec, residual, n_samples, seed, tol, margin, fixed=None, shifts=True, **kwargs):
	"""Evaluate residual(u, z, w) -> {component: (max_abs, frobenius)} on samples."""
	rng = np.random.default_rng(seed)
	if fixed is not None:
		n_samples = 1
	worst = {}
	skipped = 0
	done = 0
	for _ in range(n_samples):
		try:
			if fixed is None:
				args = _sample_arguments(rng, spec, margin, shifts)
			else:
				args = fixed
			values = residual(*args)
		except (_Skip, PoleError) as error:
			skipped += 1
			logger.debug('%s: skipped sample (%s)', check, error)
			continue
		done += 1
		for name, pair in values.items():
			worst.setdefault(name, []).append(pair)
	components = {
		name: float(np.max([pair[0] for pair in pairs]))
		for name, pairs in worst.items()
		}
	frobenius = max(
		(float(np.max([pair[1] for pair in pairs])) for pairs in worst.values()),
		default=0.0,
		)
	report = ResidualReport(
		check=check,
		tol=tol,
		max_abs=float(np.max(list(components.values()))) if components else 0.0,
		frobenius=frobenius,
		family=spec.family,
		params=dict(spec.to_dict(), margin=margin),
		seed=seed,
		samples=done,
		skipped=skipped,
		components=components,
		**kwargs
		)
	report.gate()
	if done == 0:
		report.passed = False
		report.notes['reason'] = 'no admissible sample'
	if skipped:
		logger.warning('%s: %d of %d samples skipped', check, skipped, n_samples)
	logger.info('%s (%s): max residual %.3e, passed=%s', check, spec.family, report.max_abs, report.passed)
	return report


def _fixed(spec, u, z, w):
	if z is None and w is None and u is None:
		return None
	if z is None or w is None:
		raise DomainError('z and w must be given together')
	return as_dynamical(u, spec.p), complex(z), complex(w)


def check_qybe(spec, n_samples=20, seed=0, tol=1e-9, z=None, w=None, margin=SAMPLE_MARGIN):
	"""Check R12(z-w)R13(z)R23(w) = R23(w)R13(z)R12(z-w) for a non-dynamical R."""
	if spec.dynamical:
		raise DomainError('check_qybe needs a non-dynamical family, got {!r}'.format(spec.family))
	_check_dimension(spec)
	n = spec.n

	def residual(u, z, w):
		r12 = embed(spec.build(u, z - w), (0, 1), n)
		r13 = embed(spec.build(u, z), (0, 2), n)
		r23 = embed(spec.build(u, w), (1, 2), n)
		return {'qybe': relative_residual(r12 @ r13 @ r23, r23 @ r13 @ r12)}

	fixed = None if z is None else (as_dynamical(None, spec.p), complex(z), complex(w))
	return _run('qybe', spec, residual, n_samples, seed, tol, margin, fixed=fixed)


def _qdybe_sides(spec, convention, u, z, w):
	arguments = {(0, 1): z - w, (0, 2): z, (1, 2): w}
	sides = []
	for factors in convention.sides():
		product = None
		for legs, sign in factors:
			factor = shifted_action(spec, legs, u, arguments[legs], sign=sign)
			product = factor if product is None else product @ factor
		sides.append(product)
	return sides


def check_qdybe(
		spec,
		convention=None,
		n_samples=20,
		seed=0,
		tol=1e-9,
		u=None,
		z=None,
		w=None,
		margin=SAMPLE_MARGIN,
		):
	"""Check the quantum dynamical Yang-Baxter equation under a shift convention.

	Args:
		spec: A dynamical RMatrixSpec (felder, intermediate, trig or rational).
		convention: A ShiftConvention; defaults to ShiftConvention(1, 'z1').
		n_samples: Number of random (u, z, w) samples.
		seed: Seed of the sampler.
		tol: Pass threshold on the max-abs relative residual.
		u, z, w: A fixed sample instead of random ones.
		margin: Minimal distance of every argument from Λ/l.
	"""
	if spec.family == 'vertex':
		raise DomainError('the vertex family has no dynamical parameter, use check_qybe')
	_check_dimension(spec)
	convention = ShiftConvention() if convention is None else convention

	def residual(u, z, w):
		lhs, rhs = _qdybe_sides(spec, convention, u, z, w)
		return {'qdybe': relative_residual(lhs, rhs)}

	return _run(
		'qdybe',
		spec,
		residual,
		n_samples,
		seed,
		tol,
		margin,
		fixed=_fixed(spec, u, z, w),
		notes={'convention': convention.name},
		)


def determine_convention(spec, n_samples=5, seed=0, tol=1e-9, conventions=CONVENTIONS):
	"""Run check_qdybe under every convention and record which ones pass.

	The report passes when exactly one convention passes.
	"""
	components = {}
	passing = []
	for convention in conventions:
		report = check_qdybe(spec, convention, n_samples=n_samples, seed=seed, tol=tol)
		components[convention.name] = report.max_abs
		if report.passed:
			passing.append(convention.name)
	unique = len(passing) == 1
	if not unique:
		logger.warning('%s: %d conventions pass QDYB: %s', spec.family, len(passing), passing)
	report = ResidualReport(
		check='convention',
		tol=tol,
		max_abs=min(components.values()),
		frobenius=min(components.values()),
		family=spec.family,
		params=spec.to_dict(),
		seed=seed,
		samples=n_samples * len(components),
		components=components,
		notes={'passing': passing, 'unique': unique},
		)
	report.passed = unique
	return report


def unitarity_scalar(spec, z):
	"""The predicted scalar of R12(u, z)·R21(u, -z), or None for other normalizations."""
	tau = spec.tau
	hbar = spec.hbar
	if spec.family == 'vertex':
		n = spec.n
		return (n / (2j * np.pi)) ** 4 * n ** 2 * (eisenstein(2, n * hbar, tau) - eisenstein(2, z, tau))
	if spec.family == 'felder':
		return eisenstein(2, hbar, tau) - eisenstein(2, z, tau)
	if spec.family == 'intermediate' and spec.cartan_weight in (None, -spec.l):
		l = spec.l
		c0 = (l / (2j * np.pi)) ** 2
		return c0 ** 2 * l ** 2 * (eisenstein(2, l * hbar, tau) - eisenstein(2, z, tau))
	return None


def check_unitarity(spec, n_samples=10, seed=0, tol=1e-10, u=None, z=None, margin=SAMPLE_MARGIN):
	"""Check that R12(u, z)·P R(u, -z) P is a multiple of the identity.

	Components: 'off_scalar' (distance from the best-fit scalar) and, where
	a closed form is known, 'scalar' (relative error of the scalar).
	"""
	n = spec.n
	swap = swap_operator(n)
	identity = np.eye(n * n)
	scalars = []

	def residual(u, z, w):
		product = spec.build(u, z) @ swap @ spec.build(u, -z) @ swap
		s = np.trace(product) / (n * n)
		scalars.append(complex(s))
		values = {'off_scalar': relative_residual(product, s * identity)}
		predicted = unitarity_scalar(spec, z)
		if predicted is not None:
			error = abs(s - predicted) / max(abs(predicted), 1e-300)
			values['scalar'] = (error, error)
		return values

	fixed = None if z is None else (as_dynamical(u, spec.p), complex(z), 0j)
	report = _run('unitarity', spec, residual, n_samples, seed, tol, margin, fixed=fixed)
	if scalars:
		report.scale = scalars[0]
	return report


def _conjugate(g, r):
	return g @ r @ np.linalg.inv(g)


def _same_weight_projector(p, l):
	weights = np.arange(p * l) // l
	same = (weights[:, None] == weights[None, :]).reshape(-1)
	return np.diag(same.astype(complex)), np.diag((~same).astype(complex))


def _z_periods(spec, u, z, r):
	"""Return {name: (R(z + period), transformed R(z))}."""
	n, p, l = spec.n, spec.p, spec.l
	tau, hbar = spec.tau, spec.hbar
	one = np.eye(n)
	if spec.family == 'vertex':
		return {
			'z_period_1': (spec.build(u, z + 1), _conjugate(np.kron(one, clock_matrix(n)), r)),
			'z_period_tau': (
				spec.build(u, z + tau),
				e(-hbar) * _conjugate(np.kron(one, shift_matrix(n)), r),
				),
			}
	same, diff = _same_weight_projector(p, l)
	u = as_dynamical(u, p)
	if spec.family == 'felder':
		twist = np.kron(np.diag(e(-u)), one)
		return {
			'z_period_1': (spec.build(u, z + 1), r),
			'z_period_tau': (
				spec.build(u, z + tau),
				(e(-hbar) * same + diff) @ _conjugate(twist, r),
				),
			}
	clock, twist = boundary_twists(p, l, u)
	clock = np.kron(clock, one)
	twist = np.kron(twist, one)
	return {
		'z_period_1': (spec.build(u, z + 1), _conjugate(clock, r)),
		'z_period_tau': (
			spec.build(u, z + tau),
			(e(hbar) * same + diff) @ _conjugate(twist, r),
			),
		}


def _block_pair_phase(gamma, l, value):
	"""Diagonal operator e(½·γ_kl·value) on basis pairs of block weights (k, l)."""
	weights = np.arange(len(gamma) * l) // l
	g = np.asarray(gamma)[weights]
	return np.diag(e(0.5 * (g[:, None] - g[None, :]).reshape(-1) * value))


def _u_periods(spec, u, z, r, gamma):
	if not spec.dynamical:
		return {'u_period_1': (r, r), 'u_period_tau': (r, r)}
	u = as_dynamical(u, spec.p)
	gamma = np.asarray(gamma)
	if spec.family == 'felder':
		size, sign = 1, -1
	else:
		size, sign = spec.l, 1
	left = _block_pair_phase(gamma, spec.l, size ** 2 * spec.hbar + sign * z)
	right = _block_pair_phase(gamma, spec.l, size ** 2 * spec.hbar - sign * z)
	return {
		'u_period_1': (spec.build(u + gamma, z), r),
		'u_period_tau': (spec.build(u + spec.tau * gamma, z), left @ r @ right),
		}


def check_symmetries(spec, n_samples=5, seed=0, tol=1e-10, u=None, z=None, margin=SAMPLE_MARGIN):
	"""Check the z-periodicities, the u-lattice law and the weight-zero condition.

	For the felder family the reflection P R(-u) P = R(u) is checked too.
	"""
	if spec.family not in ('vertex', 'felder', 'intermediate'):
		raise DomainError('symmetries are checked for the elliptic families only')
	n, p, l = spec.n, spec.p, spec.l
	rng = np.random.default_rng(seed + 1)
	swap = swap_operator(n)

	def residual(u, z, w):
		r = spec.build(u, z)
		pairs = dict(_z_periods(spec, u, z, r))
		gamma = rng.integers(-2, 3, p)
		pairs.update(_u_periods(spec, u, z, r, gamma))
		x = block_diagonal_cartan(rng.standard_normal(p) + 1j * rng.standard_normal(p), l)
		x2 = np.kron(x, np.eye(n)) + np.kron(np.eye(n), x)
		pairs['weight_zero'] = (x2 @ r, r @ x2)
		if spec.family == 'felder':
			pairs['reflection'] = (swap @ spec.build(-as_dynamical(u, p), z) @ swap, r)
		return {name: relative_residual(*pair) for name, pair in pairs.items()}

	fixed = None if z is None else (as_dynamical(u, p), complex(z), 0j)
	return _run('symmetries', spec, residual, n_samples, seed, tol, margin, fixed=fixed)


def _u_derivatives(spec, u, z, include_cartan, radius):
	"""Return [∂r/∂u_s for s < p] by contour integration."""
	derivatives = []
	for s in range(spec.p):
		def func(points, s=s):
			values = []
			for point in points:
				moved = u.copy()
				moved[s] = point
				values.append(classical_r(spec, moved, z, include_cartan))
			return np.array(values)
		derivatives.append(contour_derivative(func, u[s], radius=radius))
	return derivatives


def _dynamical_term(spec, derivatives, legs):
	"""Σ_s (E_ss ⊗ 1_l on the spectator) ∂_s r on legs."""
	n = spec.n
	spectator = _spectator(legs)
	total = np.zeros((n ** 3, n ** 3), dtype=complex)
	for s, derivative in enumerate(derivatives):
		mask = _weight_mask(n, spec.l, spectator, s)
		total += mask[:, None] * embed(derivative, legs, n)
	return total


def check_classical(
		spec,
		n_samples=5,
		seed=0,
		tol=1e-8,
		u=None,
		z=None,
		w=None,
		include_cartan=True,
		margin=CLASSICAL_MARGIN,
		radius=CLASSICAL_RADIUS,
		):
	"""Check the classical (dynamical) Yang-Baxter equation for the closed-form r.

	The vertex r satisfies [r12, r13] + [r12, r23] + [r13, r23] = 0; the
	dynamical ones the modified form with D1 r23 - D2 r13 + D3 r12 added,
	where Dk = Σ_s (E_ss ⊗ 1_l on leg k)·∂/∂u_s.
	"""
	if spec.family not in ('vertex', 'felder', 'intermediate'):
		raise DomainError('no closed-form classical r-matrix for {!r}'.format(spec.family))
	_check_dimension(spec)
	n = spec.n

	def residual(u, z, w):
		u = as_dynamical(u, spec.p)
		r12 = embed(classical_r(spec, u, z - w, include_cartan), (0, 1), n)
		r13 = embed(classical_r(spec, u, z, include_cartan), (0, 2), n)
		r23 = embed(classical_r(spec, u, w, include_cartan), (1, 2), n)
		lhs = r12 @ r13 + r12 @ r23 + r13 @ r23
		rhs = r13 @ r12 + r23 @ r12 + r23 @ r13
		if spec.dynamical:
			lhs = lhs + _dynamical_term(spec, _u_derivatives(spec, u, w, include_cartan, radius), (1, 2))
			rhs = rhs + _dynamical_term(spec, _u_derivatives(spec, u, z, include_cartan, radius), (0, 2))
			lhs = lhs + _dynamical_term(spec, _u_derivatives(spec, u, z - w, include_cartan, radius), (0, 1))
		return {'cybe': relative_residual(lhs, rhs)}

	return _run(
		'classical',
		spec,
		residual,
		n_samples,
		seed,
		tol,
		margin,
		fixed=_fixed(spec, u, z, w),
		shifts=False,
		notes={'include_cartan': include_cartan},
		)


def check_classical_limit(spec, u=None, z=0.3 + 0.1j, tol=1e-6, h0=0.02, levels=6):
	"""Compare the extrapolated ħ → 0 limit of R with c and the closed-form r."""
	c, r = classical_limit_numeric(spec, u, z, h0=h0, levels=levels)
	expected_c = classical_constant(spec)
	constant = abs(c - expected_c) / abs(expected_c)
	closed = classical_r(spec, u, z)
	max_abs, frobenius = relative_residual(r, closed)
	report = ResidualReport.from_components(
		'classical_limit',
		tol,
		{'constant': constant, 'r_matrix': max_abs},
		frobenius=frobenius,
		family=spec.family,
		params=dict(spec.to_dict(), z=z, h0=h0, levels=levels),
		scale=c,
		samples=1,
		)
	logger.info('classical limit (%s): c = %s, residual %.3e', spec.family, c, report.max_abs)
	return report


def _intermediate_shape(spec):
	if spec.family == 'vertex':
		return 1, spec.n
	if spec.family == 'felder':
		return spec.n, 1
	return spec.p, spec.l


def _intermediate_form(spec, u, z, tau, hbar):
	"""Return R written in the normalization of the intermediate family."""
	n = spec.n
	if spec.family == 'vertex':
		return -build_vertex(n, -z, hbar, tau)
	if spec.family == 'felder':
		c0 = (1 / (2j * np.pi)) ** 2
		return c0 * build_felder(n, -as_dynamical(u, n), z, -hbar, tau)
	return build_intermediate(
		spec.p, spec.l, u, z, hbar, tau, cartan_weight=spec.cartan_weight,
		)


def check_degenerations(spec, u=None, z=0.27 + 0.03j, tol=1e-8, degenerate_tau=DEGENERATE_TAU):
	"""Check how the families and their limits fit together.

	Components:
		trig: the elliptic R at Im τ large against the trigonometric builder.
		intermediate_form: felder (l = 1) and vertex (p = 1) as special cases
			of the intermediate family.
		vertex_reflection: R_int(ħ, z) = P R_V(-ħ, z) P at p = 1.
		rational: ε·R_trig(εu, εħ, εz) against the rational builder (l = 1).
	"""
	if spec.family not in ('vertex', 'felder', 'intermediate'):
		raise DomainError('degenerations start from an elliptic family')
	hbar = spec.hbar
	p, l = _intermediate_shape(spec)
	if u is None:
		u = 0.17 * np.arange(p) + 0.01j
	u = as_dynamical(u, p)
	components = {}
	frobenius = 0.0

	def record(name, lhs, rhs):
		nonlocal frobenius
		max_abs, fro = relative_residual(lhs, rhs)
		components[name] = max_abs
		frobenius = max(frobenius, fro)

	large = _intermediate_form(spec, u, z, as_tau(degenerate_tau), hbar)
	record('trig', large, build_trig(p, l, u, z, hbar, cartan_weight=spec.cartan_weight))
	if spec.family != 'intermediate':
		own = _intermediate_form(spec, u, z, spec.tau, hbar)
		record('intermediate_form', own, build_intermediate(p, l, u, z, hbar, spec.tau))
	if spec.family == 'vertex':
		swap = swap_operator(spec.n)
		record(
			'vertex_reflection',
			build_intermediate(1, spec.n, None, z, hbar, spec.tau),
			swap @ build_vertex(spec.n, z, -hbar, spec.tau) @ swap,
			)
	if l == 1:
		eps = RATIONAL_SCALE
		record(
			'rational',
			eps * build_trig(p, 1, eps * u, eps * z, eps * hbar, cartan_weight=spec.cartan_weight),
			build_rational(p, 1, u, z, hbar, cartan_weight=spec.cartan_weight),
			)
	report = ResidualReport.from_components(
		'degenerations',
		tol,
		components,
		frobenius=frobenius,
		family=spec.family,
		params=dict(spec.to_dict(), z=z, degenerate_tau=degenerate_tau),
		samples=1,
		)
	logger.info('degenerations (%s): %s', spec.family, components)
	return report

