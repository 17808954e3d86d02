"""util functions for elliptic_rmatrix."""
import cmath
import logging
import math
import numbers

import numpy as np

from .exceptions import DomainError, PoleError

__all__ = (
	'POLE_EPS',
	'CONTOUR_NODES',
	'CONTOUR_RADIUS',
	'TWO_PI_I',
	'as_tau',
	'check_order',
	'e',
	'e_m',
	'lattice_coordinates',
	'nearest_lattice_point',
	'guard_poles',
	'guard_line_poles',
	'contour_derivative',
	'mixed_contour_derivative',
	'sample_cell',
	'relative_residual',
	)

logger = logging.getLogger(__name__)

POLE_EPS = 1e-8
CONTOUR_NODES = 32
CONTOUR_RADIUS = 0.05
TWO_PI_I = 2j * math.pi


def as_tau(tau):
	"""Return tau as a complex number, checking that Im(tau) > 0.

	Anything convertible with complex() is accepted, including ModularParam.
	"""
	try:
		value = complex(tau)
	except (TypeError, ValueError):
		raise DomainError('tau must be a complex number, not {!r}'.format(tau))
	if not value.imag > 0:
		raise DomainError('Im(tau) must be positive, got {}'.format(value))
	return value


def check_order(name, value, minimum=1):
	"""Check that value is an integer >= minimum and return it as an int."""
	if isinstance(value, bool) or not isinstance(value, numbers.Integral):
		raise DomainError('{} must be an integer, not {!r}'.format(name, value))
	if value < minimum:
		raise DomainError('{} must be >= {}, got {}'.format(name, minimum, value))
	return int(value)


def e(x):
	"""Return exp(2πi·x), elementwise for arrays."""
	if np.ndim(x) == 0:
		return cmath.exp(TWO_PI_I * complex(x))
	return np.exp(TWO_PI_I * np.asarray(x, dtype=complex))


def e_m(x, m):
	"""Return exp(2πi·x/m)."""
	if np.ndim(x) == 0:
		return cmath.exp(TWO_PI_I * complex(x) / m)
	return np.exp(TWO_PI_I * np.asarray(x, dtype=complex) / m)


def lattice_coordinates(z, tau):
	"""Return real (x, y) with z = x + y·tau."""
	z = np.asarray(z, dtype=complex)
	y = z.imag / tau.imag
	x = z.real - y * tau.real
	return x, y


def nearest_lattice_point(z, tau, order=1):
	"""Find the point of (Z + τZ)/order closest to z.

	Returns:
		(distance, nearest) with the shape of z.
	"""
	tau = as_tau(tau)
	z = np.asarray(z, dtype=complex)
	x, y = lattice_coordinates(z * order, tau)
	offsets = np.array([-1, 0, 1])
	n1 = np.rint(x)[..., None, None] + offsets[:, None]
	n2 = np.rint(y)[..., None, None] + offsets[None, :]
	candidates = (n1 + n2 * tau) / order
	gaps = np.abs(z[..., None, None] - candidates)
	flat_gaps = gaps.reshape(z.shape + (9,))
	best = np.argmin(flat_gaps, axis=-1)
	distance = np.take_along_axis(flat_gaps, best[..., None], axis=-1)[..., 0]
	nearest = np.take_along_axis(
		candidates.reshape(z.shape + (9,)), best[..., None], axis=-1,
		)[..., 0]
	if z.ndim == 0:
		return float(distance), complex(nearest)
	return distance, nearest


def _raise_closest(z, distance, nearest, eps, context):
	if np.ndim(distance) == 0:
		if distance < eps:
			raise PoleError(complex(z), complex(nearest), context)
		return
	bad = np.flatnonzero(np.asarray(distance) < eps)
	if bad.size:
		k = bad[0]
		raise PoleError(
			complex(np.ravel(z)[k]),
			complex(np.ravel(nearest)[k]),
			context,
			)


def guard_poles(z, tau, order=1, eps=POLE_EPS, context=None):
	"""Raise PoleError if any entry of z is within eps of (Z + τZ)/order."""
	distance, nearest = nearest_lattice_point(z, tau, order)
	_raise_closest(z, distance, nearest, eps, context)


def guard_line_poles(z, period=1, eps=POLE_EPS, context=None):
	"""Raise PoleError if any entry of z is within eps of period·Z.

	With period None the only pole is 0 (rational functions).
	"""
	z = np.asarray(z, dtype=complex)
	if period is None:
		nearest = np.zeros_like(z)
	else:
		nearest = period * np.rint(z.real / period) + 0j
	_raise_closest(z, np.abs(z - nearest), nearest, eps, context)


def _nodes(nodes):
	angles = 2 * math.pi * np.arange(nodes) / nodes
	return np.exp(1j * angles)


def contour_derivative(
		func,
		z,
		order=1,
		radius=CONTOUR_RADIUS,
		nodes=CONTOUR_NODES,
		):
	"""Differentiate a holomorphic function with the trapezoidal Cauchy formula.

	f^(k)(z) = k!/(n r^k) Σ_j f(z + r·w_j) w_j^(-k) with w_j the n-th roots
	of unity. The error decays like (r/d)^n, d the distance from z to the
	nearest singularity of func, so radius must be well inside d.

	Args:
		func: Callable accepting a numpy array of complex points and returning
			one value (scalar or array) per point, stacked along the first axis.
		z: The (scalar) point.
		order: Derivative order k >= 1.
		radius: Contour radius r.
		nodes: Number of trapezoid nodes n.
	"""
	w = _nodes(nodes)
	values = np.asarray(func(z + radius * w), dtype=complex)
	weights = (w ** (-order)).reshape((nodes, ) + (1, ) * (values.ndim - 1))
	total = np.sum(values * weights, axis=0)
	result = math.factorial(order) * total / (nodes * radius ** order)
	if np.ndim(result) == 0:
		return complex(result)
	return result


def mixed_contour_derivative(
		func,
		x,
		y,
		radius=CONTOUR_RADIUS,
		nodes=CONTOUR_NODES,
		):
	"""Return ∂x∂y func(x, y) from a product of two Cauchy contours.

	func must broadcast over numpy arrays in both arguments.
	"""
	w = _nodes(nodes)
	values = np.asarray(
		func(x + radius * w[:, None], y + radius * w[None, :]),
		dtype=complex,
		)
	weights = np.outer(1 / w, 1 / w)
	return complex(np.sum(values * weights) / (nodes * radius) ** 2)


def sample_cell(rng, tau, size=None):
	"""Draw points uniformly from the fundamental cell {x + y·tau : 0 <= x, y < 1}."""
	x = rng.random(size)
	y = rng.random(size)
	return x + y * tau


def relative_residual(lhs, rhs):
	"""Return (max-abs, Frobenius) residuals of lhs - rhs relative to the larger side."""
	lhs = np.asarray(lhs, dtype=complex)
	rhs = np.asarray(rhs, dtype=complex)
	diff = lhs - rhs
	scale_max = max(np.max(np.abs(lhs), initial=0.0), np.max(np.abs(rhs), initial=0.0))
	scale_fro = max(np.linalg.norm(lhs), np.linalg.norm(rhs))
	if scale_max == 0:
		return 0.0, 0.0
	max_abs = float(np.max(np.abs(diff), initial=0.0) / scale_max)
	frobenius = float(np.linalg.norm(diff) / scale_fro)
	return max_abs, frobenius
