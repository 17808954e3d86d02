"""Theta functions, Eisenstein functions and the Kronecker function φ.

Everything here works on complex scalars and, where noted, elementwise on
numpy arrays of arguments. The modular parameter is always a scalar.

The odd theta function is

	ϑ(z|τ) = Σ_j exp(πi (j+½)² τ + 2πi (j+½)(z+½))

so that ϑ(z+1) = -ϑ(z) and ϑ(z+τ) = -q^(-1/2) e^(-2πiz) ϑ(z), q = e^(2πiτ).
"""
from fractions import Fraction
import logging
import math

import numpy as np

from ._util import (
	POLE_EPS,
	TWO_PI_I,
	as_tau,
	check_order,
	e,
	e_m,
	guard_line_poles,
	guard_poles,
	)
from .exceptions import DomainError, PoleError

__all__ = (
	'DEFAULT_TOL',
	'ModularParam',
	'Characteristics',
	'theta',
	'theta_char',
	'theta_derivative',
	'theta_product',
	'dedekind_eta',
	'eisenstein',
	'eta1',
	'eta1_series',
	'weierstrass_zeta',
	'weierstrass_p',
	'weierstrass_p_series',
	'omega',
	'phi',
	'phi_u_derivative',
	'phi_deformed',
	'phi_trig',
	'phi_deformed_trig',
	'phi_rational',
	)

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12
MAX_TERMS = 4000


class ModularParam:
	"""The modular parameter τ of the elliptic curve C/(Z + τZ).

	Converts to complex, so it can be passed anywhere a τ is expected.
	"""

	__slots__ = ('_tau', )

	def __init__(self, tau):
		"""Create a ModularParam, raising DomainError unless Im(tau) > 0."""
		self._tau = as_tau(tau)

	@property
	def tau(self):
		"""The complex value of τ."""
		return self._tau

	@property
	def q(self):
		"""The nome q = exp(2πiτ)."""
		return e(self._tau)

	def __complex__(self):
		return self._tau

	def __eq__(self, other):
		if isinstance(other, ModularParam):
			return self._tau == other._tau
		return NotImplemented

	def __hash__(self):
		return hash((ModularParam, self._tau))

	def __repr__(self):
		return '{class_name}({tau!r})'.format(
			class_name=self.__class__.__name__,
			tau=self._tau,
			)


class Characteristics:
	"""Rational characteristics [a; b] of a theta function, stored exactly."""

	__slots__ = ('a', 'b')

	def __init__(self, a, b):
		self.a = Fraction(a)
		self.b = Fraction(b)

	def __iter__(self):
		yield self.a
		yield self.b

	def __eq__(self, other):
		if isinstance(other, Characteristics):
			return (self.a, self.b) == (other.a, other.b)
		return NotImplemented

	def __hash__(self):
		return hash((Characteristics, self.a, self.b))

	def __repr__(self):
		return '{class_name}({a!r}, {b!r})'.format(
			class_name=self.__class__.__name__,
			a=self.a,
			b=self.b,
			)


ODD = Characteristics(Fraction(1, 2), Fraction(1, 2))


def _cutoff(z, tau, a, tol):
	# Terms decay like exp(-π Im τ (n - n*)²) around n* = -Im z / Im τ.
	span = np.max(np.abs(np.asarray(z).imag), initial=0.0) / tau.imag + abs(a)
	width = math.sqrt(math.log(100 / tol) / (math.pi * tau.imag))
	cutoff = int(math.ceil(span + width)) + 2
	if cutoff > MAX_TERMS:
		logger.warning('theta series capped at %d terms for tau=%s', MAX_TERMS, tau)
		cutoff = MAX_TERMS
	return cutoff


def _theta_series(a, b, z, tau, derivative=0, tol=DEFAULT_TOL):
	z = np.asarray(z, dtype=complex)
	a = float(a)
	b = float(b)
	cutoff = _cutoff(z, tau, a, tol)
	n = np.arange(-cutoff, cutoff + 1) + a
	phase = math.pi * 1j * n * n * tau + TWO_PI_I * n * (z[..., None] + b)
	terms = np.exp(phase)
	if derivative:
		terms = terms * (TWO_PI_I * n) ** derivative
	total = terms.sum(axis=-1)
	if z.ndim == 0:
		return complex(total)
	return total


def theta(z, tau, tol=DEFAULT_TOL):
	"""Evaluate the odd theta function ϑ(z|τ) by its series.

	>>> abs(theta(0, 1j)) < 1e-15
	True
	"""
	return _theta_series(ODD.a, ODD.b, z, as_tau(tau), tol=tol)


def theta_derivative(k, z, tau, tol=DEFAULT_TOL):
	"""Return the k-th z-derivative of ϑ(z|τ) from the term-wise differentiated series."""
	k = check_order('k', k, minimum=0)
	return _theta_series(ODD.a, ODD.b, z, as_tau(tau), derivative=k, tol=tol)


def theta_char(a, b, z, tau, derivative=0, tol=DEFAULT_TOL):
	"""Evaluate the theta function with rational characteristics [a; b].

	θ[a; b](z|τ) = Σ_j exp(πi (j+a)² τ + 2πi (j+a)(z+b)).

	Args:
		a: Rational characteristic (anything Fraction accepts).
		b: Rational characteristic.
		z: Complex argument or array of arguments.
		tau: The modular parameter.
		derivative: Order of the z-derivative to return.
		tol: Truncation tolerance for the series.
	"""
	a = Fraction(a)
	b = Fraction(b)
	derivative = check_order('derivative', derivative, minimum=0)
	return _theta_series(a, b, z, as_tau(tau), derivative=derivative, tol=tol)


def theta_product(z, tau, tol=DEFAULT_TOL):
	"""Evaluate ϑ(z|τ) by its Jacobi triple product.

	-2 q^(1/8) sin(πz) Π_n (1 - q^n)(1 - q^n w)(1 - q^n/w), w = e^(2πiz).
	Used as an independent oracle for the series.
	"""
	tau = as_tau(tau)
	z = complex(z)
	q = e(tau)
	w = e(z)
	growth = max(abs(w), 1 / abs(w))
	value = -2 * np.exp(math.pi * 1j * tau / 4) * np.sin(math.pi * z)
	n = 1
	while abs(q) ** n * growth > tol * 1e-2 or abs(q) ** n > tol * 1e-2:
		qn = q ** n
		value *= (1 - qn) * (1 - qn * w) * (1 - qn / w)
		n += 1
		if n > MAX_TERMS:
			break
	return complex(value)


def dedekind_eta(tau, tol=DEFAULT_TOL):
	"""Return the Dedekind function η(τ) = q^(1/24) Π (1 - q^n)."""
	tau = as_tau(tau)
	q = e(tau)
	value = np.exp(TWO_PI_I * tau / 24)
	n = 1
	while abs(q) ** n > tol * 1e-2:
		value *= 1 - q ** n
		n += 1
	return complex(value)


def _log_derivatives(z, tau, order, tol):
	base = theta(z, tau, tol=tol)
	return [theta_derivative(k, z, tau, tol=tol) / base for k in range(1, order + 1)]


def eisenstein(j, z, tau, eps=POLE_EPS, tol=DEFAULT_TOL):
	"""Return the Eisenstein function E_j(z|τ), for 1 <= j <= 4.

	E_1 = ∂ log ϑ and E_(j+1) = -(1/j) ∂ E_j. They are assembled from the
	ratios L_k = ϑ^(k)/ϑ, so no numerical differencing is involved.

	Raises:
		DomainError: If j is outside 1..4.
		PoleError: If z is within eps of the lattice.
	"""
	j = check_order('j', j)
	if j > 4:
		raise DomainError('Eisenstein functions are implemented for j <= 4')
	tau = as_tau(tau)
	guard_poles(z, tau, eps=eps, context='E{}'.format(j))
	ratios = _log_derivatives(z, tau, j, tol)
	l1 = ratios[0]
	if j == 1:
		return l1
	l2 = ratios[1]
	if j == 2:
		return l1 * l1 - l2
	l3 = ratios[2]
	if j == 3:
		return -(3 * l1 * l2 - 2 * l1 ** 3 - l3) / 2
	l4 = ratios[3]
	return (3 * l2 * l2 - 12 * l1 * l1 * l2 + 4 * l1 * l3 + 6 * l1 ** 4 - l4) / 6


def eta1(tau, tol=DEFAULT_TOL):
	"""Return η₁(τ) = -ϑ'''(0)/(6ϑ'(0)), so that E₁(z) = 1/z - 2η₁z + O(z³)."""
	tau = as_tau(tau)
	return -theta_derivative(3, 0, tau, tol) / (6 * theta_derivative(1, 0, tau, tol))


def eta1_series(tau, tol=DEFAULT_TOL):
	"""Return η₁(τ) = (π²/6)(1 - 24 Σ n qⁿ/(1 - qⁿ)), an independent oracle."""
	tau = as_tau(tau)
	q = e(tau)
	total = 0j
	n = 1
	while n * abs(q) ** n > tol * 1e-2:
		total += n * q ** n / (1 - q ** n)
		n += 1
	return math.pi ** 2 / 6 * (1 - 24 * total)


def weierstrass_zeta(z, tau, eps=POLE_EPS):
	"""Weierstrass ζ for the lattice Z + τZ: ζ(z) = E₁(z) + 2η₁z."""
	return eisenstein(1, z, tau, eps=eps) + 2 * eta1(tau) * np.asarray(z)


def weierstrass_p(z, tau, eps=POLE_EPS):
	"""Weierstrass ℘ for the lattice Z + τZ: ℘(z) = E₂(z) - 2η₁."""
	return eisenstein(2, z, tau, eps=eps) - 2 * eta1(tau)


def weierstrass_p_series(z, tau, tol=DEFAULT_TOL):
	"""Independent q-series for ℘(z), valid for |Im z| < Im τ.

	E₂(z) = π²/sin²(πz) + (2πi)² Σ_n [qⁿw/(1-qⁿw)² + qⁿw⁻¹/(1-qⁿw⁻¹)²].
	"""
	tau = as_tau(tau)
	z = complex(z)
	if not abs(z.imag) < tau.imag:
		raise DomainError('series oracle needs |Im z| < Im tau')
	q = e(tau)
	w = e(z)
	total = 0j
	n = 1
	while True:
		x = q ** n * w
		y = q ** n / w
		step = x / (1 - x) ** 2 + y / (1 - y) ** 2
		total += step
		if abs(step) < tol * 1e-2 or n > MAX_TERMS:
			break
		n += 1
	e2 = (math.pi / np.sin(math.pi * z)) ** 2 + TWO_PI_I ** 2 * total
	return complex(e2 - 2 * eta1_series(tau, tol))


def omega(a, m, tau):
	"""Return the point ω_a = (a₁ + a₂τ)/m of the order-m lattice."""
	a1, a2 = a
	return (a1 + a2 * as_tau(tau)) / m


def phi(u, z, tau, eps=POLE_EPS, tol=DEFAULT_TOL):
	"""Return the Kronecker function φ(u, z) = ϑ(u+z)ϑ'(0)/(ϑ(u)ϑ(z)).

	φ is symmetric in its arguments and has simple poles at u ∈ Λ and z ∈ Λ
	with unit residue. Broadcasts over numpy arrays.

	Raises:
		PoleError: If u or z is within eps of the lattice.
	"""
	tau = as_tau(tau)
	guard_poles(u, tau, eps=eps, context='phi: u')
	guard_poles(z, tau, eps=eps, context='phi: z')
	u = np.asarray(u, dtype=complex)
	z = np.asarray(z, dtype=complex)
	value = (
		theta(u + z, tau, tol)
		* theta_derivative(1, 0, tau, tol)
		/ (theta(u, tau, tol) * theta(z, tau, tol))
		)
	if np.ndim(value) == 0:
		return complex(value)
	return value


def phi_u_derivative(u, z, tau, eps=POLE_EPS, tol=DEFAULT_TOL):
	"""Return f(u, z) = ∂_u φ(u, z) = φ(u, z)(E₁(u+z) - E₁(u)).

	Evaluated as ϑ'(u+z)ϑ'(0)/(ϑ(u)ϑ(z)) - φ(u,z)E₁(u), which stays finite
	where u + z hits the lattice.
	"""
	tau = as_tau(tau)
	value = phi(u, z, tau, eps=eps, tol=tol)
	u = np.asarray(u, dtype=complex)
	z = np.asarray(z, dtype=complex)
	first = (
		theta_derivative(1, u + z, tau, tol)
		* theta_derivative(1, 0, tau, tol)
		/ (theta(u, tau, tol) * theta(z, tau, tol))
		)
	result = first - value * eisenstein(1, u, tau, eps=eps, tol=tol)
	if np.ndim(result) == 0:
		return complex(result)
	return result


def phi_deformed(a, m, eta, z, tau, eps=POLE_EPS):
	"""Return φ_a(η, z) = e_m(a₂z)·φ(ω_a + η, z), ω_a = (a₁ + a₂τ)/m.

	The value only depends on a modulo m, so unreduced integer pairs are fine.

	Args:
		a: Lattice index, any pair (a1, a2) of integers.
		m: Order of the lattice.
		eta: The shift η.
		z: Spectral parameter.
		tau: Modular parameter.
	"""
	m = check_order('m', m)
	a1, a2 = a
	tau = as_tau(tau)
	try:
		value = phi(omega((a1, a2), m, tau) + np.asarray(eta), z, tau, eps=eps)
	except PoleError as error:
		raise error.with_context('a=({}, {})'.format(a1, a2)) from None
	return e_m(a2 * np.asarray(z), m) * value


def _cot(x):
	return 1 / np.tan(x)


def phi_trig(u, z, eps=POLE_EPS):
	"""The Im τ → ∞ limit of φ: π(cot πu + cot πz).

	Raises:
		PoleError: If u or z is within eps of an integer.
	"""
	guard_line_poles(u, eps=eps, context='phi_trig: u')
	guard_line_poles(z, eps=eps, context='phi_trig: z')
	return math.pi * (_cot(math.pi * np.asarray(u)) + _cot(math.pi * np.asarray(z)))


def phi_deformed_trig(a, m, eta, z, eps=POLE_EPS):
	"""The Im τ → ∞ limit of phi_deformed.

	For a₂ ≡ 0 mod m this is π(cot πz + cot π(η + a₁/m)); otherwise, with
	t = (a₂ mod m)/m, it is π e((t - ½)z)/sin πz.
	"""
	m = check_order('m', m)
	a1, a2 = a
	z = np.asarray(z)
	t = (a2 % m) / m
	context = 'a=({}, {})'.format(a1, a2)
	guard_line_poles(z, eps=eps, context=context)
	if t == 0:
		guard_line_poles(np.asarray(eta) + a1 / m, eps=eps, context=context)
		return math.pi * (_cot(math.pi * z) + _cot(math.pi * (np.asarray(eta) + a1 / m)))
	return math.pi * e((t - 0.5) * z) / np.sin(math.pi * z)


def phi_rational(u, z, eps=POLE_EPS):
	"""The rational degeneration of φ: 1/u + 1/z."""
	guard_line_poles(u, period=None, eps=eps, context='phi_rational: u')
	guard_line_poles(z, period=None, eps=eps, context='phi_rational: z')
	return 1 / np.asarray(u) + 1 / np.asarray(z)
