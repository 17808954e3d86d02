"""The elliptic R-matrices: vertex, Felder (dynamical) and intermediate.

Every builder returns a dense (N², N²) complex array acting on V ⊗ V with
V = C^p ⊗ C^l and N = p·l. The dynamical vector u has p entries and only
its differences u_ij = u_i - u_j enter.
"""
import logging

import numpy as np

from ._util import as_tau, check_order
from .elliptic import phi, phi_deformed
from .exceptions import DomainError, PoleError
from .heisenberg import lattice, t_matrix, tensor_unit

__all__ = (
	'FAMILIES',
	'ELLIPTIC_FAMILIES',
	'RMatrixSpec',
	'as_dynamical',
	'assemble',
	'build_vertex',
	'build_felder',
	'build_intermediate',
	)

logger = logging.getLogger(__name__)

FAMILIES = ('vertex', 'felder', 'intermediate', 'trig', 'rational')
ELLIPTIC_FAMILIES = ('vertex', 'felder', 'intermediate')


def as_dynamical(u, p):
	"""Return u as a complex array of length p."""
	if u is None:
		u = np.zeros(p)
	u = np.asarray(u, dtype=complex).reshape(-1)
	if u.shape != (p, ):
		raise DomainError('dynamical vector must have {} entries, got {}'.format(p, u.shape[0]))
	return u


def _pole_context(error, context):
	return error.with_context(context)


def build_vertex(N, z, hbar, tau):
	"""Return the vertex R-matrix Σ_a φ_a(ħ, z) T_a ⊗ T_-a over a ∈ Γ_N."""
	N = check_order('N', N)
	tau = as_tau(tau)
	r = np.zeros((N * N, N * N), dtype=complex)
	for a in lattice(N):
		coefficient = phi_deformed(a, N, hbar, z, tau)
		r += coefficient * np.kron(t_matrix(a.a1, a.a2, N), t_matrix(-a.a1, -a.a2, N))
	return r


def build_felder(N, u, z, hbar, tau):
	"""Return the Felder R-matrix.

	R = Σ_ij φ(u_ij + δ_ij ħ, z) E_ij ⊗ E_ji + Σ_(μ≠ν) φ(-u_μν, ħ) E_μμ ⊗ E_νν
	"""
	N = check_order('N', N)
	tau = as_tau(tau)
	u = as_dynamical(u, N)
	r = np.zeros((N * N, N * N), dtype=complex)
	for i in range(N):
		for j in range(N):
			shift = hbar if i == j else 0
			try:
				r[i * N + j, j * N + i] += phi(u[i] - u[j] + shift, z, tau)
				if i != j:
					r[i * N + j, i * N + j] += phi(-(u[i] - u[j]), hbar, tau)
			except PoleError as error:
				raise _pole_context(error, 'pair ({}, {})'.format(i, j)) from None
	return r


def assemble(p, l, r_coefficient, rho_coefficient):
	"""Assemble Σ r^a_ij E^a_ij ⊗ E^-a_ji + Σ_(μ≠ν) ρ_μν E⁰_μμ ⊗ E⁰_νν.

	Args:
		p: Size of the gl(p) factor.
		l: Order of the Heisenberg factor.
		r_coefficient: Callable (i, j, a) -> complex, a a reduced LatticeIndex.
		rho_coefficient: Callable (i, j) -> complex, called for i != j.
	"""
	n = p * l
	r = np.zeros((n * n, n * n), dtype=complex)
	for i in range(p):
		for j in range(p):
			for a in lattice(l):
				try:
					coefficient = r_coefficient(i, j, a)
				except PoleError as error:
					raise _pole_context(error, 'term ({}, {}, {})'.format(i, j, tuple(a))) from None
				r += coefficient * np.kron(
					tensor_unit((i, j, a), p, l),
					tensor_unit((j, i, a), p, l, negate=True),
					)
	zero = (0, 0)
	for i in range(p):
		for j in range(p):
			if i == j:
				continue
			try:
				coefficient = rho_coefficient(i, j)
			except PoleError as error:
				raise _pole_context(error, 'cartan term ({}, {})'.format(i, j)) from None
			r += coefficient * np.kron(
				tensor_unit((i, i, zero), p, l),
				tensor_unit((j, j, zero), p, l),
				)
	return r


def build_intermediate(p, l, u, z, hbar, tau, cartan_weight=None):
	"""Return the intermediate R-matrix for gl(N), N = p·l.

	r^a_ij = φ_-a(-u_ij - δ_ij ħ, z) over the order-l lattice and
	ρ_ij = w·φ(-l·u_ij, l·ħ). The default weight w = -l makes R unitary and a
	solution of the dynamical Yang-Baxter equation; w = 1 gives the variant
	without the factor.
	"""
	p = check_order('p', p)
	l = check_order('l', l)
	tau = as_tau(tau)
	u = as_dynamical(u, p)
	weight = -l if cartan_weight is None else cartan_weight

	def r_coefficient(i, j, a):
		shift = hbar if i == j else 0
		return phi_deformed((-a.a1, -a.a2), l, -(u[i] - u[j]) - shift, z, tau)

	def rho_coefficient(i, j):
		return weight * phi(-l * (u[i] - u[j]), l * hbar, tau)

	return assemble(p, l, r_coefficient, rho_coefficient)


class RMatrixSpec:
	"""Which R-matrix to build: family, sizes, modular and Planck parameters.

	Vertex requires p = 1, felder requires l = 1. The trig and rational
	families take no τ.
	"""

	__slots__ = ('family', 'p', 'l', 'tau', 'hbar', 'cartan_weight')

	def __init__(self, family, p, l, tau=None, hbar=0.1, cartan_weight=None):
		if family not in FAMILIES:
			raise DomainError('unknown family {!r}, expected one of {}'.format(family, FAMILIES))
		p = check_order('p', p)
		l = check_order('l', l)
		if family == 'vertex' and p != 1:
			raise DomainError('the vertex family requires p = 1')
		if family == 'felder' and l != 1:
			raise DomainError('the felder family requires l = 1')
		if family in ELLIPTIC_FAMILIES:
			tau = as_tau(tau)
		elif tau is not None:
			tau = as_tau(tau)
		self.family = family
		self.p = p
		self.l = l
		self.tau = tau
		self.hbar = complex(hbar)
		self.cartan_weight = cartan_weight

	@classmethod
	def vertex(cls, n, tau, hbar=0.1):
		return cls('vertex', 1, n, tau, hbar)

	@classmethod
	def felder(cls, n, tau, hbar=0.1):
		return cls('felder', n, 1, tau, hbar)

	@property
	def n(self):
		"""N = p·l, the dimension of V."""
		return self.p * self.l

	@property
	def dynamical(self):
		"""Whether R depends on u."""
		return self.family != 'vertex' and self.p > 1

	def build(self, u=None, z=0.3, hbar=None):
		"""Build R(u, z) at this spec's ħ (or the given one)."""
		# local import: limits builds on this module
		from .limits import build_rational, build_trig

		hbar = self.hbar if hbar is None else hbar
		if self.family == 'vertex':
			return build_vertex(self.n, z, hbar, self.tau)
		if self.family == 'felder':
			return build_felder(self.n, u, z, hbar, self.tau)
		if self.family == 'intermediate':
			return build_intermediate(
				self.p, self.l, u, z, hbar, self.tau, cartan_weight=self.cartan_weight,
				)
		if self.family == 'trig':
			return build_trig(self.p, self.l, u, z, hbar, cartan_weight=self.cartan_weight)
		return build_rational(self.p, self.l, u, z, hbar, cartan_weight=self.cartan_weight)

	def replace(self, **changes):
		"""Return a copy with some fields changed."""
		fields = {name: getattr(self, name) for name in self.__slots__}
		fields.update(changes)
		return RMatrixSpec(**fields)

	def to_dict(self):
		return {
			'family': self.family,
			'p': self.p,
			'l': self.l,
			'tau': self.tau,
			'hbar': self.hbar,
			'cartan_weight': self.cartan_weight,
			}

	def __eq__(self, other):
		if isinstance(other, RMatrixSpec):
			return self.to_dict() == other.to_dict()
		return NotImplemented

	def __hash__(self):
		return hash(tuple(self.to_dict().items()))

	def __repr__(self):
		return '{class_name}({family!r}, p={p}, l={l}, tau={tau!r}, hbar={hbar!r})'.format(
			class_name=self.__class__.__name__,
			family=self.family,
			p=self.p,
			l=self.l,
			tau=self.tau,
			hbar=self.hbar,
			)
