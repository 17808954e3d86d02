"""The finite Heisenberg group, its T_a basis and the tensor basis E^a_ij.

All operators are dense complex numpy arrays. Indices are zero-based: the
basis vector (i, α) of V = C^p ⊗ C^l sits at position i·l + α, gl(p) being
the outer Kronecker factor.
"""
import itertools
import logging
import math

import numpy as np

from ._util import TWO_PI_I, check_order, e_m
from .exceptions import DomainError, NumericError

__all__ = (
	'LatticeIndex',
	'BasisElement',
	'lattice',
	'cross',
	'clock_matrix',
	'shift_matrix',
	't_matrix',
	't_basis',
	'kappa',
	'structure_constant',
	'trace_pairing',
	'boundary_twists',
	'tensor_unit',
	'interleaver',
	'check_interleaver',
	'weight_of',
	'block_diagonal_cartan',
	'swap_operator',
	'embed',
	)

logger = logging.getLogger(__name__)


class LatticeIndex:
	"""A point a = (a₁, a₂) of Γ_m = (Z/mZ)², stored reduced.

	Unpacks like a pair:

	>>> a1, a2 = LatticeIndex(5, -1, 3)
	>>> (a1, a2)
	(2, 2)
	"""

	__slots__ = ('a1', 'a2', 'm')

	def __init__(self, a1, a2, m):
		m = check_order('m', m)
		self.a1 = int(a1) % m
		self.a2 = int(a2) % m
		self.m = m

	def __iter__(self):
		yield self.a1
		yield self.a2

	def _check_same(self, other):
		if not isinstance(other, LatticeIndex):
			raise TypeError('expected a LatticeIndex, got {!r}'.format(other))
		if other.m != self.m:
			raise DomainError('lattice orders differ: {} != {}'.format(self.m, other.m))

	def __add__(self, other):
		self._check_same(other)
		return LatticeIndex(self.a1 + other.a1, self.a2 + other.a2, self.m)

	def __sub__(self, other):
		self._check_same(other)
		return LatticeIndex(self.a1 - other.a1, self.a2 - other.a2, self.m)

	def __neg__(self):
		return LatticeIndex(-self.a1, -self.a2, self.m)

	def is_zero(self):
		return self.a1 == 0 and self.a2 == 0

	def __eq__(self, other):
		if isinstance(other, LatticeIndex):
			return (self.a1, self.a2, self.m) == (other.a1, other.a2, other.m)
		return NotImplemented

	def __hash__(self):
		return hash((LatticeIndex, self.a1, self.a2, self.m))

	def __repr__(self):
		return '{class_name}({a1}, {a2}, {m})'.format(
			class_name=self.__class__.__name__,
			a1=self.a1,
			a2=self.a2,
			m=self.m,
			)


class BasisElement:
	"""Label of E^a_ij = E_ij ⊗ T_a with 0 <= i, j < p and a in Γ_l."""

	__slots__ = ('i', 'j', 'a')

	def __init__(self, i, j, a):
		self.i = int(i)
		self.j = int(j)
		self.a = a

	def __iter__(self):
		yield self.i
		yield self.j
		yield self.a

	def __eq__(self, other):
		if isinstance(other, BasisElement):
			return tuple(self) == tuple(other)
		return NotImplemented

	def __hash__(self):
		return hash((BasisElement, self.i, self.j, self.a))

	def __repr__(self):
		return '{class_name}({i}, {j}, {a!r})'.format(
			class_name=self.__class__.__name__,
			i=self.i,
			j=self.j,
			a=self.a,
			)


def lattice(m, include_zero=True):
	"""Iterate over Γ_m (or Γ̃_m = Γ_m minus zero) in a₁-major order."""
	m = check_order('m', m)
	for a1, a2 in itertools.product(range(m), repeat=2):
		if include_zero or a1 or a2:
			yield LatticeIndex(a1, a2, m)


def cross(a, b):
	"""Return a × b = a₁b₂ - a₂b₁ for any two integer pairs."""
	a1, a2 = a
	b1, b2 = b
	return a1 * b2 - a2 * b1


def clock_matrix(m):
	"""Return Q = diag(e_m(1), ..., e_m(m-1), 1)."""
	m = check_order('m', m)
	return np.diag(e_m(np.arange(1, m + 1), m))


def shift_matrix(m):
	"""Return the cyclic shift Λ with ones at (k, k+1 mod m)."""
	m = check_order('m', m)
	return np.roll(np.eye(m, dtype=complex), 1, axis=1)


def _clock_power(k, m):
	return np.diag(e_m(k * np.arange(1, m + 1), m))


def _shift_power(k, m):
	return np.roll(np.eye(m, dtype=complex), k, axis=1)


def t_matrix(a1, a2, m):
	"""Return T = (m/2πi)·e_m(a₁a₂/2)·Q^a₁·Λ^a₂ for unreduced integers a₁, a₂.

	Shifting a by m·Z² changes T by a sign, so products like T_a ⊗ T_-a are
	built from one integer representative and its exact negation.
	"""
	m = check_order('m', m)
	a1 = int(a1)
	a2 = int(a2)
	prefactor = m / TWO_PI_I * e_m(a1 * a2 / 2, m)
	return prefactor * _clock_power(a1, m) @ _shift_power(a2, m)


def t_basis(a, m=None):
	"""Return T_a for a in Γ_m, using the reduced representative.

	Args:
		a: A LatticeIndex, or an integer pair together with m.
		m: The lattice order; defaults to a.m.
	"""
	if isinstance(a, LatticeIndex):
		if m is not None and m != a.m:
			raise DomainError('lattice orders differ: {} != {}'.format(a.m, m))
		m = a.m
	elif m is None:
		raise DomainError('m is required for a plain pair')
	a = LatticeIndex(*a, m)
	return t_matrix(a.a1, a.a2, m)


def kappa(a, b, m=None):
	"""Return the cocycle κ_a,b = (m/2πi)·e_m(-(a × b)/2).

	T_a·T_b = κ_a,b·T_(a+b), with T_(a+b) built from the integer sum a + b.
	"""
	orders = {x.m for x in (a, b) if isinstance(x, LatticeIndex)}
	if m is not None:
		orders.add(m)
	if len(orders) > 1:
		raise DomainError('mismatched lattice orders {}'.format(sorted(orders)))
	if not orders:
		raise DomainError('m is required for plain pairs')
	m = orders.pop()
	return m / TWO_PI_I * e_m(-cross(a, b) / 2, m)


def structure_constant(a, b, m):
	"""Return C with [T_a, T_b] = C·T_(a+b): C = -(m/π)·sin(π(a × b)/m)."""
	return -m / math.pi * math.sin(math.pi * cross(a, b) / m)


def trace_pairing(a, b, m):
	"""Return tr(T_a·T_b); it vanishes unless a + b = 0 in Γ_m.

	tr(T_a·T_-a) = m·(m/2πi)² for the unreduced negation of a.
	"""
	a1, a2 = a
	b1, b2 = b
	return complex(np.trace(t_matrix(a1, a2, m) @ t_matrix(b1, b2, m)))


def boundary_twists(p, l, u=None):
	"""Return the transition operators of the intermediate bundle on C^p ⊗ C^l.

	The first is 1_p ⊗ Q_l (the A-cycle), the second D_u·(1_p ⊗ Λ_l) with
	D_u = diag(e(u_1), ..., e(u_p)) ⊗ 1_l (the B-cycle).
	"""
	p = check_order('p', p)
	l = check_order('l', l)
	u = np.zeros(p) if u is None else np.asarray(u, dtype=complex)
	if u.shape != (p, ):
		raise DomainError('u must have {} entries'.format(p))
	twist = np.kron(np.diag(np.exp(TWO_PI_I * u)), np.eye(l))
	return np.kron(np.eye(p), clock_matrix(l)), twist @ np.kron(np.eye(p), shift_matrix(l))


def _unit(i, j, n):
	unit = np.zeros((n, n), dtype=complex)
	unit[i, j] = 1
	return unit


def tensor_unit(e, p, l, negate=False):
	"""Return the N×N matrix E^a_ij = E_ij ⊗ T_a, N = p·l.

	Args:
		e: A BasisElement (or a triple (i, j, a)); a is a LatticeIndex over Γ_l
			or an integer pair.
		p: Size of the gl(p) factor.
		l: Order of the Heisenberg factor.
		negate: Use T_-a built from the exact negation of a's integers.
	"""
	p = check_order('p', p)
	l = check_order('l', l)
	i, j, a = e
	if not (0 <= i < p and 0 <= j < p):
		raise DomainError('indices ({}, {}) out of range for p={}'.format(i, j, p))
	if isinstance(a, LatticeIndex) and a.m != l:
		raise DomainError('lattice order {} does not match l={}'.format(a.m, l))
	a1, a2 = a
	if negate:
		a1, a2 = -a1, -a2
	return np.kron(_unit(i, j, p), t_matrix(a1, a2, l))


def weight_of(k, p, l):
	"""Return the gl(p) weight index i of basis vector k = i·l + α."""
	return k // l


def block_diagonal_cartan(x, l):
	"""Return diag(x) ⊗ 1_l, an element of the invariant Cartan h̃₀."""
	x = np.asarray(x, dtype=complex)
	return np.kron(np.diag(x), np.eye(l))


def _periodic_cartan(x, l):
	# diag(x₁..x_p, x₁..x_p, ...): the form that commutes with Q and Λ^p
	return np.diag(np.tile(np.asarray(x, dtype=complex), l))


def _permutation(targets):
	n = len(targets)
	perm = np.zeros((n, n), dtype=complex)
	for k, target in enumerate(targets):
		perm[target, k] = 1
	return perm


def check_interleaver(s, p, l, tol=1e-12):
	"""Verify the three conjugation identities for a candidate S.

	S·u·S⁻¹ is block-constant for u = diag(u₁..u_p, u₁..u_p, ...),
	S·Λ^p·S⁻¹ = ⊕ Λ_l and S·Q·S⁻¹ = ⊕ c_J·Q_l for scalars c_J.
	"""
	n = p * l
	s_inv = s.conj().T
	weights = np.arange(1, p + 1) * (1 + 0.5j)
	expected = block_diagonal_cartan(weights, l)
	if np.max(np.abs(s @ _periodic_cartan(weights, l) @ s_inv - expected)) > tol:
		return False
	shift = s @ np.linalg.matrix_power(shift_matrix(n), p) @ s_inv
	if np.max(np.abs(shift - np.kron(np.eye(p), shift_matrix(l)))) > tol:
		return False
	clock = s @ clock_matrix(n) @ s_inv
	q_l = clock_matrix(l)
	for block in range(p):
		piece = clock[block * l:(block + 1) * l, block * l:(block + 1) * l]
		scalar = piece[0, 0] / q_l[0, 0]
		if np.max(np.abs(piece - scalar * q_l)) > tol:
			return False
	off_blocks = clock - np.kron(np.eye(p), np.ones((l, l))) * clock
	return bool(np.max(np.abs(off_blocks)) <= tol)


def interleaver(p, l):
	"""Find the permutation S regrouping C^N, N = p·l, into p blocks of size l.

	Candidates send position α·p + J to J·l + (α + s) mod l for each shift s;
	the first one satisfying check_interleaver is returned.

	Raises:
		NumericError: If no candidate satisfies the identities.
	"""
	p = check_order('p', p)
	l = check_order('l', l)
	for s in range(l):
		targets = [
			(k % p) * l + (k // p + s) % l
			for k in range(p * l)
			]
		candidate = _permutation(targets)
		if check_interleaver(candidate, p, l):
			logger.debug('interleaver for p=%d, l=%d found at shift %d', p, l, s)
			return candidate
	raise NumericError('no interleaving permutation found for p={}, l={}'.format(p, l))


def swap_operator(n):
	"""Return the flip P of C^n ⊗ C^n, P(x ⊗ y) = y ⊗ x."""
	n = check_order('n', n)
	swap = np.zeros((n * n, n * n), dtype=complex)
	for i, j in itertools.product(range(n), repeat=2):
		swap[j * n + i, i * n + j] = 1
	return swap


def embed(op, legs, n):
	"""Embed an operator on two tensor legs into V ⊗ V ⊗ V.

	Args:
		op: An (n², n²) operator acting on legs (i, j) in that order.
		legs: Two distinct leg numbers out of 0, 1, 2; (1, 0) embeds P·op·P.
		n: Dimension of V.
	"""
	i, j = legs
	if i == j or not {i, j} <= {0, 1, 2}:
		raise DomainError('invalid legs {}'.format(legs))
	k = ({0, 1, 2} - {i, j}).pop()
	full = np.einsum('abcd,ef->abecdf', op.reshape(n, n, n, n), np.eye(n))
	order = [i, j, k]
	perm = [order.index(t) for t in range(3)]
	perm = perm + [3 + x for x in perm]
	return full.transpose(perm).reshape(n ** 3, n ** 3)
