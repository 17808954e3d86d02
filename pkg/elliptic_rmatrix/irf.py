"""Interaction-round-a-face models built from a dynamical R-matrix.

Heights are exact vectors of Fractions in the weight space of gl(p); two
neighbouring heights differ by a weight μ_j = e_j - 𝟙/p of the vector
representation. A face is labelled clockwise from its top-left corner::

	a --μ4-- b
	|        |
	μ1       μ3
	|        |
	d --μ2-- c

with b - a = μ4, c - b = μ3, d - a = μ1 and c - d = μ2, so that
μ1 + μ2 = μ4 + μ3. The face weight is the block

	W(a, b, c, d | z) = P·R(u + ħc, z) : V[d - a] ⊗ V[c - d] → V[b - a] ⊗ V[c - b]

which is a number for l = 1 and an l² × l² matrix otherwise.

Translating every height by h is the same as moving the base dynamical
vector u to u + ħh, so face weights and partition functions depend on the
absolute heights. Only a translation along 𝟙 = (1, ..., 1) leaves them
unchanged.
"""
from fractions import Fraction
import functools
import itertools
import logging

import numpy as np

from ._util import relative_residual
from .exceptions import AdmissibilityError, DomainError, ResourceError
from .heisenberg import swap_operator
from .reports import ResidualReport
from .rmatrix import as_dynamical

__all__ = (
	'MAX_CONFIGURATIONS',
	'Height',
	'weights_of_vector_rep',
	'weight_index',
	'base_height',
	'admissible',
	'face_operator',
	'boltzmann_weight',
	'star_triangle_heights',
	'check_star_triangle',
	'seed_configuration',
	'partition_function',
	'partition_function_transfer',
	)

logger = logging.getLogger(__name__)

MAX_CONFIGURATIONS = 200000
ARGUMENTS = ('corner', 'diagonal')


class Height:
	"""A point of the weight lattice with exact rational coordinates.

	>>> Height([0, 1, 2]) - Height([1, 1, 1])
	Height(-1, 0, 1)
	"""

	__slots__ = ('coords', )

	def __init__(self, coords):
		self.coords = tuple(Fraction(x) for x in coords)
		if not self.coords:
			raise DomainError('a height needs at least one coordinate')

	def __iter__(self):
		return iter(self.coords)

	def __len__(self):
		return len(self.coords)

	def _check_same(self, other):
		if not isinstance(other, Height):
			return NotImplemented
		if len(other) != len(self):
			raise DomainError('heights of different rank: {} != {}'.format(len(self), len(other)))
		return None

	def __add__(self, other):
		if self._check_same(other) is NotImplemented:
			return NotImplemented
		return Height(x + y for x, y in zip(self, other))

	def __sub__(self, other):
		if self._check_same(other) is NotImplemented:
			return NotImplemented
		return Height(x - y for x, y in zip(self, other))

	def __mul__(self, k):
		return Height(k * x for x in self)

	__rmul__ = __mul__

	def __eq__(self, other):
		if isinstance(other, Height):
			return self.coords == other.coords
		return NotImplemented

	def __hash__(self):
		return hash((Height, self.coords))

	def to_complex(self):
		return np.array([complex(x) for x in self.coords])

	def __repr__(self):
		return '{class_name}({coords})'.format(
			class_name=self.__class__.__name__,
			coords=', '.join(str(x) for x in self.coords),
			)


def _as_height(value):
	return value if isinstance(value, Height) else Height(value)


@functools.lru_cache(maxsize=None)
def weights_of_vector_rep(n):
	"""Return μ_0, ..., μ_(n-1) with μ_j = e_j - 𝟙/n."""
	if n < 1:
		raise DomainError('rank must be positive, got {}'.format(n))
	return tuple(
		Height(Fraction(int(i == j)) - Fraction(1, n) for i in range(n))
		for j in range(n)
		)


def weight_index(difference):
	"""Return j with difference = μ_j, or None if it is not a weight."""
	n = len(difference)
	for j, mu in enumerate(weights_of_vector_rep(n)):
		if difference == mu:
			return j
	return None


def base_height(n):
	"""The generic reference height (0, 1/n, ..., (n-1)/n)."""
	return Height(Fraction(k, n) for k in range(n))


def _face_steps(a, b, c, d):
	return (
		weight_index(d - a),
		weight_index(c - d),
		weight_index(b - a),
		weight_index(c - b),
		)


def admissible(a, b, c, d):
	"""Whether every edge of the face (a, b, c, d) is a weight of the vector representation."""
	a, b, c, d = (_as_height(x) for x in (a, b, c, d))
	return None not in _face_steps(a, b, c, d)


class _FaceCache:
	"""Memoized R(u + ħ·corner, z), keyed by the corner height."""

	def __init__(self, spec, z, u=None, argument='corner'):
		if argument not in ARGUMENTS:
			raise DomainError('argument must be one of {}'.format(ARGUMENTS))
		self.spec = spec
		self.z = z
		self.u = as_dynamical(u, spec.p)
		self.argument = argument
		self._matrices = {}
		self._swap = swap_operator(spec.l)

	def rmatrix(self, a, c):
		key = (a, c) if self.argument == 'diagonal' else c
		if key not in self._matrices:
			corner = c.to_complex()
			if self.argument == 'diagonal':
				corner = corner + a.to_complex()
			self._matrices[key] = self.spec.build(self.u + self.spec.hbar * corner, self.z)
		return self._matrices[key]

	def face(self, a, b, c, d):
		a, b, c, d = (_as_height(x) for x in (a, b, c, d))
		if len(a) != self.spec.p:
			raise DomainError('heights must have {} coordinates'.format(self.spec.p))
		in_left, in_right, out_left, out_right = _face_steps(a, b, c, d)
		if None in (in_left, in_right, out_left, out_right):
			raise AdmissibilityError('face ({}, {}, {}, {}) is not admissible'.format(a, b, c, d))
		l = self.spec.l
		r = self.rmatrix(a, c).reshape(self.spec.p, l, self.spec.p, l, self.spec.p, l, self.spec.p, l)
		block = r[out_right, :, out_left, :, in_left, :, in_right, :].reshape(l * l, l * l)
		return self._swap @ block


def face_operator(a, b, c, d, z, spec, u=None, argument='corner'):
	"""Return W(a, b, c, d | z) as an l² × l² matrix.

	Args:
		a, b, c, d: Heights (or sequences) of the face corners.
		z: Spectral parameter.
		spec: A dynamical RMatrixSpec.
		u: Base dynamical vector added to ħ·c (default 0).
		argument: 'corner' evaluates R at u + ħc, 'diagonal' at u + ħ(a + c).
	Raises:
		AdmissibilityError: If the face is not admissible.
	"""
	return _FaceCache(spec, z, u, argument).face(a, b, c, d)


def boltzmann_weight(a, b, c, d, z, spec, u=None, argument='corner'):
	"""Return the scalar face weight of an l = 1 model."""
	if spec.l != 1:
		raise DomainError('scalar weights need l = 1, use face_operator')
	return complex(face_operator(a, b, c, d, z, spec, u, argument)[0, 0])


def star_triangle_heights(a, input_steps, output_steps):
	"""Return (b, c, d, e, f) for the boundary paths of a star-triangle check.

	The input path a → f → e → d takes steps μ_i for i in input_steps, the
	output path a → b → c → d the steps output_steps, which must be a
	permutation of the input ones.
	"""
	a = _as_height(a)
	if sorted(input_steps) != sorted(output_steps):
		raise DomainError('both paths must end at the same height')
	mu = weights_of_vector_rep(len(a))
	f = a + mu[input_steps[0]]
	e = f + mu[input_steps[1]]
	d = e + mu[input_steps[2]]
	b = a + mu[output_steps[0]]
	c = b + mu[output_steps[1]]
	return b, c, d, e, f


def _on_first(w, l):
	return np.kron(w, np.eye(l))


def _on_last(w, l):
	return np.kron(np.eye(l), w)


def check_star_triangle(a, b, c, d, e, f, z12, z13, z23, spec, u=None, tol=1e-9, argument='corner'):
	"""Check the star-triangle relation around the hexagon a, b, c, d, e, f.

	Σ_g W(b,c,d,g|z12) W(a,b,g,f|z13) W(f,g,d,e|z23)
		= Σ_g W(a,b,c,g|z23) W(g,c,d,e|z13) W(a,g,e,f|z12)

	as operators V[f-a] ⊗ V[e-f] ⊗ V[d-e] → V[b-a] ⊗ V[c-b] ⊗ V[d-c]. The
	factors alternate between positions (2, 3) and (1, 2) on the left side
	and between (1, 2) and (2, 3) on the right.
	A hexagon where neither sum has an admissible g is recorded as vacuous.
	"""
	a, b, c, d, e, f = (_as_height(x) for x in (a, b, c, d, e, f))
	l = spec.l
	faces = {z: _FaceCache(spec, z, u, argument) for z in (z12, z13, z23)}
	mu = weights_of_vector_rep(len(a))
	candidates = {b + m for m in mu} | {a + m for m in mu}
	lhs = np.zeros((l ** 3, l ** 3), dtype=complex)
	rhs = np.zeros((l ** 3, l ** 3), dtype=complex)
	lhs_terms = 0
	rhs_terms = 0
	for g in sorted(candidates, key=lambda h: h.coords):
		if admissible(b, c, d, g) and admissible(a, b, g, f) and admissible(f, g, d, e):
			lhs += (
				_on_last(faces[z12].face(b, c, d, g), l)
				@ _on_first(faces[z13].face(a, b, g, f), l)
				@ _on_last(faces[z23].face(f, g, d, e), l)
				)
			lhs_terms += 1
		if admissible(a, b, c, g) and admissible(g, c, d, e) and admissible(a, g, e, f):
			rhs += (
				_on_first(faces[z23].face(a, b, c, g), l)
				@ _on_last(faces[z13].face(g, c, d, e), l)
				@ _on_first(faces[z12].face(a, g, e, f), l)
				)
			rhs_terms += 1
	vacuous = lhs_terms == 0 and rhs_terms == 0
	max_abs, frobenius = relative_residual(lhs, rhs)
	report = ResidualReport(
		check='star_triangle',
		tol=tol,
		max_abs=max_abs,
		frobenius=frobenius,
		family=spec.family,
		params=dict(spec.to_dict(), heights=[str(h) for h in (a, b, c, d, e, f)]),
		samples=1,
		vacuous=vacuous,
		notes={'lhs_terms': lhs_terms, 'rhs_terms': rhs_terms, 'argument': argument},
		)
	report.gate()
	logger.info(
		'star-triangle (%s): %d + %d terms, residual %.3e',
		spec.family,
		lhs_terms,
		rhs_terms,
		max_abs,
		)
	return report


def seed_configuration(rows, cols, base=None, n=2):
	"""Return h[i][j] = base + i·μ_0 + j·μ_1 on a (rows+1) × (cols+1) grid."""
	base = base_height(n) if base is None else _as_height(base)
	if len(base) < 2:
		raise DomainError('the seed configuration needs rank >= 2')
	mu = weights_of_vector_rep(len(base))
	return [
		[base + i * mu[0] + j * mu[1] for j in range(cols + 1)]
		for i in range(rows + 1)
		]


def _check_scalar(spec):
	if spec.l != 1:
		raise DomainError('partition functions need scalar weights (l = 1)')
	if spec.p < 2:
		raise DomainError('partition functions need rank p >= 2')


def _guard(count):
	if count > MAX_CONFIGURATIONS:
		raise ResourceError('{} configurations exceed the limit {}'.format(count, MAX_CONFIGURATIONS))


def _weight_function(spec, z, u):
	cache = _FaceCache(spec, z, u)
	weights = {}

	def weight(a, b, c, d):
		key = (a, b, c, d)
		if key not in weights:
			if admissible(a, b, c, d):
				weights[key] = complex(cache.face(a, b, c, d)[0, 0])
			else:
				weights[key] = None
		return weights[key]
	return weight


def _grid_weight(h, rows, cols, weight, periodic):
	total = 1
	for i in range(rows):
		for j in range(cols):
			if periodic:
				face = (
					h[i][j],
					h[i][(j + 1) % cols],
					h[(i + 1) % rows][(j + 1) % cols],
					h[(i + 1) % rows][j],
					)
			else:
				face = (h[i][j], h[i][j + 1], h[i + 1][j + 1], h[i + 1][j])
			value = weight(*face)
			if value is None:
				return 0
			total *= value
	return total


def partition_function(rows, cols, z, spec, boundary='fixed', base=None, u=None):
	"""Sum the product of face weights over every height configuration.

	Args:
		rows, cols: Number of faces in each direction.
		z: Spectral parameter shared by all faces.
		spec: A dynamical RMatrixSpec with l = 1.
		boundary: 'fixed' keeps the border of seed_configuration and
			enumerates the interior; 'periodic' identifies opposite sides and
			fixes only h[0][0] = base.
		base: Reference height (default base_height(p)). Moving it by h gives
			the same value as moving u by ħh.
		u: Base dynamical vector.
	Raises:
		ResourceError: If the enumeration exceeds MAX_CONFIGURATIONS.
	"""
	_check_scalar(spec)
	n = spec.p
	base = base_height(n) if base is None else _as_height(base)
	mu = weights_of_vector_rep(n)
	weight = _weight_function(spec, z, u)
	if boundary == 'fixed':
		grid = seed_configuration(rows, cols, base, n)
		free = [(i, j) for i in range(1, rows) for j in range(1, cols)]
	elif boundary == 'periodic':
		grid = [[None] * cols for _ in range(rows)]
		grid[0][0] = base
		free = [(i, j) for i in range(rows) for j in range(cols) if (i, j) != (0, 0)]
	else:
		raise DomainError('unknown boundary {!r}'.format(boundary))
	_guard(n ** len(free))
	total = 0
	count = 0
	for steps in itertools.product(range(n), repeat=len(free)):
		h = [list(row) for row in grid]
		for (i, j), step in zip(free, steps):
			# each free height is one step below (or, on the top row, right of) a placed one
			h[i][j] = (h[i - 1][j] if i else h[i][j - 1]) + mu[step]
		if boundary == 'periodic' and not _edges_admissible(h, rows, cols):
			continue
		value = _grid_weight(h, rows, cols, weight, boundary == 'periodic')
		if value:
			count += 1
		total += value
	logger.debug('partition function %dx%d (%s): %d weighted configurations', rows, cols, boundary, count)
	return complex(total)


def _edges_admissible(h, rows, cols):
	for i in range(rows):
		for j in range(cols):
			if weight_index(h[i][(j + 1) % cols] - h[i][j]) is None:
				return False
			if weight_index(h[(i + 1) % rows][j] - h[i][j]) is None:
				return False
	return True


def _next_rows(row, mu, closed):
	for steps in itertools.product(range(len(mu)), repeat=len(row)):
		candidate = tuple(h + mu[k] for h, k in zip(row, steps))
		pairs = zip(candidate, candidate[1:] + candidate[:1] if closed else candidate[1:])
		if all(weight_index(right - left) is not None for left, right in pairs):
			yield candidate


def _row_weight(top, bottom, weight, closed):
	width = len(top) if closed else len(top) - 1
	total = 1
	for j in range(width):
		k = (j + 1) % len(top)
		value = weight(top[j], top[k], bottom[k], bottom[j])
		if value is None:
			return 0
		total *= value
	return total


def _closed_rows(start, cols, mu):
	for steps in itertools.product(range(len(mu)), repeat=cols - 1):
		row = [start]
		for k in steps:
			row.append(row[-1] + mu[k])
		if weight_index(row[0] - row[-1]) is not None:
			yield tuple(row)


def partition_function_transfer(rows, cols, z, spec, boundary='fixed', base=None, u=None):
	"""The same partition function, accumulated row by row with a transfer matrix."""
	_check_scalar(spec)
	n = spec.p
	base = base_height(n) if base is None else _as_height(base)
	mu = weights_of_vector_rep(n)
	weight = _weight_function(spec, z, u)
	_guard(n ** (cols + 1) * rows)
	if boundary == 'fixed':
		grid = seed_configuration(rows, cols, base, n)
		vector = {tuple(grid[0]): 1}
		for i in range(1, rows + 1):
			left, right = grid[i][0], grid[i][cols]
			step = {}
			for top, amplitude in vector.items():
				for bottom in _next_rows(top, mu, closed=False):
					if bottom[0] != left or bottom[-1] != right:
						continue
					if i == rows and bottom != tuple(grid[rows]):
						continue
					value = _row_weight(top, bottom, weight, closed=False)
					if value:
						step[bottom] = step.get(bottom, 0) + amplitude * value
			vector = step
		return complex(vector.get(tuple(grid[rows]), 0))
	if boundary != 'periodic':
		raise DomainError('unknown boundary {!r}'.format(boundary))
	total = 0
	for first in _closed_rows(base, cols, mu):
		vector = {first: 1}
		for _ in range(rows):
			step = {}
			for top, amplitude in vector.items():
				for bottom in _next_rows(top, mu, closed=True):
					value = _row_weight(top, bottom, weight, closed=True)
					if value:
						step[bottom] = step.get(bottom, 0) + amplitude * value
			vector = step
		total += vector.get(first, 0)
	return complex(total)
