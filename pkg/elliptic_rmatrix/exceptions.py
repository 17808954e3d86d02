"""Exceptions raised by elliptic_rmatrix."""

__all__ = (
	'EllipticRMatrixError',
	'DomainError',
	'PoleError',
	'AdmissibilityError',
	'ResourceError',
	'NumericError',
	)


class EllipticRMatrixError(Exception):
	"""Base class for all errors raised by this package."""


class DomainError(EllipticRMatrixError, ValueError):
	"""An argument is outside the domain of the requested operation."""


class PoleError(DomainError):
	"""An argument lies too close to a pole.

	Attributes:
		point: The offending argument.
		nearest: The nearest pole (a point of the lattice (Z + τZ)/order).
		context: Optional description of where the argument came from, e.g. the
			term (i, j, a) of an R-matrix or the spectator index of a shift.
	"""

	def __init__(self, point, nearest, context=None):
		self.point = point
		self.nearest = nearest
		self.context = context
		msg = 'argument {point} is within the pole guard of {nearest}'.format(
			point=point,
			nearest=nearest,
			)
		if context is not None:
			msg += ' ({})'.format(context)
		super().__init__(msg)

	def with_context(self, context):
		"""Return a copy of this error carrying `context`."""
		if self.context is not None:
			context = '{}; {}'.format(context, self.context)
		return PoleError(self.point, self.nearest, context)


class AdmissibilityError(DomainError):
	"""A face of heights is not admissible."""


class ResourceError(EllipticRMatrixError):
	"""A computation would exceed a configured size guard."""


class NumericError(EllipticRMatrixError, ArithmeticError):
	"""A numerical procedure failed to converge or to find a solution."""
