"""elliptic_rmatrix builds elliptic R-matrices and certifies them numerically."""
from ._version import __version__  # noqa
from .elliptic import (  # noqa
	ModularParam,
	eisenstein,
	phi,
	phi_deformed,
	theta,
	)
from .exceptions import (  # noqa
	AdmissibilityError,
	DomainError,
	EllipticRMatrixError,
	NumericError,
	PoleError,
	ResourceError,
	)
from .heisenberg import LatticeIndex, t_basis  # noqa
from .identities import identity_suite  # noqa
from .irf import Height, check_star_triangle, face_operator, partition_function  # noqa
from .limits import classical_r  # noqa
from .reports import ResidualReport  # noqa
from .rmatrix import RMatrixSpec, build_felder, build_intermediate, build_vertex  # noqa
from .verifier import (  # noqa
	ShiftConvention,
	check_classical,
	check_qdybe,
	check_qybe,
	check_symmetries,
	check_unitarity,
	determine_convention,
	)

__all__ = (
	'ModularParam',
	'theta',
	'eisenstein',
	'phi',
	'phi_deformed',
	'LatticeIndex',
	't_basis',
	'RMatrixSpec',
	'build_vertex',
	'build_felder',
	'build_intermediate',
	'classical_r',
	'ShiftConvention',
	'check_qybe',
	'check_qdybe',
	'determine_convention',
	'check_unitarity',
	'check_symmetries',
	'check_classical',
	'Height',
	'face_operator',
	'check_star_triangle',
	'partition_function',
	'identity_suite',
	'ResidualReport',
	'EllipticRMatrixError',
	'DomainError',
	'PoleError',
	'AdmissibilityError',
	'ResourceError',
	'NumericError',
	)
