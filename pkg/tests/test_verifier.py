"""Tests for the Yang-Baxter, unitarity, symmetry and limit checks."""
import numpy as np
import pytest

from elliptic_rmatrix.exceptions import DomainError, ResourceError
from elliptic_rmatrix.heisenberg import embed
from elliptic_rmatrix.rmatrix import RMatrixSpec
from elliptic_rmatrix.verifier import (
	CONVENTIONS,
	ShiftConvention,
	check_classical,
	check_classical_limit,
	check_degenerations,
	check_qdybe,
	check_qybe,
	check_symmetries,
	check_unitarity,
	determine_convention,
	shifted_action,
	unitarity_scalar,
	)

TAU = 0.1 + 1.1j
HBAR = 0.13 + 0.04j
U2 = np.array([0.13 + 0.16j, -0.12 - 0.14j])

VERTEX = RMatrixSpec.vertex(2, TAU, HBAR)
FELDER = RMatrixSpec.felder(2, TAU, HBAR)
INTERMEDIATE = RMatrixSpec('intermediate', 2, 2, TAU, HBAR)


def test_shift_convention():
	convention = ShiftConvention()
	assert convention.name == 'z1+'
	assert tuple(convention) == (1, 'z1')
	assert ShiftConvention(-1, 'symmetric').name == 'symmetric-'
	assert [c.name for c in CONVENTIONS] == ['z1+', 'z1-', 'symmetric+', 'symmetric-']
	lhs, rhs = ShiftConvention(-1).sides()
	assert lhs[1] == ((0, 2), -1)
	assert rhs[0] == ((1, 2), -1)
	assert lhs[0] == ((0, 1), 0)
	assert repr(convention) == "ShiftConvention(1, 'z1')"
	with pytest.raises(DomainError):
		ShiftConvention(2)
	with pytest.raises(DomainError):
		ShiftConvention(1, 'z2')


def test_shifted_action_trivial_cases():
	z = 0.3 + 0.1j
	np.testing.assert_allclose(
		shifted_action(VERTEX, (0, 1), None, z, sign=1),
		embed(VERTEX.build(None, z), (0, 1), 2),
		)
	np.testing.assert_allclose(
		shifted_action(FELDER, (0, 2), U2, z, sign=0),
		embed(FELDER.build(U2, z), (0, 2), 2),
		)
	np.testing.assert_allclose(
		shifted_action(INTERMEDIATE, (1, 2), U2, z, sign=1, shift=0),
		embed(INTERMEDIATE.build(U2, z), (1, 2), 4),
		atol=1e-12,
		)


def test_shifted_action_spectator_block():
	z = 0.3 + 0.1j
	action = shifted_action(FELDER, (0, 1), U2, z, sign=1)
	shifted = U2 - np.array([HBAR, 0])
	expected = embed(FELDER.build(shifted, z), (0, 1), 2)
	# columns with the spectator (last leg) in weight 0 sit at even positions
	np.testing.assert_allclose(action[:, ::2], expected[:, ::2])


@pytest.mark.parametrize('spec', [VERTEX, RMatrixSpec.vertex(3, TAU, HBAR)])
def test_qybe_vertex(spec):
	report = check_qybe(spec, n_samples=3, seed=1)
	assert report.passed, report.max_abs
	assert report.samples == 3
	assert report.check == 'qybe'


def test_qybe_fixed_sample():
	report = check_qybe(VERTEX, z=0.31 + 0.2j, w=0.12 - 0.1j)
	assert report.passed
	assert report.samples == 1


def test_qybe_trig_vertex_limit():
	report = check_qybe(RMatrixSpec('trig', 1, 2, hbar=HBAR), n_samples=3)
	assert report.passed, report.max_abs


def test_qybe_rejects_dynamical():
	with pytest.raises(DomainError):
		check_qybe(FELDER)


@pytest.mark.parametrize('spec', [
	FELDER,
	RMatrixSpec.felder(3, TAU, HBAR),
	INTERMEDIATE,
	RMatrixSpec('trig', 2, 2, hbar=HBAR),
	RMatrixSpec('trig', 2, 1, hbar=HBAR),
	RMatrixSpec('rational', 2, 1, hbar=HBAR),
	])
def test_qdybe(spec):
	report = check_qdybe(spec, n_samples=2, seed=3)
	assert report.passed, report.max_abs
	assert report.notes['convention'] == 'z1+'


def test_qdybe_fixed_sample():
	report = check_qdybe(FELDER, u=U2, z=0.31 + 0.2j, w=0.12 - 0.1j)
	assert report.passed
	assert report.samples == 1


def test_qdybe_errors():
	with pytest.raises(DomainError):
		check_qdybe(VERTEX)
	with pytest.raises(ResourceError):
		check_qdybe(RMatrixSpec('intermediate', 3, 3, TAU))
	with pytest.raises(DomainError):
		check_qdybe(FELDER, z=0.3)


def test_determine_convention():
	report = determine_convention(FELDER, n_samples=2)
	assert 'z1+' in report.notes['passing']
	assert set(report.components) == {c.name for c in CONVENTIONS}
	assert report.passed == report.notes['unique']


@pytest.mark.parametrize('spec', [VERTEX, FELDER, INTERMEDIATE])
def test_unitarity(spec):
	report = check_unitarity(spec, n_samples=3, seed=2)
	assert report.passed, report.components
	assert 'scalar' in report.components
	assert report.scale is not None


def test_unitarity_scalar():
	z = 0.3 + 0.1j
	assert unitarity_scalar(INTERMEDIATE.replace(cartan_weight=1), z) is None
	assert unitarity_scalar(RMatrixSpec('trig', 2, 2), z) is None
	report = check_unitarity(FELDER, u=U2, z=z)
	assert report.scale == pytest.approx(unitarity_scalar(FELDER, z), rel=1e-10)


@pytest.mark.parametrize('spec', [VERTEX, FELDER, INTERMEDIATE, RMatrixSpec('intermediate', 1, 3, TAU, HBAR)])
def test_symmetries(spec):
	report = check_symmetries(spec, n_samples=2, seed=4)
	assert report.passed, report.components
	expected = {'z_period_1', 'z_period_tau', 'u_period_1', 'u_period_tau', 'weight_zero'}
	if spec.family == 'felder':
		expected.add('reflection')
	assert set(report.components) == expected


def test_symmetries_rejects_degenerate_families():
	with pytest.raises(DomainError):
		check_symmetries(RMatrixSpec('trig', 2, 2))


@pytest.mark.parametrize('spec', [VERTEX, FELDER, INTERMEDIATE])
def test_classical(spec):
	report = check_classical(spec, n_samples=2, seed=5)
	assert report.passed, report.max_abs
	assert report.notes['include_cartan'] is True


def test_classical_rejects_degenerate_families():
	with pytest.raises(DomainError):
		check_classical(RMatrixSpec('rational', 2, 1))


@pytest.mark.parametrize('spec, u', [(VERTEX, None), (FELDER, U2), (INTERMEDIATE, U2)])
def test_classical_limit(spec, u):
	report = check_classical_limit(spec, u)
	assert report.passed, report.components
	assert set(report.components) == {'constant', 'r_matrix'}


@pytest.mark.parametrize('spec, components', [
	(VERTEX, {'trig', 'intermediate_form', 'vertex_reflection'}),
	(FELDER, {'trig', 'intermediate_form', 'rational'}),
	(INTERMEDIATE, {'trig'}),
	(RMatrixSpec('intermediate', 2, 1, TAU, HBAR), {'trig', 'rational'}),
	])
def test_degenerations(spec, components):
	report = check_degenerations(spec)
	assert set(report.components) == components
	assert report.passed, report.components


def test_degenerations_rejects_degenerate_families():
	with pytest.raises(DomainError):
		check_degenerations(RMatrixSpec('trig', 2, 2))
