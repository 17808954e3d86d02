"""The elliptic-rmatrix command line.

Exit codes: 0 when every gated check passes, 1 when a check fails, 2 for
configuration or usage errors and 3 when a size guard trips.
"""
import argparse
import configparser
from dataclasses import asdict, dataclass, field, fields
from datetime import datetime, timezone
import logging
import os
from pathlib import Path
import sys
from typing import List, Optional

import numpy as np

from ._util import as_tau, sample_cell
from ._version import __version__
from .exceptions import DomainError, EllipticRMatrixError, ResourceError
from .identities import identity_suite
from .irf import (
	base_height,
	check_star_triangle,
	partition_function,
	partition_function_transfer,
	star_triangle_heights,
	)
from .reports import (
	ResidualReport,
	format_complex,
	merge_reports,
	parse_complex,
	reports_from_json,
	reports_to_csv,
	reports_to_json,
	)
from .rmatrix import FAMILIES, RMatrixSpec
from .verifier import (
	check_classical,
	check_classical_limit,
	check_degenerations,
	check_qdybe,
	check_qybe,
	check_symmetries,
	check_unitarity,
	determine_convention,
	)

__all__ = ('RunConfig', 'main', 'run')

logger = logging.getLogger(__name__)

COMMANDS = ('identities', 'build', 'verify', 'limits', 'irf', 'report')
CHECKS = ('qybe', 'qdybe', 'unitarity', 'symmetries', 'classical')
FORMATS = ('json', 'csv')
OUTPUT_DIR_ENV = 'ELLIPTIC_RMATRIX_OUTPUT_DIR'

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_RESOURCE = 3


def complex_arg(text):
	"""Parse 're,im', a Python literal like '0.5+1j' or the '0+1i' spelling.

	>>> complex_arg('0+1i')
	1j
	"""
	text = str(text).strip()
	if ',' in text:
		return parse_complex(text)
	try:
		return complex(text.replace('i', 'j'))
	except ValueError:
		raise argparse.ArgumentTypeError('not a complex number: {!r}'.format(text))


def complex_list_arg(text):
	"""Parse a ';'-separated list of complex numbers."""
	return [complex_arg(part) for part in str(text).split(';') if part.strip()]


@dataclass
class RunConfig:
	"""The effective configuration of one run, echoed into every report."""

	command: str
	family: str = 'intermediate'
	p: int = 2
	l: int = 2
	tau: complex = 1j
	hbar: complex = 0.1 + 0.05j
	u: Optional[List[complex]] = None
	z: complex = 0.31 + 0.17j
	seed: int = 0
	samples: int = 20
	tol: float = 1e-9
	checks: List[str] = field(default_factory=lambda: list(CHECKS))
	rows: int = 2
	cols: int = 2
	boundary: str = 'fixed'
	output: Optional[str] = None
	format: str = 'json'
	input: Optional[str] = None

	def validate(self):
		if self.command not in COMMANDS:
			raise DomainError('unknown command {!r}'.format(self.command))
		if self.family not in FAMILIES:
			raise DomainError('unknown family {!r}'.format(self.family))
		if self.format not in FORMATS:
			raise DomainError('unknown format {!r}'.format(self.format))
		unknown = set(self.checks) - set(CHECKS)
		if unknown:
			raise DomainError('unknown checks {}'.format(sorted(unknown)))
		self.tau = as_tau(self.tau)
		return self

	def spec(self):
		"""The RMatrixSpec described by family, p, l, τ and ħ."""
		if self.family == 'vertex':
			return RMatrixSpec.vertex(self.p * self.l, self.tau, self.hbar)
		if self.family == 'felder':
			return RMatrixSpec.felder(self.p * self.l, self.tau, self.hbar)
		return RMatrixSpec(self.family, self.p, self.l, self.tau, self.hbar)

	def to_dict(self):
		return asdict(self)


_CONVERTERS = {
	'p': int,
	'l': int,
	'seed': int,
	'samples': int,
	'rows': int,
	'cols': int,
	'tol': float,
	'tau': complex_arg,
	'hbar': complex_arg,
	'z': complex_arg,
	'u': complex_list_arg,
	'checks': lambda text: [part.strip() for part in text.split(',') if part.strip()],
	}


def read_config_file(path, command):
	"""Return the settings of `command` (plus [DEFAULT]) from an INI file."""
	parser = configparser.ConfigParser()
	if not parser.read(path, encoding='utf-8'):
		raise DomainError('cannot read config file {}'.format(path))
	section = parser[command] if parser.has_section(command) else parser.defaults()
	known = {f.name for f in fields(RunConfig)}
	values = {}
	for key, text in section.items():
		if key not in known or key == 'command':
			raise DomainError('unknown config key {!r}'.format(key))
		try:
			values[key] = _CONVERTERS.get(key, str)(text)
		except (ValueError, argparse.ArgumentTypeError) as error:
			raise DomainError('bad value for {}: {}'.format(key, error))
	return values


def _add_model_arguments(parser):
	parser.add_argument('--family', choices=FAMILIES)
	parser.add_argument('--p', type=int)
	parser.add_argument('--l', type=int)
	parser.add_argument('--tau', type=complex_arg)
	parser.add_argument('--hbar', type=complex_arg)
	parser.add_argument('--u', type=complex_list_arg, help="';'-separated dynamical vector")
	parser.add_argument('--z', type=complex_arg)


def _add_run_arguments(parser):
	parser.add_argument('--seed', type=int)
	parser.add_argument('--samples', type=int)
	parser.add_argument('--tol', type=float)


def _parse_args(argv=None):
	parser = argparse.ArgumentParser(
		prog='elliptic-rmatrix',
		description='Build elliptic R-matrices and certify their identities numerically.',
		)
	parser.add_argument('--version', action='version', version=__version__)
	verbosity = parser.add_mutually_exclusive_group()
	verbosity.add_argument('-v', '--verbose', action='count', default=0)
	verbosity.add_argument('-q', '--quiet', action='store_true')
	parser.add_argument('--config', type=Path, help='INI file with one section per command')
	parser.add_argument('--output', '-o', help='report file (default: stdout or $' + OUTPUT_DIR_ENV + ')')
	parser.add_argument('--format', choices=FORMATS)
	commands = parser.add_subparsers(dest='command', required=True)

	identities = commands.add_parser('identities', help='run the elliptic function identity suite')
	identities.add_argument('--tau', type=complex_arg)
	_add_run_arguments(identities)

	build = commands.add_parser('build', help='print the non-zero entries of an R-matrix')
	_add_model_arguments(build)

	verify = commands.add_parser('verify', help='run the Yang-Baxter and symmetry checks')
	_add_model_arguments(verify)
	_add_run_arguments(verify)
	verify.add_argument('--checks', type=_CONVERTERS['checks'], help='comma-separated subset of ' + ','.join(CHECKS))

	limits = commands.add_parser('limits', help='classical, trigonometric and rational limits')
	_add_model_arguments(limits)
	limits.add_argument('--tol', type=float)

	irf = commands.add_parser('irf', help='star-triangle relation and partition functions')
	_add_model_arguments(irf)
	_add_run_arguments(irf)
	irf.add_argument('--rows', type=int)
	irf.add_argument('--cols', type=int)
	irf.add_argument('--boundary', choices=('fixed', 'periodic'))

	report = commands.add_parser('report', help='re-serialize a JSON report (e.g. to CSV)')
	report.add_argument('input')

	return parser.parse_args(argv)


def load_config(args):
	"""Merge RunConfig defaults, the config file and the command-line flags."""
	values = {}
	if args.config is not None:
		values.update(read_config_file(args.config, args.command))
	known = {f.name for f in fields(RunConfig)}
	for key, value in vars(args).items():
		if key in known and value is not None:
			values[key] = value
	values['command'] = args.command
	return RunConfig(**values).validate()


def _sample_star_triangle(rng, spec):
	n = spec.p
	steps = [int(k) for k in rng.integers(0, n, 3)]
	output_steps = [steps[k] for k in rng.permutation(3)]
	a = base_height(n)
	heights = star_triangle_heights(a, steps, output_steps)
	z12, z23 = sample_cell(rng, spec.tau if spec.tau is not None else 1j, 2)
	return (a, ) + heights, complex(z12), complex(z12 + z23), complex(z23)


def _run_identities(config):
	return [identity_suite(config.tau, config.samples, tol=config.tol, seed=config.seed)]


def _run_verify(config):
	spec = config.spec()
	reports = []
	kwargs = {'n_samples': config.samples, 'seed': config.seed}
	if 'qybe' in config.checks and not spec.dynamical:
		reports.append(check_qybe(spec, tol=config.tol, **kwargs))
	if 'qdybe' in config.checks and spec.dynamical:
		convention = determine_convention(spec, n_samples=max(1, config.samples // 4), seed=config.seed, tol=config.tol)
		passing = convention.notes.get('passing') or []
		reports.append(convention)
		qdybe = check_qdybe(spec, tol=config.tol, **kwargs)
		qdybe.notes['conventions'] = passing
		reports.append(qdybe)
	if 'unitarity' in config.checks:
		reports.append(check_unitarity(spec, tol=1e-10, **kwargs))
	if spec.family in ('vertex', 'felder', 'intermediate'):
		if 'symmetries' in config.checks:
			reports.append(check_symmetries(spec, tol=1e-10, **kwargs))
		if 'classical' in config.checks:
			reports.append(check_classical(spec, tol=1e-8, n_samples=max(1, config.samples // 4), seed=config.seed))
	return reports


def _run_limits(config):
	spec = config.spec()
	u = config.u
	if u is None and spec.dynamical:
		u = 0.17 * np.arange(spec.p) + 0.01j
	return [
		check_classical_limit(spec, u, config.z, tol=1e-6),
		check_degenerations(spec, u, config.z, tol=max(config.tol, 1e-8)),
		]


def _run_irf(config):
	spec = config.spec()
	if not spec.dynamical:
		raise DomainError('IRF models need a dynamical family with p >= 2')
	rng = np.random.default_rng(config.seed)
	reports = []
	for _ in range(config.samples):
		heights, z12, z13, z23 = _sample_star_triangle(rng, spec)
		reports.append(check_star_triangle(*heights, z12, z13, z23, spec, u=config.u, tol=config.tol))
	merged = merge_reports('star_triangle', reports, family=spec.family, params=spec.to_dict(), seed=config.seed)
	results = [merged]
	if spec.l == 1:
		brute = partition_function(config.rows, config.cols, config.z, spec, config.boundary, u=config.u)
		transfer = partition_function_transfer(config.rows, config.cols, config.z, spec, config.boundary, u=config.u)
		scale = max(abs(brute), abs(transfer), 1e-300)
		residual = abs(brute - transfer) / scale
		result = ResidualReport(
			check='partition_function',
			tol=1e-12,
			max_abs=residual,
			frobenius=residual,
			family=spec.family,
			params=dict(spec.to_dict(), rows=config.rows, cols=config.cols, boundary=config.boundary),
			scale=brute,
			samples=1,
			)
		result.gate()
		results.append(result)
	return results


def _build_text(config):
	spec = config.spec()
	r = spec.build(config.u, config.z)
	lines = ['# {!r} at z={}'.format(spec, format_complex(config.z))]
	for row, col in zip(*np.nonzero(np.abs(r) > 1e-14)):
		lines.append('{} {} {}'.format(row, col, format_complex(r[row, col])))
	return '\n'.join(lines) + '\n'


def _output_path(config):
	if config.output:
		return Path(config.output)
	directory = os.environ.get(OUTPUT_DIR_ENV)
	if directory:
		return Path(directory) / '{}.{}'.format(config.command, config.format)
	return None


def _emit(text, config):
	path = _output_path(config)
	if path is None:
		sys.stdout.write(text)
		return
	path.parent.mkdir(parents=True, exist_ok=True)
	path.write_text(text, encoding='utf-8')
	logger.info('wrote %s', path)


def _serialize(reports, config):
	if config.format == 'csv':
		return reports_to_csv(reports)
	echo = {k: v for k, v in config.to_dict().items() if k not in ('output', 'input')}
	timestamp = datetime.now(timezone.utc).isoformat()
	return reports_to_json(reports, echo, seed=config.seed, timestamp=timestamp) + '\n'


def _configure_logging(args):
	if args.quiet:
		level = logging.ERROR
	else:
		level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
	logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)


_RUNNERS = {
	'identities': _run_identities,
	'verify': _run_verify,
	'limits': _run_limits,
	'irf': _run_irf,
	}


def run(argv=None):
	"""Run the command line and return the exit code."""
	try:
		args = _parse_args(argv)
	except SystemExit as error:
		return EXIT_CONFIG if error.code else EXIT_OK
	_configure_logging(args)
	try:
		config = load_config(args)
		if config.command == 'report':
			header, echo, reports = reports_from_json(Path(args.input).read_text(encoding='utf-8'))
			if config.format == 'csv':
				_emit(reports_to_csv(reports), config)
			else:
				_emit(reports_to_json(reports, echo, header.get('seed'), header.get('timestamp')) + '\n', config)
			return EXIT_OK
		if config.command == 'build':
			_emit(_build_text(config), config)
			return EXIT_OK
		reports = _RUNNERS[config.command](config)
	except ResourceError as error:
		logger.error('%s', error)
		return EXIT_RESOURCE
	except (DomainError, OSError, ValueError, KeyError) as error:
		logger.error('%s', error)
		return EXIT_CONFIG
	except EllipticRMatrixError as error:
		logger.error('%s', error)
		return EXIT_FAILED
	_emit(_serialize(reports, config), config)
	failed = [report.check for report in reports if not report.passed]
	if failed:
		logger.error('failed checks: %s', ', '.join(failed))
		return EXIT_FAILED
	return EXIT_OK


def main(argv=None):
	"""Console script entry point."""
	sys.exit(run(argv))
