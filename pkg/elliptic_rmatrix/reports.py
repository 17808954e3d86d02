"""Residual reports and their JSON/CSV serialization."""
import csv
from dataclasses import dataclass, field
import io
import json
import math
from typing import Dict, Optional

from ._version import __version__

__all__ = (
	'ResidualReport',
	'format_complex',
	'parse_complex',
	'merge_reports',
	'reports_to_json',
	'reports_from_json',
	'reports_to_csv',
	)

CSV_FIELDS = (
	'check',
	'component',
	'family',
	'max_abs',
	'frobenius',
	'tol',
	'passed',
	'vacuous',
	'samples',
	'skipped',
	'seed',
	)


def format_complex(value):
	"""Format a complex number as 're,im' with round-trippable floats.

	>>> format_complex(1.5-2j)
	'1.5,-2.0'
	"""
	value = complex(value)
	return '{!r},{!r}'.format(value.real, value.imag)


def parse_complex(text):
	"""Parse 're,im' (or a bare real) into a complex number.

	>>> parse_complex('0,1')
	1j
	"""
	parts = str(text).split(',')
	if len(parts) == 1:
		return complex(float(parts[0]), 0.0)
	if len(parts) != 2:
		raise ValueError('expected re,im but got {!r}'.format(text))
	return complex(float(parts[0]), float(parts[1]))


def _jsonable(value):
	if isinstance(value, complex):
		return format_complex(value)
	if isinstance(value, dict):
		return {str(k): _jsonable(v) for k, v in value.items()}
	if isinstance(value, (list, tuple)):
		return [_jsonable(v) for v in value]
	if hasattr(value, 'item'):
		# numpy scalars
		return _jsonable(value.item())
	return value


@dataclass
class ResidualReport:
	"""The outcome of one verification run.

	Residuals are relative: the norm of LHS - RHS divided by the norm of the
	larger side. `components` holds the max-abs residual of each sub-check
	when a report bundles several (identity suites, symmetry bundles).
	"""

	check: str
	tol: float
	max_abs: float = 0.0
	frobenius: float = 0.0
	passed: bool = True
	family: Optional[str] = None
	params: Dict = field(default_factory=dict)
	seed: Optional[int] = None
	scale: Optional[complex] = None
	samples: int = 0
	skipped: int = 0
	vacuous: bool = False
	components: Dict[str, float] = field(default_factory=dict)
	notes: Dict = field(default_factory=dict)

	def __post_init__(self):
		self.params = _jsonable(dict(self.params))
		self.notes = _jsonable(dict(self.notes))
		self.components = {str(k): float(v) for k, v in self.components.items()}
		self.max_abs = float(self.max_abs)
		self.frobenius = float(self.frobenius)
		if self.scale is not None:
			self.scale = complex(self.scale)

	@classmethod
	def from_components(cls, check, tol, components, **kwargs):
		"""Build a report whose residual is the worst of its components."""
		worst = max(components.values(), default=0.0)
		passed = all(v < tol for v in components.values())
		return cls(
			check=check,
			tol=tol,
			max_abs=worst,
			frobenius=kwargs.pop('frobenius', worst),
			passed=passed and not kwargs.get('vacuous', False),
			components=components,
			**kwargs
			)

	def gate(self):
		"""Recompute `passed` from the max-abs residual and the tolerance."""
		self.passed = (
			not self.vacuous
			and not math.isnan(self.max_abs)
			and self.max_abs < self.tol
			)
		return self.passed

	def to_dict(self):
		"""Return a JSON-compatible dict."""
		return {
			'check': self.check,
			'family': self.family,
			'params': self.params,
			'seed': self.seed,
			'max_abs': self.max_abs,
			'frobenius': self.frobenius,
			'scale': None if self.scale is None else format_complex(self.scale),
			'tol': self.tol,
			'passed': self.passed,
			'samples': self.samples,
			'skipped': self.skipped,
			'vacuous': self.vacuous,
			'components': self.components,
			'notes': self.notes,
			}

	@classmethod
	def from_dict(cls, data):
		"""Inverse of to_dict."""
		data = dict(data)
		scale = data.pop('scale', None)
		if scale is not None:
			scale = parse_complex(scale)
		return cls(scale=scale, **data)

	def csv_rows(self):
		"""Yield one flat row per component (or one row if there are none)."""
		base = {
			'check': self.check,
			'family': self.family or '',
			'tol': self.tol,
			'passed': self.passed,
			'vacuous': self.vacuous,
			'samples': self.samples,
			'skipped': self.skipped,
			'seed': '' if self.seed is None else self.seed,
			}
		if not self.components:
			yield dict(
				base,
				component='',
				max_abs=self.max_abs,
				frobenius=self.frobenius,
				)
			return
		for name, value in sorted(self.components.items()):
			yield dict(base, component=name, max_abs=value, frobenius='')


def merge_reports(check, reports, **kwargs):
	"""Merge reports of the same check by taking the worst residuals."""
	reports = list(reports)
	if not reports:
		raise ValueError('nothing to merge')
	components = {}
	for report in reports:
		for name, value in report.components.items():
			components[name] = max(components.get(name, 0.0), value)
	merged = ResidualReport(
		check=check,
		tol=max(report.tol for report in reports),
		max_abs=max(report.max_abs for report in reports),
		frobenius=max(report.frobenius for report in reports),
		samples=sum(report.samples for report in reports),
		skipped=sum(report.skipped for report in reports),
		vacuous=all(report.vacuous for report in reports),
		components=components,
		**kwargs
		)
	merged.passed = all(report.passed for report in reports)
	return merged


def reports_to_json(reports, config=None, seed=None, timestamp=None):
	"""Serialize reports with a header and the echoed run configuration."""
	document = {
		'header': {'version': __version__, 'timestamp': timestamp, 'seed': seed},
		'config': _jsonable(config or {}),
		'results': [report.to_dict() for report in reports],
		}
	return json.dumps(document, indent=2, sort_keys=True)


def reports_from_json(text):
	"""Parse a document written by reports_to_json.

	Returns:
		(header, config, reports)
	"""
	document = json.loads(text)
	reports = [ResidualReport.from_dict(item) for item in document['results']]
	return document['header'], document['config'], reports


def reports_to_csv(reports):
	"""Flatten reports to CSV text, one residual per row."""
	buffer = io.StringIO()
	writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS, lineterminator='\n')
	writer.writeheader()
	for report in reports:
		for row in report.csv_rows():
			writer.writerow(row)
	return buffer.getvalue()
