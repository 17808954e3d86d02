"""Tests for the command line."""
import argparse
import json

import pytest

from elliptic_rmatrix.cli import (
	EXIT_CONFIG,
	EXIT_FAILED,
	EXIT_OK,
	EXIT_RESOURCE,
	OUTPUT_DIR_ENV,
	RunConfig,
	complex_arg,
	complex_list_arg,
	main,
	read_config_file,
	run,
	)
from elliptic_rmatrix.exceptions import DomainError
from elliptic_rmatrix.rmatrix import RMatrixSpec


@pytest.fixture(autouse=True)
def no_output_dir(monkeypatch):
	monkeypatch.delenv(OUTPUT_DIR_ENV, raising=False)


def test_complex_arg():
	assert complex_arg('0.5,1') == 0.5 + 1j
	assert complex_arg('0+1i') == 1j
	assert complex_arg('0.1+0.05j') == 0.1 + 0.05j
	assert complex_list_arg('0.1;0.2+0.1i;') == [0.1, 0.2 + 0.1j]
	with pytest.raises(argparse.ArgumentTypeError):
		complex_arg('tau')


def test_run_config():
	config = RunConfig('verify', family='felder', p=3, l=1).validate()
	assert config.spec() == RMatrixSpec.felder(3, 1j, 0.1 + 0.05j)
	assert RunConfig('verify', family='vertex', p=1, l=3).spec() == RMatrixSpec.vertex(3, 1j, 0.1 + 0.05j)
	assert config.to_dict()['command'] == 'verify'
	with pytest.raises(DomainError):
		RunConfig('verify', checks=['qybe', 'magic']).validate()
	with pytest.raises(DomainError):
		RunConfig('verify', tau=-1j).validate()


def test_read_config_file(tmp_path):
	path = tmp_path / 'run.ini'
	path.write_text('[verify]\nfamily = vertex\np = 1\nl = 2\ntau = 0.1,1.2\nchecks = qybe, unitarity\n')
	values = read_config_file(path, 'verify')
	assert values == {
		'family': 'vertex',
		'p': 1,
		'l': 2,
		'tau': 0.1 + 1.2j,
		'checks': ['qybe', 'unitarity'],
		}
	path.write_text('[verify]\ncolour = red\n')
	with pytest.raises(DomainError):
		read_config_file(path, 'verify')
	with pytest.raises(DomainError):
		read_config_file(tmp_path / 'missing.ini', 'verify')


def test_identities(capsys):
	assert run(['identities', '--tau', '0.1,1.1', '--samples', '2']) == EXIT_OK
	document = json.loads(capsys.readouterr().out)
	assert document['config']['command'] == 'identities'
	assert document['header']['seed'] == 0
	assert document['header']['timestamp']
	assert [result['check'] for result in document['results']] == ['identities']


def test_verify_vertex(tmp_path):
	output = tmp_path / 'verify.json'
	argv = [
		'-o', str(output),
		'verify', '--family', 'vertex', '--p', '1', '--l', '2',
		'--tau', '0.1,1.1', '--hbar', '0.13,0.04',
		'--samples', '2', '--checks', 'qybe,unitarity,symmetries',
		]
	assert run(argv) == EXIT_OK
	document = json.loads(output.read_text())
	assert [result['check'] for result in document['results']] == ['qybe', 'unitarity', 'symmetries']
	assert all(result['passed'] for result in document['results'])


def test_output_directory(tmp_path, monkeypatch):
	monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path / 'out'))
	assert run(['--format', 'csv', 'identities', '--samples', '1']) == EXIT_OK
	text = (tmp_path / 'out' / 'identities.csv').read_text()
	assert text.startswith('check,component,family')


def test_config_file_and_flags(tmp_path):
	config = tmp_path / 'run.ini'
	config.write_text('[verify]\nfamily = vertex\np = 1\nl = 2\nsamples = 1\nchecks = unitarity\n')
	output = tmp_path / 'verify.json'
	assert run(['--config', str(config), '-o', str(output), 'verify', '--samples', '2']) == EXIT_OK
	document = json.loads(output.read_text())
	assert document['config']['family'] == 'vertex'
	assert document['config']['samples'] == 2
	assert document['results'][0]['samples'] == 2


def test_build(capsys):
	argv = ['build', '--family', 'felder', '--p', '2', '--l', '1', '--u', '0.1;0.35+0.1i', '--z', '0.3,0.1']
	assert run(argv) == EXIT_OK
	lines = capsys.readouterr().out.splitlines()
	assert lines[0].startswith("# RMatrixSpec('felder', p=2, l=1")
	# two diagonal, two swap and two Cartan entries
	assert len(lines) == 7


def test_report_round_trip(tmp_path, capsys):
	output = tmp_path / 'identities.json'
	assert run(['-o', str(output), 'identities', '--samples', '1']) == EXIT_OK
	assert run(['--format', 'csv', 'report', str(output)]) == EXIT_OK
	rows = capsys.readouterr().out.splitlines()
	assert rows[0].startswith('check,component')
	assert all(row.startswith('identities,') for row in rows[1:])
	assert run(['report', str(output)]) == EXIT_OK
	document = json.loads(capsys.readouterr().out)
	assert document == json.loads(output.read_text())


def test_exit_codes(tmp_path):
	assert run(['frobnicate']) == EXIT_CONFIG
	assert run([]) == EXIT_CONFIG
	assert run(['verify', '--family', 'intermediate', '--tau', '0,-1']) == EXIT_CONFIG
	assert run(['irf', '--family', 'vertex', '--p', '1', '--l', '2']) == EXIT_CONFIG
	assert run(['report', str(tmp_path / 'missing.json')]) == EXIT_CONFIG
	assert run(['verify', '--p', '3', '--l', '3', '--checks', 'qdybe']) == EXIT_RESOURCE
	assert run(['identities', '--samples', '1', '--tol', '0']) == EXIT_FAILED


def test_main_exits():
	with pytest.raises(SystemExit) as info:
		main(['--version'])
	assert info.value.code == 0
