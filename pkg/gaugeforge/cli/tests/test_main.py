"""
Tests for the gaugeforge command.
"""
from __future__ import absolute_import, division
import io
import json

from ... import constants
from ...gauge.core import p_multiple_gauge
from ...witt.chainring import ChainRing
from .. import suites
from ..main import main


def run_main(argv, stdin=None):
    "Run the command and return the exit code and the output"
    out = io.StringIO()
    if stdin is not None:
        stdin = io.StringIO(stdin)
    code = main(argv, stdin=stdin, stdout=out)
    return code, out.getvalue()


def test_cris_rank_table():
    "cris table --p 2 --d 2 --R 6 gives rank 3 in degree 2"
    code, text = run_main(['cris', 'table', '--p', '2', '--d', '2',
                           '--R', '6'])
    assert code == constants.EXIT_OK
    payload = json.loads(text)
    assert payload['status'] == 'ok'
    rows = {row['r']: row for row in payload['result']['table']}
    assert rows[2]['j_rank'] == 3
    assert rows[2]['f_rank'] == 3
    assert payload['job']['seed'] == constants.DEFAULT_SEED


def test_cris_table_format():
    "The table view aligns the rank table"
    code, text = run_main(['cris', '--p', '2', '--d', '2', '--deg', '4',
                           '--format', 'table'])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == 'cris table: ok'
    assert lines[1].split() == ['r', 'f_rank', 'j_rank']
    assert lines[4].split() == ['2', '3', '3']


def test_deterministic_output():
    "The same job and seed give the same bytes"
    argv = ['witt', 'ghost', '--p', '3', '--n', '3', '--samples', '20',
            '--seed', '7']
    first = run_main(argv)
    assert first == run_main(argv)
    assert json.loads(first[1])['job']['seed'] == 7


def test_witt_arithmetic():
    "1 + 1 = V(1) in W_2(F_2) and V shifts the coordinates"
    code, text = run_main(['witt', 'add', '--p', '2', '--n', '2',
                           '--a', '1,0', '--b', '1,0'])
    assert code == 0
    assert json.loads(text)['result']['value'] == [0, 1]
    code, text = run_main(['witt', 'verschiebung', '--p', '3', '--n', '3',
                           '--a', '2,1,0'])
    assert code == 0
    assert json.loads(text)['result']['value'] == [0, 2, 1]


def test_gauge_validate_fixture():
    "N -> pN -> pN is a gauge whose freeness check fails at a named index"
    document = json.dumps(p_multiple_gauge(ChainRing(2, 2)).to_dict())
    code, text = run_main(['gauge', 'validate', '--input', '-'], document)
    assert code == constants.EXIT_OK
    payload = json.loads(text)
    assert payload['status'] == 'ok'
    children = {c['name']: c for c in payload['report']['children']}
    assert children['freeness']['status'] == 'violated'
    assert 'index' in children['freeness']['witnesses'][0]
    assert payload['result']['free'] is False


def test_identity_crystal_round_trip():
    "The identity crystal survives the round trip"
    document = json.dumps({'context': {'p': 2}, 'rank': 1, 'precision': 3,
                           'phi': [[1]]})
    code, text = run_main(['crystal', 'roundtrip', '--input', '-'], document)
    assert code == constants.EXIT_OK
    assert json.loads(text)['status'] == 'ok'


def test_schema_errors():
    "Malformed input exits with 2"
    code, text = run_main(['gauge', '--input', '-'], '{"context": ')
    assert code == constants.EXIT_SCHEMA
    assert json.loads(text)['error']['kind'] == 'schema'
    assert run_main(['gauge', '--input', '-'], '{"interval": [0, 1]}')[0] \
        == constants.EXIT_SCHEMA
    assert run_main(['cris', 'plot', '--p', '2', '--d', '1'])[0] == \
        constants.EXIT_SCHEMA
    assert run_main(['cris', '--p', '2', '--d', '1', '--seed', '-1'])[0] \
        == constants.EXIT_SCHEMA
    assert run_main(['suite', 'no-such-suite'])[0] == constants.EXIT_SCHEMA
    assert run_main(['witt', 'add', '--p', '2', '--n', '2', '--a', '1,x',
                     '--b', '0,0'])[0] == constants.EXIT_SCHEMA


def test_precondition_exit():
    "A level beyond the precision exits with 3"
    document = json.dumps({'context': {'p': 2}, 'rank': 1, 'precision': 3,
                           'phi': [[1]]})
    code, text = run_main(['crystal', 'construct', '--n', '5', '--input',
                           '-'], document)
    assert code == constants.EXIT_PRECONDITION
    assert json.loads(text)['error']['kind'] == 'precondition'


def test_overflow_exit():
    "A truncation below p cannot check stability and exits with 4"
    code, text = run_main(['derham', 'stability', '--variety',
                           '{"p": 2, "nvars": 1}', '--deg', '1'])
    assert code == constants.EXIT_OVERFLOW
    assert json.loads(text)['status'] == 'overflow'


def test_suite_exit_codes(monkeypatch):
    "A tiny suite passes and fails with the corrupted fixture"
    monkeypatch.setitem(suites.SUITES, 'tiny', [
        ('witt ghost', {'primes': (2,), 'lengths': (1, 2)})])
    code, text = run_main(['suite', 'tiny', '--seed', '3'])
    assert code == constants.EXIT_OK
    assert json.loads(text)['result']['table'] == [
        {'bundle': 'witt ghost', 'status': 'ok'}]
    code, text = run_main(['suite', 'tiny', '--corrupt'])
    assert code == constants.EXIT_VIOLATED
    assert json.loads(text)['status'] == 'violated'


def test_output_file(tmpdir):
    "--output writes the JSON to a file"
    path = str(tmpdir.join('ranks.json'))
    code, text = run_main(['cris', '--p', '3', '--d', '1', '--deg', '3',
                           '--output', path])
    assert code == 0
    assert text == ''
    with io.open(path) as f:
        payload = json.load(f)
    assert [row['j_rank'] for row in payload['result']['table']] == [1, 1, 1]
