"""Exit codes, schema stability, and byte-for-byte determinism."""

import contextlib
import io
import json
import subprocess
import sys

import pytest

from kostantpv import cli

ROW_FIELDS = {'w', 'word', 'verdict', 'thin', 'a_value', 'multiplicities'}


def run_cli(*args):
    return subprocess.run(
        [sys.executable, '-m', 'kostantpv.cli', *args],
        capture_output=True,
        text=True,
    )


def run_main(*args):
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = cli.main(list(args))
    return code, out.getvalue()


def test_classify_max_json_schema():
    code, out = run_main('classify', '--n', '4', '--parabolic', 'max:2')
    assert code == 0
    data = json.loads(out)
    assert data['context'] == {'n': 4, 'parabolic': 'max:2'}
    assert len(data['rows']) == 6
    for row in data['rows']:
        assert set(row) == ROW_FIELDS
        assert row['verdict'] in ('Positive', 'Negative')
        assert isinstance(row['thin'], bool)
        assert isinstance(row['a_value'], int)
        assert row['word'].count('^') == 2
        for y, degree in row['multiplicities']:
            assert isinstance(y, str) and isinstance(degree, int)
    ws = [row['w'] for row in data['rows']]
    assert ws == sorted(ws)


def test_classify_min_and_comp_rows():
    code, out = run_main('classify', '--n', '3', '--parabolic', 'min:1')
    assert code == 0
    rows = json.loads(out)['rows']
    verdicts = [row['verdict'] for row in rows]
    assert verdicts.count('Positive') == 2
    assert verdicts.count('Negative') == 1
    assert all(row['word'] is None for row in rows)
    assert all(row['a_value'] is None for row in rows)
    assert all(row['multiplicities'] is None for row in rows)

    code, out = run_main('classify', '--n', '4', '--parabolic', 'comp:2,2')
    assert code == 0
    rows = json.loads(out)['rows']
    assert [r['w'] for r in rows if r['verdict'] == 'Positive'] == \
        ['1234', '3412']


def test_classify_comp_equals_min():
    code_a, out_a = run_main('classify', '--n', '4', '--parabolic', 'min:2')
    code_b, out_b = run_main('classify', '--n', '4', '--parabolic',
                             'comp:1,2,1')
    assert code_a == code_b == 0
    rows_a = json.loads(out_a)['rows']
    rows_b = json.loads(out_b)['rows']
    assert [(r['w'], r['verdict'], r['thin']) for r in rows_a] == \
        [(r['w'], r['verdict'], r['thin']) for r in rows_b]


def test_tsv_format():
    code, out = run_main('classify', '--n', '4', '--parabolic', 'max:2',
                         '--format', 'tsv')
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == '# w\tword\tverdict\tthin\ta_value\tmultiplicities'
    assert len(lines) == 7
    first = lines[1].split('\t')
    assert first[0] == '1234' and first[1] == '^^vv'
    assert first[2] == 'Positive' and first[3] == 'true'
    assert first[5] == '1234:0;1324:1;3412:2'


def test_determinism_byte_identical():
    for args in (
        ('classify', '--n', '5', '--parabolic', 'max:2'),
        ('classify', '--n', '4', '--parabolic', 'comp:2,1,1',
         '--format', 'tsv'),
        ('mult', '--n', '4', '--k', '2', '--x', '1324'),
        ('cells', '--n', '4', '--format', 'tsv'),
    ):
        a, b = run_cli(*args), run_cli(*args)
        assert a.returncode == b.returncode
        assert a.stdout == b.stdout
        assert a.stdout.endswith('\n')


def test_mult_engines_agree():
    code, out = run_main('mult', '--n', '4', '--k', '2', '--x', '1234',
                         '--engine', 'both')
    assert code == 0
    data = json.loads(out)
    assert data['agree'] is True
    assert len(data['rows']) == 3

    _, cup_out = run_main('mult', '--n', '4', '--k', '2', '--x', '1234',
                          '--engine', 'cup')
    _, kl_out = run_main('mult', '--n', '4', '--k', '2', '--x', '1234',
                         '--engine', 'kl')
    cup_rows = json.loads(cup_out)['rows']
    kl_rows = json.loads(kl_out)['rows']
    assert cup_rows == kl_rows
    assert 'agree' not in json.loads(cup_out)


def test_mult_disagreement_exits_one(monkeypatch):
    monkeypatch.setattr(cli, '_kl_mult_rows', lambda ctx, x: [])
    code, out = run_main('mult', '--n', '4', '--k', '2', '--x', '1234',
                         '--engine', 'both')
    assert code == 1
    assert json.loads(out)['agree'] is False


def test_socle():
    code, out = run_main('socle', '--n', '4', '--w', '3412')
    assert code == 0
    assert json.loads(out)['generators'] == ['3412']
    code, out = run_main('socle', '--n', '4', '--w', '1234')
    assert json.loads(out)['generators'] == []
    code, out = run_main('socle', '--n', '4', '--w', '4231')
    gens = json.loads(out)['generators']
    assert len(gens) > 1


def test_cells():
    code, out = run_main('cells', '--n', '3')
    assert code == 0
    rows = json.loads(out)['rows']
    assert len(rows) == 6
    small = [r['w'] for r in rows if r['small']]
    assert small == ['132', '213', '231', '312']
    shapes = {r['w']: r['shape'] for r in rows}
    assert shapes['123'] == '3' and shapes['321'] == '1,1,1'


def test_usage_errors():
    cases = [
        ('classify', '--n', '9', '--parabolic', 'max:2'),
        ('classify', '--n', '4', '--parabolic', 'max:4'),
        ('classify', '--n', '4', '--parabolic', 'bogus'),
        ('classify', '--n', '4', '--parabolic', 'comp:2,3'),
        ('classify', '--n', '7', '--parabolic', 'min:3'),
        ('classify', '--n', '7', '--parabolic', 'comp:3,4'),
        ('mult', '--n', '7', '--k', '2', '--x', '1234567',
         '--engine', 'kl'),
        ('mult', '--n', '4', '--k', '2', '--x', '2134'),
        ('mult', '--n', '4', '--k', '2', '--x', '213'),
        ('selftest', '--n-max', '9'),
    ]
    for args in cases:
        proc = run_cli(*args)
        assert proc.returncode == 2, args
        assert proc.stderr.startswith('error:'), args
        assert proc.stdout == ''


def test_n_max_override_warns():
    proc = run_cli('classify', '--n', '4', '--parabolic', 'max:2',
                   '--n-max', '9')
    assert proc.returncode == 0
    assert 'warning' in proc.stderr


def test_mult_cup_engine_allows_large_n():
    proc = run_cli('mult', '--n', '7', '--k', '3', '--x', '1234567',
                   '--engine', 'cup')
    assert proc.returncode == 0
    rows = json.loads(proc.stdout)['rows']
    assert rows and rows[0]['y'] == '1234567'


def test_selftest_small():
    proc = run_cli('selftest', '--n-max', '3')
    assert proc.returncode == 0, proc.stdout + proc.stderr
    lines = proc.stdout.strip().splitlines()
    assert len(lines) == 13
    assert all(line.startswith('ok') for line in lines[:-1])
    assert lines[-1].startswith('12/12 checks passed')
