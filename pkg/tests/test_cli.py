import io
import json

import pytest

from tamaricc.cli import EXIT_CAP, EXIT_INVALID, EXIT_OK, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize('first, second, expected', [
    ('0,0', '2,1', 'LE'),
    ('2,1', '0,0', 'GE'),
    ('0,1', '0,1', 'EQ'),
    ('1,-2', '0,1', 'INCOMPARABLE'),
    ('(-1,-2)', '0,0', 'LE'),
])
def test_compare(capsys, first, second, expected):
    code, out, _ = run(capsys, 'compare', first, second)
    assert code == EXIT_OK
    assert out == expected + '\n'


def test_compare_invalid(capsys):
    code, out, err = run(capsys, 'compare', '1,1', '0,0')
    assert code == EXIT_INVALID
    assert out == ''
    assert err.startswith('tamaricc: invalid cubic coordinate')
    assert run(capsys, 'compare', '0', '0,0')[0] == EXIT_INVALID


def test_convert(capsys):
    code, out, _ = run(capsys, 'convert', '--from', 'cc', '--to', 'tid', '--input', '9,-1,2,1,-4,4,3,1,-2')
    assert code == EXIT_OK
    assert json.loads(out) == {'n': 10, 'u': [9, 0, 2, 1, 0, 4, 3, 1, 0, 0], 'v': [0, 0, 1, 0, 0, 4, 0, 0, 0, 2]}
    code, out, _ = run(capsys, 'convert', '--from', 'tid', '--to', 'cc', '--input', '0,0; 0,1')
    assert out == '-1\n'
    code, out, _ = run(capsys, 'convert', '--from', 'interval', '--to', 'cc', '--input', '(()); ()()')
    assert out == '0\n'


def test_convert_stdin(capsys, monkeypatch):
    monkeypatch.setattr('sys.stdin', io.StringIO('0,1\n'))
    code, out, _ = run(capsys, 'convert', '--from', 'cc', '--to', 'tree-pair')
    assert code == EXIT_OK
    assert json.loads(out) == {'n': 3, 'lower': '(())()', 'upper': '()()()'}


def test_convert_file(capsys, tmp_path):
    path = tmp_path / 'poset.json'
    path.write_text('{"n": 3, "relations": [[2, 1], [3, 2]]}', encoding='utf-8')
    code, out, _ = run(capsys, 'convert', '--from', 'poset', '--to', 'cc', '--input', str(path))
    assert code == EXIT_OK
    assert out == '2,1\n'


def test_convert_invalid(capsys):
    code, _, err = run(capsys, 'convert', '--from', 'poset', '--to', 'cc', '--input', '1,2')
    assert code == EXIT_INVALID
    assert 'JSON' in err


@pytest.mark.parametrize('source, text', [
    ('cc', '[0.5]'),
    ('cc', '{"c": "01"}'),
    ('poset', '{"n": "3", "relations": []}'),
])
def test_convert_wrong_json_types(capsys, source, text):
    code, out, err = run(capsys, 'convert', '--from', source, '--to', 'tid', '--input', text)
    assert code == EXIT_INVALID
    assert out == ''
    assert err.startswith('tamaricc:')


def test_enumerate(capsys):
    code, out, _ = run(capsys, 'enumerate', '--size', '3', '--filter', 'synchronized', '--count-only')
    assert (code, out) == (EXIT_OK, '6\n')
    code, out, _ = run(capsys, 'enumerate', '--size', '3')
    lines = out.splitlines()
    assert len(lines) == 13
    assert lines[0] == '-1,-2' and lines[-1] == '2,1'
    code, out, _ = run(capsys, 'enumerate', '--size', '3', '--filter', 'new', '--json')
    assert [json.loads(line)['c'] for line in out.splitlines()] == [[0, -1], [0, 0], [1, 0]]
    code, out, _ = run(capsys, 'enumerate', '--size', '4', '--filter', 'minimal-cellular', '--count-only')
    assert out == '22\n'


def test_size_errors(capsys):
    code, out, err = run(capsys, 'enumerate', '--size', '9')
    assert code == EXIT_CAP
    assert out == '' and 'cap' in err
    assert run(capsys, 'realize', '--size', '5', '--cap', '4')[0] == EXIT_CAP
    assert run(capsys, 'enumerate', '--size', '0')[0] == EXIT_INVALID


def test_cells(capsys):
    code, out, _ = run(capsys, 'cells', '--size', '3')
    assert code == EXIT_OK
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 6
    assert rows[0] == {'n': 3, 'cmin': [-1, -2], 'cmax': [0, 0], 'gamma': [-1, -2]}
    assert run(capsys, 'cells', '--size', '4', '--count-only')[1] == '22\n'
    code, out, _ = run(capsys, 'cells', '--size', '3', '--interior')
    assert json.loads(out.splitlines()[0])['interior'] == 5


def test_check(capsys):
    code, out, _ = run(capsys, 'check', '--size', '3', '--counts')
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].startswith('n=1: formula=1')
    assert lines[-1] == 'OK'
    assert 'FAIL' not in out


def test_realize_files(capsys, tmp_path):
    dot = tmp_path / 'cc3.dot'
    assert run(capsys, 'realize', '--size', '3', '--format', 'dot', '--out', str(dot))[0] == EXIT_OK
    assert dot.read_text(encoding='utf-8').startswith('digraph CC_3 {')
    csv = tmp_path / 'cc3.csv'
    assert run(capsys, 'realize', '--size', '3', '--format', 'csv', '--out', str(csv))[0] == EXIT_OK
    assert len(csv.read_text(encoding='utf-8').splitlines()) == 14
    assert len((tmp_path / 'cc3.edges.csv').read_text(encoding='utf-8').splitlines()) == 19


def test_realize_stdout(capsys):
    code, out, _ = run(capsys, 'realize', '--size', '2')
    assert code == EXIT_OK
    data = json.loads(out)
    assert [v['c'] for v in data['vertices']] == [[-1], [0], [1]]
    assert data['edges'] == [[0, 1], [1, 2]]
    code, out, _ = run(capsys, 'realize', '--size', '2', '--format', 'csv')
    vertices, edges = out.split('\n\n')
    assert len(vertices.splitlines()) == 4
    assert edges.splitlines() == ['lower,upper', '0,1', '1,2']


def test_usage_errors():
    with pytest.raises(SystemExit):
        main([])
    with pytest.raises(SystemExit):
        main(['enumerate', '--size', '3', '--filter', 'odd'])
