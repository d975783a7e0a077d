import json
import subprocess
import sys

import pytest

from skewbrace import formats
from skewbrace.cli import run
from skewbrace.presentations import trivial_brace_presentation
from skewbrace.solutions import SolutionTable

from conftest import DATA

MALFORMED = sorted(p for p in (DATA / 'malformed').iterdir() if p.suffix in ('.sol', '.brc', '.prs'))


def malformed_command(path):
    if path.suffix == '.sol':
        return ['verify-solution', str(path)]
    if path.suffix == '.brc':
        return ['verify-brace', str(path)]
    return ['check-presentation', str(path), '--in', str(DATA / 'z2.brc'), '--assign', 'x1=1']


def d(name):
    return str(DATA / name)


def test_verify_solution_flip3():
    r = run(['verify-solution', d('flip3.sol')])
    assert r.status == 0
    assert r.report.strip() == 'YBE: yes; non-degenerate: yes; involutive: yes'


def test_verify_solution_negative(tmp_path):
    bad = SolutionTable.from_function(2, lambda x, y: {(0, 0): (0, 1), (0, 1): (0, 0)}.get((x, y), (x, y)))
    f = tmp_path / 'bad.sol'
    f.write_text(formats.dump_solution(bad))
    r = run(['verify-solution', str(f)])
    assert r.status == 1
    assert 'YBE: no' in r.report and 'triple (0, 0, 0)' in r.report
    r = run(['verify-solution', str(f), '--json'])
    doc = json.loads(r.report)
    assert doc['status'] == 1 and doc['witnesses'][0]['triple'] == [0, 0, 0]


def test_invariants_s3():
    r = run(['invariants', d('s3_almost_trivial.brc')])
    assert r.status == 0
    assert 'socle: {0}\n' in r.report
    assert 'B(2): {0, 3, 4}' in r.report
    assert 'simple: no' in r.report
    assert 'annihilator nilpotent: no' in r.report
    doc = json.loads(run(['invariants', d('s3_almost_trivial.brc'), '--json']).report)
    assert doc['socle'] == [0] and doc['counts']['ideals'] == 3


def test_check_presentation_trivial_z2(tmp_path):
    p = tmp_path / 'p.prs'
    p.write_text(formats.dump_presentation(trivial_brace_presentation([2])))
    r = run(['check-presentation', str(p), '--in', d('z2.brc'), '--assign', 'x1=1'])
    assert r.status == 0
    assert r.report.strip() == 'all 4 relators evaluate to 0'


def test_check_presentation_failure(tmp_path):
    p = tmp_path / 'p.prs'
    p.write_text(formats.dump_presentation(trivial_brace_presentation([3])))
    r = run(['check-presentation', str(p), '--in', d('z2.brc'), '--assign', 'x1=1'])
    assert r.status == 1
    assert 'relator 4 evaluates to 1' in r.report
    doc = json.loads(run(['check-presentation', str(p), '--in', d('z2.brc'),
                          '--assign', 'x1=1', '--json']).report)
    assert doc['witnesses'] == [{'relator': 4, 'value': 1}]


def test_check_presentation_missing_assignment():
    r = run(['check-presentation', d('trivial2.prs'), '--in', d('z2.brc')])
    assert r.status == 2
    assert "'x1'" in r.report


def test_verify_brace_negative(tmp_path):
    f = tmp_path / 'b.brc'
    f.write_text('brace 2\nadd\n0 1\n1 0\nmul\n1 0\n0 1\n')
    r = run(['verify-brace', str(f)])
    assert r.status == 1
    assert 'shared identity' in r.report
    assert json.loads(run(['verify-brace', str(f), '--json']).report)['counts']['violations'] >= 1


def test_brace_to_solution_round_trip(tmp_path):
    out = tmp_path / 's.sol'
    r = run(['brace-to-solution', d('z4.brc'), '--out', str(out)])
    assert r.status == 0 and out.exists()
    r = run(['verify-solution', str(out)])
    assert r.report.startswith('YBE: yes; non-degenerate: yes; involutive: yes')


def test_solution_diagonal():
    r = run(['solution-diagonal', d('shift2.sol')])
    assert r.status == 0
    assert 'sigma_0: 1 0' in r.report and 'tau_1: 1 0' in r.report


def test_perm_brace(tmp_path):
    out = tmp_path / 'pb.txt'
    r = run(['perm-brace', d('shift2.sol'), '--out', str(out)])
    assert r.status == 0 and 'order 2' in r.report
    b, labels = formats.parse_perm_brace(out.read_text())
    assert b.n == 2 and labels[1] == ((1, 0), (1, 0))


def test_perm_brace_degenerate(tmp_path):
    f = tmp_path / 'id.sol'
    f.write_text(formats.dump_solution(SolutionTable.from_function(2, lambda x, y: (x, y))))
    assert run(['perm-brace', str(f)]).status == 1


def test_present_structure(tmp_path):
    out = tmp_path / 'm.prs'
    assert run(['present-structure', d('flip2.sol'), '--mul', '--out', str(out)]).status == 0
    p = formats.parse_presentation(out.read_text())
    assert len(p) == 4
    assert run(['present-structure', d('flip2.sol'), '--add']).status == 0
    assert run(['present-structure', d('flip2.sol'), '--add', '--mul']).status == 2


def test_present_table_and_trivial():
    r = run(['present-table', d('z2.brc'), '--json'])
    assert json.loads(r.report)['counts']['relators'] == 9
    r = run(['present-trivial', '--orders', '0'])
    assert r.status == 0 and len(r.report.strip().split('\n')) == 5
    assert run(['present-trivial', '--orders', 'a,b']).status == 2
    assert run(['present-trivial', '--orders', '-1']).status == 2


def test_extend_presentation_pipeline(tmp_path):
    out = tmp_path / 'e.prs'
    r = run(['extend-presentation', d('s3_almost_trivial.brc'), '--ideal', '3,4', '--out', str(out)])
    assert r.status == 0
    assign = r.report.split('assignment: ')[1].split('\n')[0]
    r = run(['check-presentation', str(out), '--in', d('s3_almost_trivial.brc'), '--assign', assign])
    assert r.status == 0 and 'relators evaluate to 0' in r.report
    assert run(['extend-presentation', d('s3_almost_trivial.brc'), '--ideal', '1']).status == 1
    assert run(['extend-presentation', d('s3_almost_trivial.brc'), '--ideal', '9']).status == 2


def test_conjugates():
    r = run(['conjugates', d('s3_almost_trivial.brc'), '--element', '1'])
    assert r.status == 0 and 'count:' in r.report
    assert run(['conjugates', d('z4.brc'), '--element', '4']).status == 2


def test_enumerate_commands():
    r = run(['enumerate-braces', '--order', '4', '--json'])
    assert json.loads(r.report)['counts']['braces'] == 4
    r = run(['enumerate-braces', '--order', '3', '--method', 'naive'])
    assert formats.parse_catalog(r.report).braces[0].n == 3
    assert run(['enumerate-braces', '--order', '5', '--method', 'naive']).status == 2
    r = run(['enumerate-solutions', '--size', '2', '--nondegenerate', '--involutive'])
    assert r.report.startswith('solutions 2 2\n')
    assert run(['enumerate-solutions', '--size', '9']).status == 2


def test_usage_errors():
    assert run([]).status == 2
    r = run(['frobnicate'])
    assert r.status == 2 and 'usage' in r.report
    assert run(['verify-brace']).status == 2
    assert run(['verify-brace', d('z2.brc'), '--bogus']).status == 2
    assert run(['verify-brace', d('missing.brc')]).status == 2
    assert run(['--help']).status == 0


@pytest.mark.parametrize('path', MALFORMED, ids=lambda p: p.name)
def test_malformed_fixtures(path):
    r = run(malformed_command(path))
    assert r.status == 2, r.report
    assert 'line' in r.report


def test_malformed_fixture_count():
    assert len(MALFORMED) >= 10


def test_error_messages_name_the_problem():
    r = run(['verify-brace', d('malformed/short_row.brc')])
    assert 'line 4' in r.report
    r = run(malformed_command(DATA / 'malformed' / 'undeclared.prs'))
    assert "'z'" in r.report


def test_deterministic():
    cmds = [['invariants', d('s3_almost_trivial.brc')],
            ['enumerate-braces', '--order', '4'],
            ['perm-brace', d('shift2.sol'), '--json']]
    for c in cmds:
        assert run(c).report == run(c).report


def test_console_entry_point():
    p = subprocess.run([sys.executable, '-m', 'skewbrace.cli', 'verify-solution', d('flip3.sol')],
                       capture_output=True, text=True)
    assert p.returncode == 0
    assert p.stdout.strip() == 'YBE: yes; non-degenerate: yes; involutive: yes'
    p = subprocess.run([sys.executable, '-m', 'skewbrace.cli', 'verify-brace', d('malformed/short_row.brc')],
                       capture_output=True, text=True)
    assert p.returncode == 2 and 'line 4' in p.stderr
