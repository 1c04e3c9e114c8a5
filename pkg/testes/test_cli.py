import sys
import os
current_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(current_dir)
sys.path.insert(0, project_root)

import io
import json

import pytest

from cli.main import main
from cli.runner import (
    EXIT_CAPACITY, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, aggregate, exit_code, load_directory,
    run_pool,
)
from cli.suites import GroupCase, SUITES, parse_suites
from utils.groupfile import parse_group_file
from zoo.constructors import dihedral, symmetric

S3_FILE = "name: S3\ndegree: 3\n(1 2)\n(1 2 3)\n"
D8_FILE = "name: D8\ndegree: 4\n(1 2 3 4)\n(2 4)\n"


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def corpus_dir(tmp_path):
    (tmp_path / 's3.grp').write_text(S3_FILE, encoding='utf-8')
    (tmp_path / 'd8.grp').write_text(D8_FILE, encoding='utf-8')
    (tmp_path / 'notas.md').write_text("ignorado", encoding='utf-8')
    return tmp_path


# --- analyze ---

def test_analyze_lists_anticentral_classes(corpus_dir):
    code, text = run(['analyze', str(corpus_dir / 's3.grp')])
    assert code == EXIT_OK
    assert "|G| = 6" in text
    assert "1 classes anticentrais" in text


def test_analyze_single_element_with_report(corpus_dir, tmp_path):
    report_path = tmp_path / 'relatorio.json'
    code, text = run(['analyze', str(corpus_dir / 'd8.grp'), '--element', '(1 2 3 4)',
                      '--out', str(report_path)])
    assert code == EXIT_OK
    assert "|C_G(a)| = 4" in text
    document = json.loads(report_path.read_text(encoding='utf-8'))
    assert document['suite'] == 'analyze'
    assert all(c['status'] == 'pass' for c in document['checks'])


def test_analyze_emits_character_table(corpus_dir):
    code, text = run(['analyze', str(corpus_dir / 's3.grp'), '--emit-chartab'])
    assert code == EXIT_OK
    assert "# conductor 6" in text


def test_analyze_input_errors(corpus_dir, tmp_path):
    code, _ = run(['analyze', str(corpus_dir / 's3.grp'), '--element', '(1 2'])
    assert code == EXIT_INPUT
    code, _ = run(['analyze', str(tmp_path / 'ausente.grp')])
    assert code == EXIT_INPUT
    bad = tmp_path / 'ruim.grp'
    bad.write_text("degree: 3\n(1 2)\n", encoding='utf-8')
    code, _ = run(['analyze', str(bad)])
    assert code == EXIT_INPUT


def test_analyze_element_outside_group(corpus_dir):
    code, _ = run(['analyze', str(corpus_dir / 'd8.grp'), '--element', '(1 2)'])
    assert code == EXIT_INPUT


def test_analyze_capacity(corpus_dir, monkeypatch):
    monkeypatch.setenv('ACG_ENUM_BOUND', '5')
    code, _ = run(['analyze', str(corpus_dir / 's3.grp')])
    assert code == EXIT_CAPACITY


# --- verify ---

def test_verify_directory_all_suites(corpus_dir, tmp_path):
    out_path = tmp_path / 'verificacao.json'
    code, text = run(['verify', str(corpus_dir), '--out', str(out_path)])
    assert code == EXIT_OK
    document = json.loads(out_path.read_text(encoding='utf-8'))
    assert [g['name'] for g in document['groups']] == ['D8', 'S3']
    assert document['summary']['failures'] == 0
    assert document['summary']['groups'] == 2
    assert set(document['groups'][0]['suites']) == set(SUITES)
    assert "Total: 2 grupos" in text


def test_verify_is_deterministic_across_jobs(corpus_dir, tmp_path):
    first, second = tmp_path / 'um.json', tmp_path / 'dois.json'
    run(['verify', str(corpus_dir), '--suite', 'equivalences,oracle', '--out', str(first)])
    run(['verify', str(corpus_dir), '--suite', 'equivalences,oracle', '--jobs', '3',
         '--out', str(second)])
    a = json.loads(first.read_text(encoding='utf-8'))
    b = json.loads(second.read_text(encoding='utf-8'))
    for document in (a, b):
        document.pop('timing')
        document['engine'].pop('jobs')
    assert a == b


def test_verify_reports_malformed_files(corpus_dir):
    (corpus_dir / 'ruim.grp').write_text("name: x\ndegree: 2\n(1 3)\n", encoding='utf-8')
    code, text = run(['verify', str(corpus_dir), '--suite', 'solvability'])
    assert code == EXIT_INPUT
    assert "ruim.grp" in text


def test_verify_order_limits_are_not_failures(corpus_dir):
    code, _ = run(['verify', str(corpus_dir), '--suite', 'chartab', '--chartab-max-order', '6'])
    assert code == EXIT_OK


def test_verify_builtin_subset():
    code, text = run(['verify', '--builtin', '--suite', 'solvability,equivalences',
                      '--max-order', '30'])
    assert code == EXIT_OK
    assert "Heis27" in text
    assert "PSL(2,7)" not in text


def test_verify_usage_errors(corpus_dir):
    with pytest.raises(SystemExit) as info:
        main(['verify', str(corpus_dir), '--suite', 'inexistente'])
    assert info.value.code == EXIT_INPUT
    code, _ = run(['verify'])
    assert code == EXIT_INPUT


def test_exit_code_precedence():
    summary = {'failures': 0, 'input_errors': 0, 'skipped_capacity': 0}
    assert exit_code({'summary': dict(summary)}) == EXIT_OK
    assert exit_code({'summary': dict(summary, skipped_capacity=2)}) == EXIT_CAPACITY
    assert exit_code({'summary': dict(summary, skipped_capacity=2, input_errors=1)}) == EXIT_INPUT
    assert exit_code({'summary': dict(summary, failures=1, input_errors=1)}) == EXIT_VIOLATION


def test_pool_over_constructed_groups():
    cases = [GroupCase(symmetric(3)), GroupCase(dihedral(4))]
    suites = parse_suites('equivalences,carter')
    results = run_pool(cases, suites, jobs=2)
    document = aggregate(results, [], suites, 2, 2000, 300)
    assert document['summary']['failures'] == 0
    assert document['schema_version'] == 1
    assert [g['name'] for g in document['groups']] == ['D8', 'S3']


def test_equivalences_suite_checks_derived_subgroup():
    report = SUITES['equivalences'].run(GroupCase(symmetric(3)))
    rows = [c for c in report.checks if c.check_id.endswith('_outside_derived')]
    assert len(rows) == 1 and rows[0].status == 'pass'


def test_load_directory(corpus_dir):
    cases, errors = load_directory(str(corpus_dir))
    assert [c.name for c in cases] == ['D8', 'S3']
    assert errors == []


# --- construct ---

def test_construct_writes_group_and_manifest(tmp_path):
    target = tmp_path / 'ut.grp'
    code, text = run(['construct', 'unitriangular', '--n', '3', '--q', '3', '-o', str(target)])
    assert code == EXIT_OK
    G = parse_group_file(target)
    assert G.order() == 27
    manifest = json.loads((tmp_path / 'ut.grp.manifest.json').read_text(encoding='utf-8'))
    assert manifest['expected']['designated_centralizer_order'] == 9
    assert "elemento designado" in text


def test_construct_missing_parameter(tmp_path):
    with pytest.raises(SystemExit) as info:
        main(['construct', 'extraspecial', '--p', '3', '-o', str(tmp_path / 'x.grp')])
    assert info.value.code == EXIT_INPUT


def test_construct_capacity(tmp_path):
    code, _ = run(['construct', 'unitriangular', '--n', '3', '--q', '17',
                   '-o', str(tmp_path / 'grande.grp')])
    assert code == EXIT_CAPACITY


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
