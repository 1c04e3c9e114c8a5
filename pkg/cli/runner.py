"""Pool de threads sobre os grupos e agregação do relatório de verificação."""

import os
import queue
import threading
import time

from cli.suites import GroupCase, SUITES, order_limit
from utils.config import CHARTAB_MAX_ORDER, SCHEMA_VERSION, STRUCTURAL_MAX_ORDER, enumeration_bound
from utils.errors import AcgError, CapacityError
from utils.groupfile import parse_group_file
from utils.logger import log_error, log_info, log_warning
from utils.report import STATUS_FAIL, STATUS_SKIPPED, VerificationReport

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_CAPACITY = 2
EXIT_INPUT = 3

GROUP_FILE_SUFFIXES = ('.grp', '.txt', '.group')


def load_directory(path):
    """(casos, erros de entrada) para os arquivos de grupo do diretório, em ordem de nome."""
    cases = []
    errors = []
    for entry in sorted(os.listdir(path)):
        full = os.path.join(path, entry)
        if not os.path.isfile(full) or not entry.endswith(GROUP_FILE_SUFFIXES):
            continue
        try:
            G = parse_group_file(full)
        except (AcgError, OSError, ValueError) as exc:
            log_warning(f"Arquivo ignorado: {full}: {exc}", "VERIFY")
            errors.append({'path': full, 'error': str(exc)})
            continue
        cases.append(GroupCase(G, source=full))
    log_info(f"{len(cases)} grupos lidos de {path}, {len(errors)} com erro", "VERIFY")
    return cases, errors


def run_suite(case, suite, max_order, chartab_max_order):
    """Relatório de uma suíte num grupo; erros do projeto viram linhas do relatório."""
    G = case.group
    limit = order_limit(suite, max_order, chartab_max_order)
    if G.order() > limit:
        report = VerificationReport(case.name, suite.suite_id)
        report.engine['not_run'] = f"ordem {G.order()} > {limit}"
        return report
    try:
        report = suite.run(case)
    except CapacityError as exc:
        report = VerificationReport(case.name, suite.suite_id)
        report.skip('capacity', suite.description, str(exc))
    except AcgError as exc:
        log_error(f"{case.name} [{suite.suite_id}]: {exc}", "VERIFY")
        report = getattr(exc, 'report', None) or VerificationReport(case.name, suite.suite_id)
        witness = getattr(exc, 'witness', None) or {'error': type(exc).__name__}
        report.record('error', str(exc), False, witness)
    report.group = case.name
    report.suite = suite.suite_id
    return report


def verify_case(case, suite_ids, max_order, chartab_max_order):
    reports = {}
    timing = {}
    for suite_id in suite_ids:
        start = time.perf_counter()
        reports[suite_id] = run_suite(case, SUITES[suite_id], max_order, chartab_max_order)
        timing[suite_id] = round(time.perf_counter() - start, 4)
    failures = sum(len(r.failures) for r in reports.values())
    log_info(f"{case.name}: {len(suite_ids)} suítes, {failures} falhas", "VERIFY")
    return reports, timing


def run_pool(cases, suite_ids, jobs=1, max_order=STRUCTURAL_MAX_ORDER,
             chartab_max_order=CHARTAB_MAX_ORDER):
    """Distribui os grupos entre `jobs` threads; cada grupo é verificado por um único worker."""
    pending = queue.Queue()
    for case in cases:
        pending.put(case)
    results = []
    lock = threading.Lock()

    def worker():
        while True:
            try:
                case = pending.get_nowait()
            except queue.Empty:
                return
            reports, timing = verify_case(case, suite_ids, max_order, chartab_max_order)
            with lock:
                results.append((case, reports, timing))

    threads = [threading.Thread(target=worker) for _ in range(max(1, jobs))]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    return sorted(results, key=lambda r: r[0].name)


def aggregate(results, input_errors, suite_ids, jobs, max_order, chartab_max_order):
    """Documento agregado; os tempos ficam em 'timing', fora do corpo determinístico."""
    groups = []
    timing = {}
    checks = failures = skipped = 0
    for case, reports, group_timing in results:
        entry = {
            'name': case.name,
            'order': case.group.order(),
            'degree': case.group.degree,
            'suites': {s: reports[s].to_dict() for s in suite_ids},
        }
        if case.source is not None:
            entry['source'] = case.source
        groups.append(entry)
        timing[case.name] = group_timing
        for r in reports.values():
            checks += len(r.checks)
            failures += sum(1 for c in r.checks if c.status == STATUS_FAIL)
            skipped += sum(1 for c in r.checks if c.status == STATUS_SKIPPED)
    return {
        'schema_version': SCHEMA_VERSION,
        'engine': {
            'enum_bound': enumeration_bound(),
            'max_order': max_order,
            'chartab_max_order': chartab_max_order,
            'jobs': jobs,
            'suites': list(suite_ids),
        },
        'groups': groups,
        'input_errors': input_errors,
        'summary': {
            'groups': len(groups),
            'checks': checks,
            'failures': failures,
            'skipped_capacity': skipped,
            'input_errors': len(input_errors),
        },
        'timing': timing,
    }


def exit_code(document):
    """Precedência: violação (1) > erro de entrada (3) > pulos por capacidade (2) > sucesso (0)."""
    summary = document['summary']
    if summary['failures']:
        return EXIT_VIOLATION
    if summary['input_errors']:
        return EXIT_INPUT
    if summary['skipped_capacity']:
        return EXIT_CAPACITY
    return EXIT_OK
