import argparse
import json
import sys

from nucleo.permutation import parse_permutation
from anticentral.cchain import c_chain
from anticentral.criteria import (
    centralizer_order, commutator_index, equivalence_report, find_anticentral_classes,
)
from anticentral.sylowhall import hall_system
from caracteres.table import character_table, export_table
from cli.runner import (
    EXIT_CAPACITY, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, aggregate, exit_code, load_directory,
    run_pool,
)
from cli.suites import GroupCase, parse_suites
from estrutura.series import is_solvable, nilpotency_class
from estrutura.subgroups import derived_subgroup
from utils.config import CHARTAB_MAX_ORDER, STRUCTURAL_MAX_ORDER, enumeration_bound
from utils.errors import AcgError, CapacityError, ManifestMismatchError, TheoremViolationError
from utils.groupfile import parse_group_file, write_group_file
from utils.logger import log_error, log_info
from utils.report import VerificationReport
from zoo.corpus import builtin_corpus
from zoo.manifest import GroupManifest, build_family, construct, expected_properties, verify_manifest

CONSTRUCT_FAMILIES = ('abelian', 'two_generated_2group', 'extraspecial', 'unitriangular',
                      'central_product_sl23_e', 'fpf_semidirect', 'classical')


def _write_json(path, document):
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(document, f, indent=2, sort_keys=True, ensure_ascii=False)
        f.write('\n')


# --- analyze ---

def _describe_element(G, a, report, out):
    print(f"  a = {a}", file=out)
    print(f"    |C_G(a)| = {centralizer_order(G, a)}", file=out)
    try:
        cert = equivalence_report(G, a)
        report.record(f"equivalence[{a}]", "(i)-(iv) concordam", cert.agree, cert.to_dict())
        print(f"    condições: {cert.evaluated}", file=out)
    except TheoremViolationError as exc:
        report.record(f"equivalence[{a}]", str(exc), False, exc.witness)
        print(f"    VIOLAÇÃO: {exc}", file=out)
        return
    if not cert.is_anticentral:
        print("    não é anticentral", file=out)
        return
    D = c_chain(G, a).limit
    print(f"    D = C^∞(a): ordem {D.order()}, classe de nilpotência {nilpotency_class(D)}", file=out)
    if is_solvable(G):
        try:
            system = hall_system(G, G, a)
        except TheoremViolationError as exc:
            report.record(f"hall[{a}]", str(exc), False, exc.witness)
            print(f"    VIOLAÇÃO: {exc}", file=out)
            return
        summary = ', '.join(f"{list(k)}: {v}" for k, v in sorted(system.orders().items()) if k)
        print(f"    sistema de Hall: {summary}", file=out)


def analyze_command(args, out=sys.stdout):
    try:
        G = parse_group_file(args.file)
    except (AcgError, OSError, ValueError) as exc:
        print(f"Erro de entrada: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = VerificationReport(G.label(), 'analyze', {'enum_bound': enumeration_bound()})
    code = EXIT_OK
    try:
        D = derived_subgroup(G)
        print(f"Grupo {G.label()} (grau {G.degree})", file=out)
        print(f"|G| = {G.order()}, |G'| = {D.order()}, |G:G'| = {commutator_index(G)}", file=out)
        print(f"solúvel: {'sim' if is_solvable(G) else 'não'}", file=out)
        if args.element:
            a = parse_permutation(args.element, G.degree)
            if a not in G:
                print(f"Erro de entrada: {a} não pertence ao grupo", file=sys.stderr)
                return EXIT_INPUT
            elements = [a]
        else:
            classes = find_anticentral_classes(G)
            report.engine['anticentral_classes'] = len(classes)
            if not classes:
                print("nenhum elemento anticentral", file=out)
            else:
                print(f"{len(classes)} classes anticentrais:", file=out)
            elements = [c.representative for c in classes]
        for a in elements:
            _describe_element(G, a, report, out)
    except CapacityError as exc:
        report.skip('capacity', "análise do grupo", str(exc))
        print(f"Capacidade excedida: {exc}", file=sys.stderr)
    except AcgError as exc:
        print(f"Erro de entrada: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if args.emit_chartab:
        if G.order() > CHARTAB_MAX_ORDER:
            report.skip('chartab', "tabela de caracteres", f"ordem {G.order()} > {CHARTAB_MAX_ORDER}")
        else:
            try:
                out.write(export_table(character_table(G)))
            except CapacityError as exc:
                report.skip('chartab', "tabela de caracteres", str(exc))

    if args.out:
        _write_json(args.out, report.to_dict())
    if report.failures:
        code = EXIT_VIOLATION
    elif report.skipped:
        code = EXIT_CAPACITY
    return code


# --- verify ---

def _builtin_cases():
    cases = []
    mismatches = []
    for manifest in builtin_corpus():
        try:
            G, a = construct(manifest)
        except ManifestMismatchError as exc:
            log_error(str(exc), "VERIFY")
            mismatches.append({'name': manifest.name, 'error': str(exc)})
            continue
        cases.append(GroupCase(G, a, manifest))
    return cases, mismatches


def verify_command(args, out=sys.stdout):
    if not args.directory and not args.builtin:
        print("Informe um diretório ou --builtin", file=sys.stderr)
        return EXIT_INPUT
    suite_ids = args.suite
    cases = []
    input_errors = []
    mismatches = []
    if args.builtin:
        cases, mismatches = _builtin_cases()
    if args.directory:
        try:
            loaded, input_errors = load_directory(args.directory)
        except OSError as exc:
            print(f"Erro de entrada: {exc}", file=sys.stderr)
            return EXIT_INPUT
        cases.extend(loaded)
    cases = [c for c in cases if c.group.order() <= args.max_order]

    log_info(f"Verificando {len(cases)} grupos com {len(suite_ids)} suítes", "CLI")
    results = run_pool(cases, suite_ids, args.jobs, args.max_order, args.chartab_max_order)
    document = aggregate(results, input_errors, suite_ids, args.jobs, args.max_order,
                         args.chartab_max_order)
    document['manifest_mismatches'] = mismatches
    document['summary']['failures'] += len(mismatches)

    for entry in document['groups']:
        checks = [c for r in entry['suites'].values() for c in r['checks']]
        failed = sum(1 for c in checks if c['status'] == 'fail')
        status = 'FALHA' if failed else 'ok'
        print(f"{entry['name']:<14} ordem {entry['order']:>5}  {len(checks):>5} verificações  {status}",
              file=out)
    for error in input_errors:
        print(f"arquivo ignorado: {error['path']}: {error['error']}", file=out)
    summary = document['summary']
    print(f"Total: {summary['groups']} grupos, {summary['checks']} verificações, "
          f"{summary['failures']} falhas, {summary['skipped_capacity']} puladas", file=out)
    if args.out:
        _write_json(args.out, document)
    return exit_code(document)


# --- construct ---

def _params_from_args(args):
    family = args.family
    if family == 'abelian' or family == 'fpf_semidirect':
        return {'factors': args.factors}
    if family == 'two_generated_2group':
        return {'kind': args.kind, 'order': args.order}
    if family == 'extraspecial':
        return {'p': args.p, 'order': args.order, 'exponent': args.exponent}
    if family == 'unitriangular':
        return {'n': args.n, 'q': args.q}
    if family == 'central_product_sl23_e':
        return {'e_kind': args.e_kind}
    params = {'kind': args.kind}
    for key in ('n', 'p', 'd'):
        if getattr(args, key) is not None:
            params[key] = getattr(args, key)
    return params


def construct_command(args, parser, out=sys.stdout):
    params = _params_from_args(args)
    missing = [k for k, v in params.items() if v is None]
    if missing:
        parser.error(f"parâmetros ausentes para {args.family}: {', '.join('--' + m for m in missing)}")
    try:
        G, a = build_family(args.family, params)
    except (ValueError, TypeError, KeyError) as exc:
        parser.error(f"parâmetros inválidos para {args.family}: {exc}")
    except CapacityError as exc:
        print(f"Capacidade excedida: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    manifest = GroupManifest(G.name or args.family, args.family, params,
                             expected_properties(args.family, params),
                             a.to_cycle_string() if a is not None else None)
    try:
        verify_manifest(G, manifest, a)
    except ManifestMismatchError as exc:
        print(f"Manifesto divergente: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except CapacityError as exc:
        print(f"Capacidade excedida: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    write_group_file(G, args.output)
    with open(f"{args.output}.manifest.json", 'w', encoding='utf-8') as f:
        f.write(manifest.to_json() + '\n')
    print(f"{manifest.name}: grau {G.degree}, escrito em {args.output}", file=out)
    if a is not None:
        print(f"  elemento designado: {a}", file=out)
    for key, value in sorted(manifest.expected.items()):
        print(f"  {key} = {value}", file=out)
    return EXIT_OK


# --- parser ---

class _Parser(argparse.ArgumentParser):
    """Erros de uso saem com o código de erro de entrada."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: erro: {message}\n")


def _suite_list(text):
    try:
        return parse_suites(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _int_list(text):
    try:
        return [int(x) for x in text.split(',') if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"lista de inteiros inválida: {text!r}")


def build_parser():
    parser = _Parser(
        prog='acg', description="Elementos anticentrais em grupos de permutações finitos")
    sub = parser.add_subparsers(dest='command', required=True)

    analyze = sub.add_parser('analyze', help="analisa um arquivo de grupo")
    analyze.add_argument('file')
    analyze.add_argument('--element', help="elemento em notação de ciclos, ex. \"(1 2)(3 4)\"")
    analyze.add_argument('--emit-chartab', action='store_true', help="anexa a tabela de caracteres")
    analyze.add_argument('--out', help="arquivo JSON do relatório")

    verify = sub.add_parser('verify', help="verifica os teoremas num corpus")
    verify.add_argument('directory', nargs='?')
    verify.add_argument('--builtin', action='store_true', help="inclui o corpus embutido")
    verify.add_argument('--suite', type=_suite_list, default=parse_suites(None),
                        help="suítes separadas por vírgula (padrão: todas)")
    verify.add_argument('--jobs', type=int, default=1)
    verify.add_argument('--max-order', type=int, default=STRUCTURAL_MAX_ORDER)
    verify.add_argument('--chartab-max-order', type=int, default=CHARTAB_MAX_ORDER)
    verify.add_argument('--out', help="arquivo JSON do relatório agregado")

    construct_p = sub.add_parser('construct', help="constrói um grupo do zoológico")
    construct_p.add_argument('family', choices=CONSTRUCT_FAMILIES)
    construct_p.add_argument('-o', '--output', required=True)
    construct_p.add_argument('--n', type=int)
    construct_p.add_argument('--q', type=int)
    construct_p.add_argument('--p', type=int)
    construct_p.add_argument('--d', type=int)
    construct_p.add_argument('--order', type=int)
    construct_p.add_argument('--exponent')
    construct_p.add_argument('--kind')
    construct_p.add_argument('--e-kind', choices=('D8', 'Q8'))
    construct_p.add_argument('--factors', type=_int_list)
    return parser


def main(argv=None, out=sys.stdout):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == 'analyze':
        return analyze_command(args, out)
    if args.command == 'verify':
        return verify_command(args, out)
    return construct_command(args, parser, out)


if __name__ == '__main__':
    sys.exit(main())
