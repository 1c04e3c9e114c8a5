"""Registro das suítes de verificação: cada suíte recebe um caso (grupo + contexto) e devolve um relatório."""

from sympy import primefactors

from nucleo.oracle import (
    brute_centralizer, brute_classes, brute_derived, brute_elements, is_p_group_set,
)
from anticentral.cchain import c_chain
from anticentral.chief import (
    chief_factor_criterion, hereditary_checks, invariant_class_bijection, solvability_contrapositive,
)
from anticentral.criteria import equivalence_report, find_anticentral_classes, is_anticentral
from anticentral.examples import (
    extraspecial_law, maximal_class_law, metabelian_law, minimal_derived_dichotomy,
    small_p_group_law, unitriangular_law,
)
from anticentral.supplements import carter_verify, sample, supplement_properties
from anticentral.sylowhall import (
    cyclic_sylow_complement_check, hall_system, normal_sylow_criteria, sylow_meet_supplement,
    sylow_normalizer_identity, system_normalizer,
)
from caracteres.table import (
    character_table, orthogonality_check, restriction_norm, vanishing_classes,
)
from estrutura.classes import conjugacy_classes
from estrutura.lattice import subgroup_lattice
from estrutura.series import is_solvable
from estrutura.subgroups import (
    centralizer, derived_subgroup, is_normal, is_supplement, p_part, same_subgroup,
)
from estrutura.sylow import sylow_subgroup
from utils.config import (
    CHARAZ_MAX_ORDER, LATTICE_LIMIT, ORACLE_LIMIT, SUPPLEMENT_SAMPLE,
)
from utils.errors import PreconditionError, TheoremViolationError
from utils.report import VerificationReport


class GroupCase:
    """Um grupo a verificar, com o elemento designado e o manifesto (quando vem do zoológico)."""

    def __init__(self, group, designated=None, manifest=None, source=None):
        self.group = group
        self.designated = designated
        self.manifest = manifest
        self.source = source

    @property
    def name(self):
        return self.group.label()


class Suite:
    # limit: 'structural', 'chartab', 'charaz' ou 'oracle'
    def __init__(self, suite_id, description, limit, run):
        self.suite_id = suite_id
        self.description = description
        self.limit = limit
        self.run = run

    def __repr__(self):
        return f"Suite({self.suite_id})"


def _guard(report, prefix, action):
    """Executa uma verificação e incorpora seu relatório; pré-condição falha = não aplicável."""
    try:
        result = action()
    except TheoremViolationError as exc:
        if exc.report is not None:
            report.merge(exc.report, prefix)
        else:
            report.record(prefix, str(exc), False, exc.witness or {})
        return None
    except PreconditionError as exc:
        report.engine.setdefault('not_applicable', []).append(f"{prefix}: {exc}")
        return None
    if isinstance(result, VerificationReport):
        report.merge(result, prefix)
    return result


def _targets(case):
    """Elementos anticentrais a exercitar: todos os representantes de classe (ou uma amostra)."""
    G = case.group
    reps = [c.representative for c in find_anticentral_classes(G)]
    if G.order() > LATTICE_LIMIT:
        reps = sample(reps, SUPPLEMENT_SAMPLE)
    a = case.designated
    if a is not None and a not in reps and is_anticentral(G, a):
        reps.append(a)
    return reps


# --- suítes ---

def run_equivalences(case):
    G = case.group
    report = VerificationReport(G.label(), 'equivalences')
    for i, cls in enumerate(conjugacy_classes(G)):
        cert = _guard(report, f"class{i}", lambda: equivalence_report(G, cls.representative))
        if cert is not None:
            report.record(f"class{i}", "(i) ⟺ (ii) ⟺ (iii) ⟺ (iv) no representante da classe",
                          cert.agree, cert.to_dict())
            if cert.is_anticentral and not G.is_abelian():
                report.record(f"class{i}_outside_derived", "a anticentral em G não abeliano ⇒ a ∉ G'",
                              not cert.in_derived, {'element': cls.representative})
    report.engine['classes'] = len(conjugacy_classes(G))
    return report


def _supplements_of(G, a):
    D = c_chain(G, a).limit
    groups = [D, G]
    if G.order() <= LATTICE_LIMIT:
        found = [H for H in subgroup_lattice(G, containing=[a]) if is_supplement(G, H)]
        groups.extend(sample(found, SUPPLEMENT_SAMPLE))
    unique = []
    for H in groups:
        if not any(same_subgroup(H, K) for K in unique):
            unique.append(H)
    return unique


def run_supplements(case):
    G = case.group
    report = VerificationReport(G.label(), 'supplements')
    for a in _targets(case):
        for j, H in enumerate(_supplements_of(G, a)):
            _guard(report, f"{a}.H{j}", lambda: supplement_properties(G, H, a))
    return report


def run_carter(case):
    G = case.group
    report = VerificationReport(G.label(), 'carter')
    for a in _targets(case):
        _guard(report, f"{a}", lambda: carter_verify(G, a))
    return report


def run_sylow_hall(case):
    G = case.group
    report = VerificationReport(G.label(), 'sylow-hall')
    if not is_solvable(G):
        report.engine['not_applicable'] = ['grupo não solúvel']
        return report
    D = derived_subgroup(G)
    for a in _targets(case):
        system = _guard(report, f"{a}.hall", lambda: hall_system(G, G, a))
        if system is not None:
            report.merge(system.report, f"{a}.hall")
            limit = c_chain(G, a).limit
            report.record(f"{a}.system_normalizer", "normalizador do sistema = C^∞(a)",
                          same_subgroup(system_normalizer(system, G), limit),
                          {'normalizer': system_normalizer(system, G), 'D': limit})
        _guard(report, f"{a}.sylownorm", lambda: sylow_normalizer_identity(G, a))
        if not D.is_trivial:
            derived_system = _guard(report, f"{a}.hallD", lambda: hall_system(G, D, a))
            if derived_system is not None:
                report.merge(derived_system.report, f"{a}.hallD")
        carter = c_chain(G, a).limit
        for p in primefactors(G.order()):
            _guard(report, f"{a}.meet{p}", lambda: sylow_meet_supplement(G, carter, a, p))
    return report


def run_p_complement(case):
    G = case.group
    report = VerificationReport(G.label(), 'p-complement')
    D = derived_subgroup(G)
    for a in _targets(case):
        for p in primefactors(D.order()):
            _guard(report, f"{a}.p{p}", lambda: cyclic_sylow_complement_check(G, a, D, p))
    return report


def run_normal_sylow(case):
    G = case.group
    report = VerificationReport(G.label(), 'normal-sylow')
    normal = [p for p in primefactors(G.order()) if is_normal(G, sylow_subgroup(G, p))]
    report.engine['normal_sylow_primes'] = normal
    reps = [c.representative for c in conjugacy_classes(G)]
    if G.order() > LATTICE_LIMIT:
        reps = sample(reps, SUPPLEMENT_SAMPLE)
    for p in normal:
        for x in reps:
            _guard(report, f"p{p}.{x}", lambda: normal_sylow_criteria(G, x, p))
    return report


def run_invcls(case):
    G = case.group
    report = VerificationReport(G.label(), 'invcls')
    for a in _targets(case):
        _guard(report, f"{a}", lambda: invariant_class_bijection(G, a))
    return report


def run_charaz(case):
    G = case.group
    report = VerificationReport(G.label(), 'charaz')
    if not is_solvable(G):
        report.engine['not_applicable'] = ['grupo não solúvel']
        return report
    for i, cls in enumerate(conjugacy_classes(G)):
        _guard(report, f"class{i}", lambda: chief_factor_criterion(G, cls.representative))
    return report


def run_solvability(case):
    return solvability_contrapositive(case.group)


def run_hereditary(case):
    G = case.group
    report = VerificationReport(G.label(), 'hereditary')
    for a in _targets(case):
        _guard(report, f"{a}", lambda: hereditary_checks(G, a))
    return report


def run_chartab(case):
    G = case.group
    table = character_table(G)
    report = VerificationReport(G.label(), 'chartab')
    report.engine['prime'] = table.prime
    report.engine['conductor'] = table.conductor
    report.engine['classes'] = len(table.classes)
    sizes = table.class_sizes
    bad = None
    for i in range(len(sizes)):
        for j in range(len(sizes)):
            expected = G.order() // sizes[i] if i == j else 0
            if orthogonality_check(table, i, j) != expected:
                bad = bad or (i, j)
    report.record('second_orthogonality', "Σ χ(g_i)·conj(χ(g_j)) = |C_G(g_i)|·δ_ij", bad is None,
                  {'classes': bad})
    anticentral = find_anticentral_classes(G)
    if anticentral:
        D = derived_subgroup(G)
        norms = {chi: restriction_norm(table, G, D, chi) for chi in table.nonlinear()}
        reducible = all(n > 1 for n in norms.values())
        report.record('nonlinear_restriction_reducible', "⟨χ_{G'}, χ_{G'}⟩ > 1 para χ não linear",
                      reducible, {'norms': norms})
        vanishing = set(vanishing_classes(table))
        indices = {table.class_of_element(c.representative) for c in anticentral}
        report.record('anticentral_classes_vanish', "χ(a) = 0 para χ não linear e a anticentral",
                      indices <= vanishing, {'anticentral': indices, 'vanishing': vanishing})
    return report


def run_examples(case):
    G = case.group
    report = VerificationReport(G.label(), 'examples')
    _guard(report, 'extraspecial', lambda: extraspecial_law(G))
    _guard(report, 'maximal_class', lambda: maximal_class_law(G))
    _guard(report, 'minimal_derived', lambda: minimal_derived_dichotomy(G))
    _guard(report, 'small_p_group', lambda: small_p_group_law(G))
    _guard(report, 'metabelian', lambda: metabelian_law(G))
    manifest = case.manifest
    if manifest is not None and manifest.family == 'unitriangular' and case.designated is not None:
        params = manifest.params
        _guard(report, 'unitriangular',
               lambda: unitriangular_law(G, case.designated, params['q'], params['n']))
    return report


def run_oracle(case):
    G = case.group
    report = VerificationReport(G.label(), 'oracle')
    elements = brute_elements(G, ORACLE_LIMIT)
    report.record('order', "|G| (BSGS) = |G| (fecho por força bruta)", len(elements) == G.order(),
                  {'bsgs': G.order(), 'brute': len(elements)})
    classes = conjugacy_classes(G)
    brute = sorted(brute_classes(elements), key=min)
    same = [c.member_set for c in classes] == [frozenset(c) for c in brute]
    report.record('classes', "classes de conjugação coincidem", same,
                  {'engine': [c.size for c in classes], 'brute': [len(c) for c in brute]})
    bad = [c.representative for c in classes
           if centralizer(G, c.representative).element_set() != brute_centralizer(elements, c.representative)]
    report.record('centralizers', "centralizadores coincidem", not bad, {'elements': bad[:1]})
    derived = brute_derived(elements, G.degree, ORACLE_LIMIT)
    report.record('derived', "G' coincide", derived == set(derived_subgroup(G).elements()),
                  {'engine': derived_subgroup(G).order(), 'brute': len(derived)})
    for p in primefactors(G.order()):
        P = sylow_subgroup(G, p)
        ok = P.order() == p_part(G.order(), p) and is_p_group_set(P.elements(), p)
        report.record(f"sylow{p}", f"Sylow {p}-subgrupo tem ordem {p_part(G.order(), p)}", ok,
                      {'order': P.order()})
    return report


SUITES = {s.suite_id: s for s in [
    Suite('equivalences', "quatro condições equivalentes", 'structural', run_equivalences),
    Suite('supplements', "propriedades dos suplementos de G'", 'structural', run_supplements),
    Suite('carter', "C^∞(a) como subgrupo de Carter", 'structural', run_carter),
    Suite('sylow-hall', "Sylow invariantes e sistemas de Hall", 'structural', run_sylow_hall),
    Suite('p-complement', "p-complemento normal em G'", 'structural', run_p_complement),
    Suite('normal-sylow', "critérios com Sylow normal", 'structural', run_normal_sylow),
    Suite('invcls', "bijeção com classes invariantes", 'structural', run_invcls),
    Suite('charaz', "critério dos fatores principais", 'charaz', run_charaz),
    Suite('solvability', "anticentral ⇒ solúvel", 'structural', run_solvability),
    Suite('hereditary', "quocientes e produtos diretos", 'structural', run_hereditary),
    Suite('chartab', "tabela de caracteres e anulamento", 'chartab', run_chartab),
    Suite('examples', "leis das famílias de exemplo", 'structural', run_examples),
    Suite('oracle', "motor vs oráculo por força bruta", 'oracle', run_oracle),
]}


def parse_suites(text):
    """'s1,s2' -> lista de ids; 'all' ou vazio -> todas. ValueError para id desconhecido."""
    if text is None or text.strip() in ('', 'all'):
        return list(SUITES)
    ids = [s.strip() for s in text.split(',') if s.strip()]
    unknown = [s for s in ids if s not in SUITES]
    if unknown:
        raise ValueError(f"Suítes desconhecidas: {', '.join(unknown)} (disponíveis: {', '.join(SUITES)})")
    return ids


def order_limit(suite, max_order, chartab_max_order):
    if suite.limit == 'chartab':
        return min(max_order, chartab_max_order)
    if suite.limit == 'charaz':
        return min(max_order, CHARAZ_MAX_ORDER)
    if suite.limit == 'oracle':
        return min(max_order, ORACLE_LIMIT)
    return max_order
