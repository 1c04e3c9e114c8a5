from nucleo.gset import coset_action
from nucleo.group import PermGroup
from nucleo.permutation import commutator, conjugate
from anticentral.cchain import c_chain
from anticentral.criteria import is_anticentral
from estrutura.classes import conjugacy_classes
from estrutura.lattice import subgroup_lattice
from estrutura.series import is_nilpotent
from estrutura.subgroups import (
    center, centralizer, conjugate_subgroup, derived_subgroup, intersection, is_supplement,
    normalizer, same_subgroup,
)
from utils.config import ABNORMAL_SAMPLE, LATTICE_LIMIT, SUPPLEMENT_SAMPLE
from utils.errors import (
    NotAnticentralError, NotASubgroupError, PreconditionError, TheoremViolationError,
)
from utils.logger import log_debug
from utils.report import VerificationReport


def _require_anticentral(G, a):
    if not is_anticentral(G, a):
        raise NotAnticentralError(f"{a} não é anticentral em {G.label()}")


def sample(elements, size):
    """Amostra determinística: elementos igualmente espaçados."""
    elements = list(elements)
    if len(elements) <= size:
        return elements
    step = -(-len(elements) // size)
    return elements[::step]


def fixed_point_analysis(omega, G, a):
    """Único ponto de Ω fixado por a, quando G' age transitivamente em Ω."""
    _require_anticentral(G, a)
    D = derived_subgroup(G)
    if not omega.restrict(D).is_transitive():
        raise PreconditionError(f"G' não age transitivamente no G-conjunto ({len(omega)} pontos)")
    fixed = omega.fixed_points(a)
    if len(fixed) != 1:
        raise TheoremViolationError(
            f"a = {a} fixa {len(fixed)} pontos em vez de exatamente um",
            {'element': a, 'fixed_points': fixed, 'points': len(omega)})
    return fixed[0]


def is_abnormal(G, H, bound=LATTICE_LIMIT, sample_size=ABNORMAL_SAMPLE):
    """(abnormal, contraexemplo, regime): x ∈ ⟨H, H^x⟩ para todo x (ou para uma amostra)."""
    elements = G.elements()
    regime = 'exhaustive' if G.order() <= bound else 'sampled'
    candidates = elements if regime == 'exhaustive' else sample(elements, sample_size)
    for x in candidates:
        if x in H:
            continue
        join = PermGroup(list(H.generators) + [conjugate(h, x) for h in H.generators], degree=G.degree)
        if x not in join:
            return False, x, regime
    return True, None, regime


def supplement_properties(G, H, a):
    """Propriedades de um suplemento H de G' contendo o elemento anticentral a."""
    if H.degree != G.degree or not G.contains_all(H.generators):
        raise NotASubgroupError(f"{H.label()} não é subgrupo de {G.label()}")
    if a not in H:
        raise PreconditionError(f"{a} não pertence ao suplemento")
    if not is_supplement(G, H):
        raise PreconditionError(f"HG' ≠ G para H = {H.label()}")
    _require_anticentral(G, a)

    report = VerificationReport(G.label(), 'supplements')
    D = derived_subgroup(G)
    H_elements = H.elements()

    a_H = {commutator(a, h) for h in H_elements}
    H_derived = derived_subgroup(H).element_set()
    meet = intersection(H, D).element_set()
    report.record('commutator_sets', "[a,H] = H' = H ∩ G'", a_H == H_derived == meet,
                  {'a_H': a_H, 'H_derived': H_derived, 'H_meet_derived': meet})
    report.record('anticentral_in_supplement', "a é anticentral em H", is_anticentral(H, a),
                  {'element': a, 'supplement': H})

    # {x : a ∈ H^x} = {x : x a x^-1 ∈ H}
    lying = [x for x in G.elements() if x * a * ~x in H]
    ok = len(lying) == H.order() and all(x in H for x in lying)
    report.record('conjugates_containing_a', "{x : a ∈ H^x} = H", ok,
                  {'outside': [x for x in lying if x not in H][:5], 'count': len(lying)})

    C = centralizer(G, a)
    report.record('centralizer_inside', "C_G(a) ≤ H", H.contains_all(C.generators),
                  {'centralizer': C})
    Nm = normalizer(G, H)
    report.record('self_normalizing', "N_G(H) = H", Nm.order() == H.order(), {'normalizer': Nm})

    gset, _ = coset_action(G, H)
    fixed = gset.fixed_points(a)
    report.record('unique_fixed_coset', "a fixa exatamente uma classe lateral Hx", len(fixed) == 1,
                  {'fixed_cosets': fixed})
    report.record('permutation_character', "π(a) = 1 para o caráter de permutação de G/H",
                  gset.permutation_character(a) == 1, {'value': gset.permutation_character(a)})

    abnormal, counter, regime = is_abnormal(G, H)
    report.engine['abnormal_regime'] = regime
    report.record('abnormal', "x ∈ ⟨H, H^x⟩ para todo x ∈ G", abnormal, {'x': counter})
    log_debug(f"Suplemento de ordem {H.order()}: {len(report.failures)} falhas", "SUPLEMENTOS")
    return report.raise_on_failure()


def _sampled_candidates(G, a):
    """Subgrupos ⟨a, x⟩ para representantes de classe e geradores, mais ⟨a, G⟩."""
    xs = [c.representative for c in conjugacy_classes(G)] + list(G.generators)
    groups = [PermGroup([a], degree=G.degree), G]
    for x in sample(xs, SUPPLEMENT_SAMPLE):
        groups.append(PermGroup([a, x], degree=G.degree))
    unique = []
    for K in groups:
        if not any(same_subgroup(K, L) for L in unique):
            unique.append(K)
    return unique


def carter_verify(G, a, lattice_limit=LATTICE_LIMIT):
    """D = C^∞(a) é o subgrupo de Carter determinado por a: as cinco afirmações."""
    _require_anticentral(G, a)
    chain = c_chain(G, a)
    D = chain.limit
    report = VerificationReport(G.label(), 'carter')
    report.engine['D_order'] = D.order()

    report.record('subgroup', "C^∞(a) é subgrupo", chain.is_subgroup, {'union_size': len(chain.union)})
    nil = is_nilpotent(D)
    Nm = normalizer(G, D)
    report.record('nilpotent_selfnormalizing', "D nilpotente e N_G(D) = D",
                  nil and Nm.order() == D.order(), {'D': D, 'normalizer': Nm, 'nilpotent': nil})
    report.record('supplement', "DG' = G", is_supplement(G, D), {'D': D})

    if G.order() <= lattice_limit:
        regime = 'exhaustive'
        candidates = subgroup_lattice(G, containing=[a])
    else:
        regime = 'sampled'
        candidates = _sampled_candidates(G, a)
    report.engine['carter_regime'] = regime
    report.engine['carter_candidates'] = len(candidates)

    bad_supp = None
    bad_nil = None
    bad_unique = None
    for K in candidates:
        if a not in K:
            continue
        supp = is_supplement(G, K)
        contains_D = K.contains_all(D.generators)
        if supp and not contains_D and bad_supp is None:
            bad_supp = K
        nilK = is_nilpotent(K)
        if nilK and not D.contains_all(K.generators) and bad_nil is None:
            bad_nil = K
        if nilK and supp and not same_subgroup(K, D) and bad_unique is None:
            bad_unique = K
    report.record('supplements_contain_D', "todo suplemento de G' contendo a contém D",
                  bad_supp is None, {'subgroup': bad_supp, 'regime': regime})
    report.record('nilpotent_inside_D', "todo subgrupo nilpotente contendo a está em D",
                  bad_nil is None, {'subgroup': bad_nil, 'regime': regime})
    report.record('unique_nilpotent_supplement', "D é o único suplemento nilpotente contendo a",
                  bad_unique is None, {'subgroup': bad_unique, 'regime': regime})
    if regime == 'exhaustive':
        carters, stranger = _carter_conjugacy(G, D)
        report.engine['carter_conjugates'] = carters
        report.record('carter_conjugacy', "todo subgrupo nilpotente autonormalizante é conjugado a D",
                      stranger is None, {'subgroup': stranger, 'D': D})
    log_debug(f"Carter {G.label()} a={a}: |D| = {D.order()}, regime {regime}", "SUPLEMENTOS")
    return report


def _self_normalizing(G, K):
    return not any(x not in K and all(conjugate(k, x) in K for k in K.generators)
                   for x in G.elements())


def carter_subgroups(G):
    """Subgrupos nilpotentes autonormalizantes de G, por varredura do reticulado.

    Z(G) ≤ N_G(K), logo só entram candidatos que contêm Z(G).
    """
    def build():
        Z = center(G)
        return [K for K in subgroup_lattice(G, containing=list(Z.generators))
                if is_nilpotent(K) and _self_normalizing(G, K)]

    return G.cached('carter_subgroups', build)


def _carter_conjugacy(G, D):
    """(nº de subgrupos nilpotentes autonormalizantes, um deles não conjugado a D)."""
    conjugates = []
    for g in G.elements():
        Dg = conjugate_subgroup(D, g)
        if not any(same_subgroup(Dg, E) for E in conjugates):
            conjugates.append(Dg)
    found = carter_subgroups(G)
    stranger = next((K for K in found if not any(same_subgroup(K, E) for E in conjugates)), None)
    return len(found), stranger
