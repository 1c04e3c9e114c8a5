"""Leis das famílias de exemplo: afirmações sobre o conjunto anticentral de grupos concretos."""

from sympy import factorint, isprime

from nucleo.permutation import commutator
from anticentral.criteria import (
    anticentral_elements, centralizer_order, commutator_index, find_anticentral_classes,
    is_anticentral,
)
from caracteres.table import character_table, nonlinear_degrees
from estrutura.series import is_solvable, lower_central_series, nilpotency_class
from estrutura.subgroups import (
    center, centralizer_of, derived_subgroup, intersection, is_normal, normal_closure,
    quotient_group,
)
from utils.config import CHARTAB_MAX_ORDER
from utils.errors import PreconditionError, UnsupportedGroupError
from utils.logger import log_debug
from utils.report import VerificationReport


def _prime_power_order(G):
    """(p, n) com |G| = p^n, ou None."""
    factors = factorint(G.order())
    if len(factors) != 1:
        return None
    (p, n), = factors.items()
    return int(p), int(n)


def is_extraspecial(G):
    pn = _prime_power_order(G)
    if pn is None:
        return False
    p, _ = pn
    Z = center(G)
    D = derived_subgroup(G)
    if Z.order() != p or D.order() != p or not D.contains_all(Z.generators):
        return False
    # Φ(G) = G' ⟺ G/G' elementar abeliano
    return all(x ** p in D for x in G.generators)


def extraspecial_law(G):
    """Ordem p^3: anticentrais = G \\ G'. Ordem maior: conjunto não vazio e nenhum a é
    anticentral em C_G(a)."""
    if not is_extraspecial(G):
        raise PreconditionError(f"{G.label()} não é extraespecial")
    p, n = _prime_power_order(G)
    D = derived_subgroup(G)
    report = VerificationReport(G.label(), 'examples')
    anticentral = set(anticentral_elements(G))
    outside = {x for x in G.elements() if x not in D}
    report.record('extraspecial_outside_derived', "anticentrais = G \\ G'", anticentral == outside,
                  {'anticentral': len(anticentral), 'outside': len(outside)})
    if n > 3:
        report.record('extraspecial_nonempty', "existe elemento anticentral", bool(anticentral),
                      {'order': G.order()})
        for cls in find_anticentral_classes(G):
            a = cls.representative
            C = centralizer_of(G, [a])
            report.record(f"not_in_centralizer[{a}]", "a não é anticentral em C_G(a)",
                          not is_anticentral(C, a), {'element': a, 'centralizer': C})
    return report.raise_on_failure()


def unitriangular_law(G, a, q, n):
    """|G| = q^{n(n-1)/2}, |G:G'| = |C_G(a)| = q^{n-1}, e a tem ordem p^⌈log_p n⌉."""
    p = next(iter(factorint(q)))
    report = VerificationReport(G.label(), 'examples')
    report.record('ut_order', "|G| = q^{n(n-1)/2}", G.order() == q ** (n * (n - 1) // 2),
                  {'order': G.order()})
    report.record('ut_index', "|G:G'| = q^{n-1}", commutator_index(G) == q ** (n - 1),
                  {'index': commutator_index(G)})
    report.record('ut_centralizer', "|C_G(a)| = q^{n-1}", centralizer_order(G, a) == q ** (n - 1),
                  {'element': a, 'centralizer_order': centralizer_order(G, a)})
    expected = 1
    while expected < n:
        expected *= p
    report.record('ut_element_order', "ordem de a = menor potência de p que é ≥ n",
                  a.order() == expected, {'element': a, 'order': a.order(), 'expected': expected})
    return report.raise_on_failure()


def _two_step_centralizer(G, upper, lower):
    """{g : [g, upper] ≤ lower}, como conjunto de elementos."""
    return {g for g in G.elements()
            if all(commutator(g, k) in lower for k in upper.generators)}


def maximal_class_law(G):
    """p-grupo de classe maximal: elementos fora de todo C_G(K_i/K_{i+2}) são anticentrais,
    e os anticentrais têm ordem ≤ p^2."""
    pn = _prime_power_order(G)
    if pn is None or pn[1] < 4:
        raise PreconditionError(f"{G.label()} não é p-grupo de ordem ≥ p^4")
    p, n = pn
    c = nilpotency_class(G)
    if c != n - 1:
        raise PreconditionError(f"{G.label()} não tem classe maximal (classe {c}, ordem p^{n})")
    K = lower_central_series(G)
    excluded = set()
    for i in range(2, c):
        excluded |= _two_step_centralizer(G, K[i - 1], K[i + 1])
    candidates = [x for x in G.elements() if x not in excluded]
    report = VerificationReport(G.label(), 'examples')
    anticentral = set(anticentral_elements(G))
    bad = [x for x in candidates if x not in anticentral]
    report.record('maximal_class_outside', "elementos fora de C_G(K_i/K_{i+2}) são anticentrais",
                  bool(candidates) and not bad, {'candidates': len(candidates), 'counterexample': bad[:1]})
    orders = {x.order() for x in anticentral}
    report.record('maximal_class_order', "anticentrais têm ordem ≤ p^2",
                  max(orders, default=1) <= p * p, {'orders': sorted(orders)})
    log_debug(f"{G.label()}: classe maximal {c}, {len(candidates)} candidatos", "ANTICENTRAL")
    return report.raise_on_failure()


def is_minimal_normal(G, N):
    if N.is_trivial or not is_normal(G, N):
        return False
    return all(normal_closure(G, [x]).order() == N.order()
               for x in N.elements() if not x.is_identity)


def minimal_derived_dichotomy(G):
    """G solúvel com G' normal minimal: ou G' ≤ Z(G) com |G'| = p e todo elemento não central
    é anticentral, ou G' ∩ Z(G) = 1 e todo elemento fora de C_G(G') é anticentral."""
    if not is_solvable(G):
        raise UnsupportedGroupError(f"{G.label()} não é solúvel")
    D = derived_subgroup(G)
    if not is_minimal_normal(G, D):
        raise PreconditionError(f"G' não é normal minimal em {G.label()}")
    Z = center(G)
    report = VerificationReport(G.label(), 'examples')
    if Z.contains_all(D.generators):
        report.engine['dichotomy'] = 'central'
        report.record('central_prime', "G' ≤ Z(G) ⇒ |G'| primo", isprime(D.order()),
                      {'derived_order': D.order()})
        candidates = [x for x in G.elements() if x not in Z]
        claim = "todo elemento não central é anticentral"
    else:
        report.engine['dichotomy'] = 'frobenius'
        report.record('center_meet', "G' ∩ Z(G) = 1", intersection(D, Z).is_trivial,
                      {'meet': intersection(D, Z)})
        CD = centralizer_of(G, D.generators)
        candidates = [x for x in G.elements() if x not in CD]
        claim = "todo elemento fora de C_G(G') é anticentral"
    anticentral = set(anticentral_elements(G))
    bad = [x for x in candidates if x not in anticentral]
    report.record('dichotomy_anticentral', claim, not bad, {'counterexample': bad[:1]})
    if G.order() <= CHARTAB_MAX_ORDER:
        degrees = set(nonlinear_degrees(character_table(G)))
        report.record('single_nonlinear_degree', "caracteres não lineares têm o mesmo grau",
                      len(degrees) <= 1, {'degrees': sorted(degrees)})
    else:
        report.skip('single_nonlinear_degree', "caracteres não lineares têm o mesmo grau",
                    f"ordem {G.order()} > {CHARTAB_MAX_ORDER}")
    return report.raise_on_failure()


def small_p_group_law(G):
    """Grupos de ordem p^n, n ≤ 4, têm elementos anticentrais."""
    pn = _prime_power_order(G)
    if pn is None or pn[1] > 4:
        raise PreconditionError(f"{G.label()} não tem ordem p^n com n ≤ 4")
    report = VerificationReport(G.label(), 'examples')
    report.record('small_p_group', "ordem p^n com n ≤ 4 ⇒ existe elemento anticentral",
                  bool(find_anticentral_classes(G)), {'order': G.order()})
    return report.raise_on_failure()


def metabelian_law(G, A=None):
    """A ⊴ G abeliano com G/A cíclico: todo a com G/A = ⟨aA⟩ é anticentral (A = G' por padrão)."""
    if A is None:
        A = derived_subgroup(G)
    if not is_normal(G, A) or not A.is_abelian():
        raise PreconditionError(f"{A.label()} não é normal abeliano em {G.label()}")
    Q = quotient_group(G, A)
    index = G.order() // A.order()
    if not any(x.order() == index for x in Q.group.elements()):
        raise PreconditionError(f"G/A não é cíclico em {G.label()}")
    report = VerificationReport(G.label(), 'examples')
    generators = [x for x in G.elements() if Q.project(x).order() == index]
    anticentral = set(anticentral_elements(G))
    bad = [x for x in generators if x not in anticentral]
    report.record('metabelian_generators', "G/A = ⟨aA⟩ ⇒ a anticentral", not bad,
                  {'generators': len(generators), 'counterexample': bad[:1]})
    return report.raise_on_failure()
