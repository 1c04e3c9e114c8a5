from itertools import combinations
from math import prod

from sympy import primefactors
try:
    from sympy.core.intfunc import igcdex
except ImportError:
    from sympy.core.numbers import igcdex

from nucleo.group import PermGroup, trivial_group
from nucleo.gset import subgroup_conjugation_gset
from nucleo.permutation import conjugate
from anticentral.cchain import c_chain
from anticentral.criteria import is_anticentral
from estrutura.series import is_solvable
from estrutura.subgroups import (
    centralizer_of, coprime, derived_subgroup, intersection, is_normal, is_supplement, normalizer,
    p_part, product_order, same_subgroup, subgroup_from_elements, subgroup_join,
)
from estrutura.sylow import sylow_subgroup, sylow_subgroups
from utils.errors import (
    NotAnticentralError, NotASubgroupError, NotNormalError, PreconditionError,
    TheoremViolationError, UnsupportedGroupError,
)
from utils.logger import log_debug
from utils.report import VerificationReport


def _require_normal(G, N):
    if N.degree != G.degree or not G.contains_all(N.generators):
        raise NotASubgroupError(f"{N.label()} não é subgrupo de {G.label()}")
    if not is_normal(G, N):
        raise NotNormalError(f"{N.label()} não é normal em {G.label()}")


def _require_anticentral(G, a):
    if not is_anticentral(G, a):
        raise NotAnticentralError(f"{a} não é anticentral em {G.label()}")


def is_invariant(H, a):
    """H^a = H."""
    return all(conjugate(h, a) in H for h in H.generators)


def invariant_sylow(G, N, a, p):
    """O único Sylow p-subgrupo de N normalizado por a."""
    _require_normal(G, N)
    _require_anticentral(G, a)

    def build():
        fixed = [P for P in sylow_subgroups(N, p) if is_invariant(P, a)]
        if len(fixed) != 1:
            raise TheoremViolationError(
                f"a = {a} normaliza {len(fixed)} Sylow {p}-subgrupos de {N.label()}",
                {'element': a.to_cycle_string(), 'prime': p, 'fixed': len(fixed)})
        return fixed[0]

    return N.cached(('invariant_sylow', a, p), build)


class HallSystem:
    """Um Hall π-subgrupo por conjunto de primos π, dois a dois permutáveis."""

    def __init__(self, owner, subgroups, report=None):
        self.owner = owner
        self.subgroups = subgroups
        self.report = report

    def __getitem__(self, primes):
        return self.subgroups[frozenset(primes)]

    @property
    def primes(self):
        return sorted(primefactors(self.owner.order()))

    @property
    def sylow_basis(self):
        return {p: self.subgroups[frozenset([p])] for p in self.primes}

    def orders(self):
        return {tuple(sorted(k)): H.order() for k, H in self.subgroups.items()}

    def __repr__(self):
        return f"HallSystem({self.owner.label()}, {self.orders()})"


def _join_all(N, groups):
    gens = [g for H in groups for g in H.generators]
    return PermGroup(gens, degree=N.degree)


def _meet_all(N, groups):
    result = N
    for H in groups:
        result = intersection(result, H)
    return result


def hall_system(G, N, a):
    """Sistema de Hall de N formado pelos Hall subgrupos invariantes por a."""
    _require_normal(G, N)
    if not is_solvable(N):
        raise UnsupportedGroupError(f"Sistema de Hall exige N solúvel: {N.label()}")
    _require_anticentral(G, a)

    primes = sorted(primefactors(N.order()))
    report = VerificationReport(G.label(), 'hall-system')
    sylow = {p: invariant_sylow(G, N, a, p) for p in primes}
    complements = {p: _join_all(N, [sylow[q] for q in primes if q != p]) for p in primes}

    subgroups = {}
    for size in range(len(primes) + 1):
        for pi in combinations(primes, size):
            pi = frozenset(pi)
            H = _join_all(N, [sylow[p] for p in pi]) if pi else trivial_group(N.degree)
            expected = prod(p_part(N.order(), p) for p in pi)
            report.record(f"order{sorted(pi)}", f"|H_π| = π-parte de |N| para π = {sorted(pi)}",
                          H.order() == expected, {'order': H.order(), 'expected': expected})
            via_complements = _meet_all(N, [complements[p] for p in primes if p not in pi])
            report.record(f"complement_basis{sorted(pi)}",
                          "produto da base de Sylow = interseção da base de complementos",
                          same_subgroup(H, via_complements),
                          {'product': H, 'intersection': via_complements})
            report.record(f"invariant{sorted(pi)}", "H_π normalizado por a", is_invariant(H, a),
                          {'subgroup': H})
            if 1 < H.order() < N.order():
                gset = subgroup_conjugation_gset(N, H)
                fixed = gset.fixed_points(a)
                report.record(f"unique{sorted(pi)}", "único Hall π-subgrupo invariante por a",
                              len(fixed) == 1, {'fixed': len(fixed), 'conjugates': len(gset)})
            subgroups[pi] = H

    items = sorted(subgroups.items(), key=lambda kv: sorted(kv[0]))
    for (pi, H), (sigma, K) in combinations(items, 2):
        ok = product_order(H, K) == subgroup_join(N, H, K).order()
        report.record(f"permute{sorted(pi)}{sorted(sigma)}", "HK = KH (|⟨H,K⟩| = |H||K|/|H∩K|)", ok,
                      {'H': H, 'K': K})
    log_debug(f"Sistema de Hall de {N.label()}: {len(subgroups)} subgrupos", "SYLOW-HALL")
    report.raise_on_failure()
    return HallSystem(N, subgroups, report)


def system_normalizer(system, G):
    """Interseção dos normalizadores em G dos membros da base de Sylow."""
    result = G
    for P in system.sylow_basis.values():
        result = intersection(result, normalizer(G, P))
    return result


def sylow_normalizer_identity(G, a):
    """C^∞(a) = ∩ N_G(P) sobre os Sylow subgrupos P invariantes por a."""
    _require_anticentral(G, a)
    D = c_chain(G, a).limit
    meet = G
    for p in primefactors(G.order()):
        meet = intersection(meet, normalizer(G, invariant_sylow(G, G, a, p)))
    report = VerificationReport(G.label(), 'sylow-normalizer')
    ok = same_subgroup(D, meet)
    differing = None
    if not ok:
        diff = D.element_set() ^ meet.element_set()
        differing = min(diff) if diff else None
    report.record('normalizer_intersection', "C^∞(a) = ∩ N_G(P), P ∈ Syl(G), P^a = P", ok,
                  {'D': D, 'intersection': meet, 'differing': differing})
    return report.raise_on_failure()


def cyclic_sylow_complement_check(G, a, N, p):
    """N ⊴ G, N ≤ G' com Sylow p cíclico: os p'-elementos de N formam um p-complemento normal."""
    _require_normal(G, N)
    if not derived_subgroup(G).contains_all(N.generators):
        raise PreconditionError(f"{N.label()} não está contido em G'")
    P = sylow_subgroup(N, p)
    if not P.is_abelian() or not any(x.order() == P.order() for x in P.elements()):
        raise PreconditionError(f"Sylow {p}-subgrupo de {N.label()} não é cíclico")
    _require_anticentral(G, a)

    report = VerificationReport(G.label(), 'p-complement')
    members = [x for x in N.elements() if coprime(x.order(), p)]
    K = subgroup_from_elements(N, members)
    expected = N.order() // p_part(N.order(), p)
    ok = K.order() == len(members) == expected
    report.record('normal_p_complement', f"p'-elementos de N formam subgrupo de índice |P| (p = {p})",
                  ok, {'complement': K, 'p_elements': len(members), 'expected': expected},
                  keep_witness=True)
    if ok:
        report.record('complement_normal', "o p-complemento é normal em G", is_normal(G, K),
                      {'complement': K})
    return report.raise_on_failure()


class DecomposedElement:
    """a = xk = kx com x = a_p e k = a_{p'}."""

    def __init__(self, a, p_part, p_prime_part, p):
        self.a = a
        self.p_part = p_part
        self.p_prime_part = p_prime_part
        self.p = p

    def __repr__(self):
        return f"DecomposedElement({self.a} = {self.p_part} · {self.p_prime_part}, p={self.p})"


def decompose(a, p):
    n = a.order()
    q = p_part(n, p)
    r = n // q
    s, t, _ = igcdex(q, r)
    # s·q + t·r = 1, logo a = a^{t r} · a^{s q}
    x = a ** int(t * r)
    k = a ** int(s * q)
    return DecomposedElement(a, x, k, p)


def complement_containing(G, P, k):
    """Complemento do Sylow normal P contendo o p'-elemento k (crescimento guloso)."""
    target = G.order() // P.order()
    K = PermGroup([k], degree=G.degree)
    p = primefactors(P.order())[0] if P.order() > 1 else None
    for y in G.elements():
        if K.order() == target:
            break
        if y in K or (p is not None and not coprime(y.order(), p)):
            continue
        candidate = PermGroup(list(K.generators) + [y], degree=G.degree)
        if p is None or coprime(candidate.order(), p):
            K = candidate
    if K.order() != target:
        raise PreconditionError(f"Nenhum complemento de ordem {target} contendo {k}")
    return K


def normal_sylow_criteria(G, a, p, K=None):
    """Com P ⊴ G Sylow: a anticentral ⟺ condições (1)-(4) sobre k = a_{p'} e x = a_p."""
    if a not in G:
        raise NotASubgroupError(f"Elemento {a} não pertence a {G.label()}")
    P = sylow_subgroup(G, p)
    if not is_normal(G, P):
        raise PreconditionError(f"Sylow {p}-subgrupo não é normal em {G.label()}")
    parts = decompose(a, p)
    x, k = parts.p_part, parts.p_prime_part
    if K is None:
        K = complement_containing(G, P, k)
    elif k not in K or K.order() * P.order() != G.order():
        raise PreconditionError("K não é um complemento de P contendo a_{p'}")

    C = centralizer_of(P, [k])
    CK = centralizer_of(P, K.generators)
    cond1 = is_anticentral(K, k)
    cond2 = is_anticentral(C, x)
    cond3 = same_subgroup(intersection(C, derived_subgroup(P)), derived_subgroup(C))
    cond4 = same_subgroup(CK, C)
    anticentral = is_anticentral(G, a)

    report = VerificationReport(G.label(), 'normal-sylow')
    report.engine['p'] = p
    witness = {'a': a, 'x': x, 'k': k, 'K': K, 'C_P(k)': C,
               'conditions': [cond1, cond2, cond3, cond4], 'anticentral': anticentral}
    report.record('k_anticentral_in_K', "(1) k é anticentral em K", cond1 or not anticentral, witness)
    report.record('x_anticentral_in_CPk', "(2) x é anticentral em C_P(k)", cond2 or not anticentral, witness)
    report.record('CPk_meet_derived', "(3) C_P(k) ∩ P' = C_P(k)'", cond3 or not anticentral, witness)
    report.record('CPK_equals_CPk', "(4) C_P(K) = C_P(k)", cond4 or not anticentral, witness)
    report.record('equivalence', "(1)-(4) ⟺ a anticentral em G",
                  (cond1 and cond2 and cond3 and cond4) == anticentral, witness)
    report.engine['conditions'] = [cond1, cond2, cond3, cond4]
    report.engine['anticentral'] = anticentral
    return report.raise_on_failure()


def sylow_meet_supplement(G, H, a, p):
    """P ∩ H = S para os Sylow p-subgrupos invariantes por a de G e de H."""
    if H.degree != G.degree or not G.contains_all(H.generators):
        raise NotASubgroupError(f"{H.label()} não é subgrupo de {G.label()}")
    if a not in H or not is_supplement(G, H):
        raise PreconditionError("H precisa ser suplemento de G' contendo a")
    _require_anticentral(G, a)
    P = invariant_sylow(G, G, a, p)
    S = invariant_sylow(H, H, a, p)
    meet = intersection(P, H)
    report = VerificationReport(G.label(), 'sylow-meet')
    report.record('sylow_meet', f"P ∩ H = S (p = {p})", same_subgroup(meet, S),
                  {'P': P, 'S': S, 'meet': meet})
    return report.raise_on_failure()
