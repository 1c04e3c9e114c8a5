from nucleo.permutation import conjugate
from anticentral.cchain import c_chain
from anticentral.criteria import find_anticentral_classes, is_anticentral
from estrutura.classes import class_of, conjugacy_classes
from estrutura.series import chief_series, derived_series, is_solvable
from estrutura.subgroups import (
    center, centralizer, centralizer_of, derived_subgroup, quotient_group,
)
from utils.errors import NotAnticentralError, NotASubgroupError
from utils.logger import log_debug
from utils.report import VerificationReport
from zoo.constructors import direct_product, embed_pair, symmetric


def _centralizer_order_in(Q, x):
    return Q.order() // len(class_of(Q, x))


def chief_factor_criterion(G, a):
    """a anticentral ⟺ (1) age sem pontos fixos nos fatores principais não centrais e
    (2) |C_G(aK)| < |C_G(aN)| em todo fator central N/K com N ≤ G'.

    C_G(aK) é a pré-imagem do centralizador de aK em G/K; as ordens vêm das imagens
    de permutação dos quocientes.
    """
    if a.degree != G.degree or a not in G:
        raise NotASubgroupError(f"Elemento {a} não pertence a {G.label()}")
    series = chief_series(G)
    D = derived_subgroup(G)
    report = VerificationReport(G.label(), 'charaz')
    factors = []
    holds = True
    for i, central in enumerate(series.central_factors):
        K, N = series.terms[i], series.terms[i + 1]
        quotient_K = quotient_group(G, K)
        a_K = quotient_K.project(a)
        if not central:
            N_bar = quotient_K.project_subgroup(N)
            fixed = centralizer_of(N_bar, [a_K]).order()
            ok = fixed == 1
            factors.append({'factor': i, 'order': N.order() // K.order(), 'central': False,
                            'fixed_cosets': fixed, 'ok': ok})
        elif D.contains_all(N.generators):
            quotient_N = quotient_group(G, N)
            below = _centralizer_order_in(quotient_K.group, a_K) * K.order()
            above = _centralizer_order_in(quotient_N.group, quotient_N.project(a)) * N.order()
            ok = below < above
            factors.append({'factor': i, 'order': N.order() // K.order(), 'central': True,
                            'centralizer_below': below, 'centralizer_above': above, 'ok': ok})
        else:
            continue
        holds = holds and ok
    anticentral = is_anticentral(G, a)
    report.engine['factors'] = factors
    report.engine['criterion'] = holds
    report.record('chief_criterion', "critério dos fatores principais ⟺ a anticentral",
                  holds == anticentral, {'element': a, 'factors': factors, 'anticentral': anticentral})
    log_debug(f"{G.label()} a={a}: critério {holds}, anticentral {anticentral}", "CHEFE")
    return report.raise_on_failure()


def invariant_class_bijection(G, a):
    """x ↦ x^G é bijeção de Z(D) sobre as classes de G que são uma única G'-classe."""
    if not is_anticentral(G, a):
        raise NotAnticentralError(f"{a} não é anticentral em {G.label()}")
    D = c_chain(G, a).limit
    Z = center(D)
    derived = derived_subgroup(G)
    classes = conjugacy_classes(G)

    invariant = []
    for i, cls in enumerate(classes):
        x = cls.representative
        orbit = {x}
        queue = [x]
        for y in queue:
            for g in derived.generators:
                z = conjugate(y, g)
                if z not in orbit:
                    orbit.add(z)
                    queue.append(z)
        if len(orbit) == cls.size:
            invariant.append(i)

    class_index = {x: i for i, cls in enumerate(classes) for x in cls.member_set}
    image = [class_index[z] for z in Z.elements()]
    report = VerificationReport(G.label(), 'invcls')
    report.record('injective', "x ↦ x^G injetiva em Z(D)", len(set(image)) == len(image),
                  {'center': Z, 'image': image})
    report.record('bijection', "imagem = classes G-invariantes de G'-conjugação",
                  sorted(set(image)) == invariant, {'image': sorted(set(image)), 'invariant': invariant})
    C = centralizer(G, a).element_set()
    meets = {i: len(C & classes[i].member_set) for i in invariant}
    report.record('unique_fixed_in_class', "a fixa exatamente um elemento de cada classe invariante",
                  all(v == 1 for v in meets.values()), {'meets': meets})
    return report.raise_on_failure()


def solvability_contrapositive(G):
    """Grupo com elemento anticentral é solúvel; não solúvel implica conjunto anticentral vazio."""
    classes = find_anticentral_classes(G)
    solvable = is_solvable(G)
    report = VerificationReport(G.label(), 'solvability')
    report.engine['solvable'] = solvable
    report.engine['anticentral_classes'] = len(classes)
    report.record('anticentral_implies_solvable', "elemento anticentral ⇒ G solúvel",
                  solvable or not classes,
                  {'representatives': [c.representative for c in classes]})
    return report.raise_on_failure()


def _hereditary_normals(G):
    if is_solvable(G):
        return chief_series(G).terms
    return derived_series(G)


def _default_partner(G):
    H = symmetric(3)
    return H, direct_product(G, H)


def hereditary_checks(G, a, partner=None):
    """aN anticentral em G/N; (a,b) anticentral em G × H ⟺ a e b anticentrais.

    partner=(H, [b, ...]); por padrão S3 com um representante de cada classe.
    """
    if a.degree != G.degree or a not in G:
        raise NotASubgroupError(f"Elemento {a} não pertence a {G.label()}")
    report = VerificationReport(G.label(), 'hereditary')
    anticentral = is_anticentral(G, a)
    if anticentral:
        for N in _hereditary_normals(G):
            if N.is_trivial:
                continue
            Q = quotient_group(G, N)
            image = Q.project(a)
            report.record(f"quotient{N.order()}", f"aN anticentral em G/N (|N| = {N.order()})",
                          is_anticentral(Q.group, image), {'N': N, 'image': image})
    if partner is None:
        H, product = G.cached('hereditary_partner', lambda: _default_partner(G))
        bs = [c.representative for c in conjugacy_classes(H)]
    else:
        H, bs = partner
        product = direct_product(G, H)
    for b in bs:
        pair = embed_pair(G, H, a, b)
        expected = anticentral and is_anticentral(H, b)
        report.record(f"product[{b}]", f"(a,b) anticentral em G × H ⟺ ambos (b = {b})",
                      is_anticentral(product, pair) == expected, {'a': a, 'b': b})
    return report.raise_on_failure()
