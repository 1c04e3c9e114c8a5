from sympy import isprime

from nucleo.group import trivial_group
from nucleo.permutation import commutator
from estrutura.classes import conjugacy_classes
from estrutura.subgroups import (
    commutator_subgroup, derived_subgroup, normal_closure, order_modulo, subgroup_from_elements,
)
from utils.errors import UnsupportedGroupError
from utils.logger import log_debug

KINDS = ('derived', 'lower_central', 'upper_central', 'chief')


class SeriesReport:
    def __init__(self, kind, terms, is_solvable, is_nilpotent, nilpotency_class=None,
                 central_factors=None):
        if kind not in KINDS:
            raise ValueError(f"Tipo de série desconhecido: {kind}")
        self.kind = kind
        self.terms = list(terms)
        self.is_solvable = is_solvable
        self.is_nilpotent = is_nilpotent
        self.nilpotency_class = nilpotency_class
        self.central_factors = central_factors

    @property
    def orders(self):
        return [t.order() for t in self.terms]

    def __len__(self):
        return len(self.terms) - 1

    def __repr__(self):
        return f"SeriesReport({self.kind}, ordens={self.orders})"


def derived_series(G):
    """G ⊇ G' ⊇ G'' ... até estabilizar."""
    def build():
        terms = [G]
        while True:
            D = derived_subgroup(terms[-1])
            if D.order() == terms[-1].order():
                break
            terms.append(D)
        return terms
    return G.cached('derived_series', build)


def lower_central_series(G):
    def build():
        terms = [G]
        while True:
            K = commutator_subgroup(G, terms[-1], G)
            if K.order() == terms[-1].order():
                break
            terms.append(K)
        return terms
    return G.cached('lower_central_series', build)


def upper_central_series(G):
    def build():
        terms = [trivial_group(G.degree)]
        while True:
            Z = terms[-1]
            members = [g for g in G.elements()
                       if all(commutator(g, s) in Z for s in G.generators)]
            nxt = subgroup_from_elements(G, members)
            if nxt.order() == Z.order():
                break
            terms.append(nxt)
        return terms
    return G.cached('upper_central_series', build)


def is_solvable(G):
    return derived_series(G)[-1].is_trivial


def is_nilpotent(G):
    return lower_central_series(G)[-1].is_trivial


def nilpotency_class(G):
    """Classe de nilpotência (None se G não é nilpotente; 0 para o grupo trivial)."""
    if not is_nilpotent(G):
        return None
    return len(lower_central_series(G)) - 1


def series_report(G, kind):
    if kind == 'chief':
        return chief_series(G)
    if kind == 'derived':
        terms = derived_series(G)
    elif kind == 'lower_central':
        terms = lower_central_series(G)
    elif kind == 'upper_central':
        terms = upper_central_series(G)
    else:
        raise ValueError(f"Tipo de série desconhecido: {kind}")
    return SeriesReport(kind, terms, is_solvable(G), is_nilpotent(G), nilpotency_class(G))


def _is_central_factor(G, upper, lower):
    return all(commutator(n, g) in lower for n in upper.generators for g in G.generators)


def chief_series(G):
    """1 = N_0 ⊲ N_1 ⊲ ... ⊲ N_k = G, construída de baixo para cima e passando por G'.

    Cada passo toma, entre os fechos normais de N_i com um representante de classe
    fora de N_i, um de ordem mínima (empate: menor representante). Enquanto N_i < G'
    só entram representantes de G', de modo que G' é um dos termos.
    """
    if not is_solvable(G):
        raise UnsupportedGroupError(f"Série principal exige grupo solúvel: {G.label()}")

    def build():
        reps = [c.representative for c in conjugacy_classes(G)]
        D = derived_subgroup(G)
        terms = [trivial_group(G.degree)]
        central = []
        while terms[-1].order() < G.order():
            N = terms[-1]
            inside = N.order() < D.order()
            best = None
            for x in reps:
                if x in N or (inside and x not in D) or not isprime(order_modulo(x, N)):
                    continue
                M = normal_closure(G, list(N.generators) + [x])
                if best is None or M.order() < best.order():
                    best = M
            log_debug(f"Fator principal de ordem {best.order() // N.order()}", "SERIE")
            central.append(_is_central_factor(G, best, N))
            terms.append(best)
        return terms, central

    terms, central = G.cached('chief_series', build)
    return SeriesReport('chief', terms, True, is_nilpotent(G), nilpotency_class(G),
                        central_factors=list(central))
