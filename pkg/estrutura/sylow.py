from sympy import isprime

from nucleo.group import PermGroup, trivial_group
from nucleo.gset import subgroup_conjugation_gset
from estrutura.subgroups import normalizer, order_modulo, p_part, subgroup_from_elements
from utils.logger import log_debug


def sylow_subgroup(G, p):
    """Sylow p-subgrupo, crescendo um p-subgrupo P dentro de N_G(P)."""
    if not isprime(p):
        raise ValueError(f"{p} não é primo")

    def build():
        target = p_part(G.order(), p)
        if target == 1:
            return trivial_group(G.degree)
        if target == G.order():
            return G
        P = trivial_group(G.degree)
        gens = []
        while P.order() < target:
            N = normalizer(G, P)
            step = None
            for x in N.elements():
                m = order_modulo(x, P)
                if m % p == 0:
                    step = x ** (m // p)
                    break
            gens.append(step)
            P = PermGroup(gens, degree=G.degree)
            log_debug(f"p={p}: |P| = {P.order()} de {target}", "SYLOW")
        return P

    return G.cached(('sylow', p), build)


def sylow_subgroups(G, p):
    """Todos os Sylow p-subgrupos (órbita de conjugação), em ordem determinística."""
    def build():
        P = sylow_subgroup(G, p)
        if P.order() == 1 or P.order() == G.order():
            return [P]
        gset = subgroup_conjugation_gset(G, P)
        return [subgroup_from_elements(G, key) for key in gset.points]
    return G.cached(('sylow_all', p), build)
