from math import gcd, lcm

from nucleo.gset import CosetTable
from nucleo.group import PermGroup
from nucleo.permutation import commutator, conjugate
from utils.config import EXHAUSTIVE_CENTRALIZER_LIMIT
from utils.errors import NotASubgroupError, NotNormalError
from utils.logger import log_debug


def _require_subgroup(G, H):
    if H.degree != G.degree or not G.contains_all(H.generators):
        raise NotASubgroupError(f"{H.label()} não é subgrupo de {G.label()}")


def _require_members(G, elements):
    for x in elements:
        if x not in G:
            raise NotASubgroupError(f"Elemento {x} não pertence a {G.label()}")


def subgroup_from_elements(G, elements, name=None):
    """Subgrupo gerado por um conjunto de elementos, com poucos geradores."""
    gens = []
    H = PermGroup([], degree=G.degree)
    for x in sorted(elements):
        if x not in H:
            gens.append(x)
            H = PermGroup(gens, degree=G.degree)
    H.name = name
    return H


def same_subgroup(A, B):
    return A.order() == B.order() and B.contains_all(A.generators)


def is_normal(G, N):
    return all(conjugate(n, g) in N for n in N.generators for g in G.generators)


def conjugate_subgroup(H, g):
    return PermGroup([conjugate(h, g) for h in H.generators], degree=H.degree)


def intersection(A, B):
    small, big = (A, B) if A.order() <= B.order() else (B, A)
    return subgroup_from_elements(small, [x for x in small.elements() if x in big])


def subgroup_join(G, A, B):
    return PermGroup(list(A.generators) + list(B.generators), degree=G.degree)


def product_order(A, B):
    """|AB| = |A||B|/|A ∩ B|."""
    return A.order() * B.order() // intersection(A, B).order()


def exponent(G):
    return G.cached('exponent', lambda: lcm(1, *(x.order() for x in G.elements())))


# --- estabilizador por órbita (Schreier) ---

def stabilizer(G, point, action, key=lambda pt: pt):
    """Estabilizador de um ponto sob uma ação à direita, via geradores de Schreier."""
    transversal = {key(point): (point, G.identity)}
    queue = [key(point)]
    for k in queue:
        pt, u = transversal[k]
        for s in G.generators:
            img = action(pt, s)
            ki = key(img)
            if ki not in transversal:
                transversal[ki] = (img, u * s)
                queue.append(ki)
    gens = []
    S = PermGroup([], degree=G.degree)
    for k in queue:
        pt, u = transversal[k]
        for s in G.generators:
            img = action(pt, s)
            _, v = transversal[key(img)]
            h = u * s * ~v
            if not h.is_identity and h not in S:
                gens.append(h)
                S = PermGroup(gens, degree=G.degree)
    log_debug(f"Estabilizador: órbita {len(queue)}, {len(gens)} geradores", "ESTRUTURA")
    return S


def centralizer_of(H, perms):
    """Centralizador em H de permutações arbitrárias (não precisam pertencer a H)."""
    perms = list(perms)
    if H.order() <= EXHAUSTIVE_CENTRALIZER_LIMIT:
        members = [h for h in H.elements() if all(h * x == x * h for x in perms)]
        return subgroup_from_elements(H, members)
    S = H
    for x in perms:
        S = stabilizer(S, x, conjugate)
    return S


def centralizer(G, x):
    _require_members(G, [x])
    return G.cached(('centralizer', x), lambda: centralizer_of(G, [x]))


def normalizer(G, H):
    _require_subgroup(G, H)
    if G.order() <= EXHAUSTIVE_CENTRALIZER_LIMIT:
        members = [g for g in G.elements()
                   if all(conjugate(h, g) in H for h in H.generators)]
        return subgroup_from_elements(G, members)

    def act(key, g):
        g_inv = ~g
        return frozenset(g_inv * x * g for x in key)

    return stabilizer(G, frozenset(H.elements()), act)


def normal_closure(G, S):
    """Menor subgrupo normal de G contendo S."""
    S = [x for x in S]
    _require_members(G, S)
    gens = []
    N = PermGroup([], degree=G.degree)
    for x in S:
        if x not in N:
            gens.append(x)
            N = PermGroup(gens, degree=G.degree)
    queue = list(gens)
    for n in queue:
        for g in G.generators:
            c = conjugate(n, g)
            if c not in N:
                gens.append(c)
                queue.append(c)
                N = PermGroup(gens, degree=G.degree)
    return N


def derived_subgroup(G):
    def build():
        gens = G.generators
        comms = [commutator(x, y) for i, x in enumerate(gens) for y in gens[i + 1:]]
        return normal_closure(G, [c for c in comms if not c.is_identity])
    return G.cached('derived', build)


def commutator_subgroup(G, A, B):
    """[A, B] para A, B normais em G."""
    comms = [commutator(x, y) for x in A.generators for y in B.generators]
    return normal_closure(G, [c for c in comms if not c.is_identity])


def center(G):
    def build():
        members = [g for g in G.elements() if all(g * s == s * g for s in G.generators)]
        return subgroup_from_elements(G, members)
    return G.cached('center', build)


def is_supplement(G, H):
    _require_subgroup(G, H)
    D = derived_subgroup(G)
    return product_order(H, D) == G.order()


# --- quocientes ---

class Quotient:
    """G/N realizado pela ação regular nas classes laterais de N."""

    def __init__(self, G, N):
        self.G = G
        self.N = N
        if N.is_trivial:
            # G/1 é o próprio G
            self._table = None
            self.group = G
        else:
            self._table = CosetTable(G, N)
            self.group = self._table.image()

    def project(self, g):
        if self._table is None:
            return g
        return self._table.project(g)

    def project_subgroup(self, H):
        return PermGroup([self.project(h) for h in H.generators], degree=self.group.degree)

    def __iter__(self):
        # permite  Q, proj = quotient_group(G, N)
        return iter((self.group, self.project))


def quotient_group(G, N):
    _require_subgroup(G, N)
    if not is_normal(G, N):
        raise NotNormalError(f"{N.label()} não é normal em {G.label()}")
    key = ('quotient', tuple(sorted(g.array for g in N.generators)), N.order())
    return G.cached(key, lambda: Quotient(G, N))


def p_part(n, p):
    result = 1
    while n % p == 0:
        n //= p
        result *= p
    return result


def coprime(a, b):
    return gcd(a, b) == 1


def order_modulo(x, N):
    """Ordem da classe lateral xN (x normaliza N)."""
    k = 1
    y = x
    while y not in N:
        y = y * x
        k += 1
    return k
