from nucleo.permutation import commutator
from estrutura.subgroups import subgroup_from_elements
from utils.errors import NotASubgroupError
from utils.logger import log_debug


class CChain:
    """C^0(a) ⊆ C^1(a) ⊆ ... e o limite C^∞(a)."""

    def __init__(self, element, levels, limit, is_subgroup):
        self.element = element
        self.levels = levels
        self.limit = limit
        self.is_subgroup = is_subgroup

    @property
    def union(self):
        return self.levels[-1]

    @property
    def sizes(self):
        return [len(level) for level in self.levels]

    def __repr__(self):
        return f"CChain({self.element}, tamanhos={self.sizes})"


def c_chain(G, a):
    """C^0 = {1}, C^{i+1} = {x ∈ G : [a,x] ∈ C^i}, até estabilizar.

    Para a não anticentral a união pode não ser subgrupo; limit é então o subgrupo gerado.
    """
    if a.degree != G.degree or a not in G:
        raise NotASubgroupError(f"Elemento {a} não pertence a {G.label()}")

    def build():
        elements = G.elements()
        levels = [frozenset([G.identity])]
        while True:
            current = levels[-1]
            nxt = frozenset(x for x in elements if commutator(a, x) in current)
            if nxt == current:
                break
            levels.append(nxt)
        union = levels[-1]
        limit = subgroup_from_elements(G, union)
        is_subgroup = limit.order() == len(union)
        log_debug(f"C-cadeia de {a}: {[len(level) for level in levels]}", "ANTICENTRAL")
        return CChain(a, levels, limit, is_subgroup)

    return G.cached(('c_chain', a), build)
