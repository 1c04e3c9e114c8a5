from nucleo.permutation import conjugate
from utils.errors import NotASubgroupError
from utils.logger import log_debug


class ConjClass:
    """Classe de conjugação: representante lexicograficamente mínimo e tamanho."""

    def __init__(self, representative, size, member_set=None):
        self.representative = representative
        self.size = size
        self.member_set = member_set

    def __contains__(self, x):
        return x in self.member_set

    def __repr__(self):
        return f"ConjClass({self.representative}, size={self.size})"


def _conjugation_orbit(generators, x):
    orbit = {x}
    queue = [x]
    for y in queue:
        for g in generators:
            z = conjugate(y, g)
            if z not in orbit:
                orbit.add(z)
                queue.append(z)
    return orbit


def class_of(G, x):
    if x not in G:
        raise NotASubgroupError(f"Elemento {x} não pertence a {G.label()}")
    return frozenset(_conjugation_orbit(G.generators, x))


def conjugacy_classes(G, bound=None):
    """Partição de G em classes, na ordem dos representantes."""
    elements = G.elements(bound)

    def build():
        covered = set()
        classes = []
        for x in elements:
            if x in covered:
                continue
            orbit = frozenset(_conjugation_orbit(G.generators, x))
            covered |= orbit
            classes.append(ConjClass(x, len(orbit), orbit))
        log_debug(f"{len(classes)} classes em grupo de ordem {len(elements)}", "ESTRUTURA")
        return classes

    return G.cached('classes', build)


def class_index(G):
    """Mapa elemento -> índice da sua classe."""
    def build():
        index = {}
        for i, cls in enumerate(conjugacy_classes(G)):
            for x in cls.member_set:
                index[x] = i
        return index
    return G.cached('class_index', build)
