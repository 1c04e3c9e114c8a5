"""Enumeração exaustiva de subgrupos por extensão cíclica, sobre índices de elementos."""

from sympy import primefactors

from nucleo.group import PermGroup
from utils.config import LATTICE_LIMIT
from utils.errors import CapacityError, NotASubgroupError
from utils.logger import log_debug


class ElementTable:
    """Elementos de G indexados; subconjuntos representados como máscaras de bits."""

    def __init__(self, G, limit=LATTICE_LIMIT):
        if G.order() > limit:
            raise CapacityError(G.order(), limit, 'tabela de elementos')
        self.G = G
        self.elements = G.elements()
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.identity = self.index[G.identity]
        self._columns = {}

    def column(self, g):
        """column(g)[i] = índice de elements[i] * elements[g]."""
        col = self._columns.get(g)
        if col is None:
            right = self.elements[g]
            col = [self.index[x * right] for x in self.elements]
            self._columns[g] = col
        return col

    def closure(self, generators):
        """Máscara do subgrupo gerado pelos índices dados."""
        cols = [self.column(g) for g in generators]
        mask = 1 << self.identity
        queue = [self.identity]
        for i in queue:
            for col in cols:
                k = col[i]
                if not mask >> k & 1:
                    mask |= 1 << k
                    queue.append(k)
        return mask

    def to_group(self, generators):
        return PermGroup([self.elements[g] for g in generators], degree=self.G.degree)


def element_table(G):
    return G.cached('element_table', lambda: ElementTable(G))


def _prime_power_cyclics(table):
    seen = {}
    for i, x in enumerate(table.elements):
        n = x.order()
        if n == 1 or len(primefactors(n)) != 1:
            continue
        mask = table.closure([i])
        seen.setdefault(mask, i)
    return sorted(seen.items())


def subgroup_lattice(G, containing=None):
    """Todos os subgrupos de G (ou só os que contêm os elementos dados), por ordem."""
    containing = sorted(containing or [])
    for x in containing:
        if x not in G:
            raise NotASubgroupError(f"Elemento {x} não pertence a {G.label()}")

    def build():
        table = element_table(G)
        cyclics = _prime_power_cyclics(table)
        start_gens = tuple(table.index[x] for x in containing)
        start = table.closure(start_gens)
        found = {start: start_gens}
        queue = [start]
        for mask in queue:
            gens = found[mask]
            for cmask, c in cyclics:
                if cmask & mask == cmask:
                    continue
                new_gens = gens + (c,)
                new = table.closure(new_gens)
                if new not in found:
                    found[new] = new_gens
                    queue.append(new)
        log_debug(f"{len(found)} subgrupos (contendo {len(containing)} elementos dados)", "RETICULADO")
        ordered = sorted(found.items(), key=lambda item: (bin(item[0]).count('1'), item[0]))
        return [table.to_group(gens) for _, gens in ordered]

    return G.cached(('lattice', tuple(containing)), build)
