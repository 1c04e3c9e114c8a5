import threading

from nucleo.permutation import Permutation
from utils.config import enumeration_bound
from utils.errors import CapacityError, DegreeMismatchError
from utils.logger import log_debug


_MISSING = object()


class BSGS:
    """Base e conjunto forte de geradores, com as transversais de cada nível."""

    def __init__(self, degree, base, strong_generators, transversals):
        self.degree = degree
        self.base = tuple(base)
        self.strong_generators = tuple(strong_generators)
        self.transversals = transversals
        self.inverse_transversals = [
            {point: ~u for point, u in level.items()} for level in transversals
        ]
        order = 1
        for level in transversals:
            order *= len(level)
        self.order = order

    def sift(self, p, start=0):
        """Retorna (resíduo, nível em que parou)."""
        g = p
        for level in range(start, len(self.base)):
            beta = g.array[self.base[level]]
            inv = self.inverse_transversals[level].get(beta)
            if inv is None:
                return g, level
            g = g * inv
        return g, len(self.base)

    def contains(self, p):
        residue, level = self.sift(p)
        return level == len(self.base) and residue.is_identity

    def iter_elements(self):
        # g = u_{k-1} ... u_1 u_0, um representante por nível
        elements = [Permutation.identity(self.degree)]
        for level in reversed(self.transversals):
            reps = list(level.values())
            elements = [e * u for e in elements for u in reps]
        return elements


def _orbit_transversal(point, generators, degree):
    transversal = {point: Permutation.identity(degree)}
    queue = [point]
    for beta in queue:
        u = transversal[beta]
        for s in generators:
            img = s.array[beta]
            if img not in transversal:
                transversal[img] = u * s
                queue.append(img)
    return transversal


def _fixes_all(p, points):
    return all(p.array[b] == b for b in points)


def schreier_sims(degree, generators):
    """Schreier-Sims determinístico, base escolhida pelo primeiro ponto movido."""
    gens = []
    for g in generators:
        if not g.is_identity and g not in gens:
            gens.append(g)
    base = []
    for g in gens:
        if _fixes_all(g, base):
            base.append(g.first_moved())
    strong = list(gens)

    def rebuild():
        level_gens = []
        transversals = []
        inverses = []
        for level in range(len(base)):
            lg = [s for s in strong if _fixes_all(s, base[:level])]
            tr = _orbit_transversal(base[level], lg, degree)
            level_gens.append(lg)
            transversals.append(tr)
            inverses.append({point: ~u for point, u in tr.items()})
        return level_gens, transversals, inverses

    def strip(g, start, transversals, inverses):
        for level in range(start, len(base)):
            beta = g.array[base[level]]
            inv = inverses[level].get(beta)
            if inv is None:
                return g, level
            g = g * inv
        return g, len(base)

    level_gens, transversals, inverses = rebuild()
    i = len(base) - 1
    while i >= 0:
        residue = None
        for beta in sorted(transversals[i]):
            u = transversals[i][beta]
            for s in level_gens[i]:
                img = s.array[beta]
                g = u * s * inverses[i][img]
                if g.is_identity:
                    continue
                h, j = strip(g, i + 1, transversals, inverses)
                if j < len(base) or not h.is_identity:
                    residue = (h, j)
                    break
            if residue is not None:
                break
        if residue is None:
            i -= 1
            continue
        h, j = residue
        strong.append(h)
        if j == len(base):
            base.append(h.first_moved())
        level_gens, transversals, inverses = rebuild()
        i = j
    log_debug(f"BSGS: base={[b + 1 for b in base]}, {len(strong)} geradores fortes", "BSGS")
    return BSGS(degree, base, strong, transversals)


class PermGroup:
    """Grupo de permutações: geradores + certificado BSGS construído sob demanda."""

    def __init__(self, generators, degree=None, name=None):
        gens = tuple(generators)
        if degree is None:
            if not gens:
                raise ValueError("Grupo sem geradores precisa do grau explícito")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatchError(f"Gerador de grau {g.degree} em grupo de grau {degree}")
        self.degree = degree
        self.generators = gens
        self.name = name
        self._lock = threading.RLock()
        self._bsgs = None
        self._cache = {}

    # --- certificado ---

    @property
    def bsgs(self):
        if self._bsgs is None:
            with self._lock:
                if self._bsgs is None:
                    self._bsgs = schreier_sims(self.degree, self.generators)
        return self._bsgs

    @property
    def has_bsgs(self):
        return self._bsgs is not None

    def order(self):
        return self.bsgs.order

    def cached(self, key, factory):
        """Valor derivado do grupo, calculado uma vez (grupos são imutáveis)."""
        value = self._cache.get(key, _MISSING)
        if value is _MISSING:
            with self._lock:
                value = self._cache.get(key, _MISSING)
                if value is _MISSING:
                    value = factory()
                    self._cache[key] = value
        return value

    # --- pertinência e enumeração ---

    def __contains__(self, p):
        if p.degree != self.degree:
            raise DegreeMismatchError(f"Permutação de grau {p.degree} em grupo de grau {self.degree}")
        return self.bsgs.contains(p)

    def contains_all(self, perms):
        return all(p in self for p in perms)

    def elements(self, bound=None):
        """Todos os elementos, uma vez cada, em ordem lexicográfica da tabela de imagens."""
        if bound is None:
            bound = enumeration_bound()
        if self.order() > bound:
            raise CapacityError(self.order(), bound)
        return self.cached('elements', lambda: sorted(self.bsgs.iter_elements()))

    def element_set(self, bound=None):
        self.elements(bound)
        return self.cached('element_set', lambda: frozenset(self._cache['elements']))

    @property
    def identity(self):
        return Permutation.identity(self.degree)

    @property
    def is_trivial(self):
        return self.order() == 1

    def is_abelian(self):
        gens = self.generators
        return all(g * h == h * g for i, g in enumerate(gens) for h in gens[i + 1:])

    def subgroup(self, generators, name=None):
        return PermGroup(generators, degree=self.degree, name=name)

    def is_subgroup_of(self, other):
        return self.degree == other.degree and other.contains_all(self.generators)

    def label(self):
        return self.name or f"grupo de ordem {self.order()} (grau {self.degree})"

    # Igualdade de subgrupos do mesmo grupo simétrico
    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        if self.degree != other.degree or self.order() != other.order():
            return False
        return other.contains_all(self.generators)

    def __hash__(self):
        return hash((self.degree, self.order()))

    def __repr__(self):
        gens = ', '.join(g.to_cycle_string() for g in self.generators)
        name = f"{self.name}: " if self.name else ''
        return f"PermGroup({name}<{gens}>, degree={self.degree})"


def trivial_group(degree, name=None):
    return PermGroup([], degree=degree, name=name)


def build_bsgs(G):
    G.bsgs
    return G


def membership_test(G, p):
    return p in G


def elements_enumerate(G, bound):
    if G.order() > bound:
        raise CapacityError(G.order(), bound)
    return list(G.elements(bound))
