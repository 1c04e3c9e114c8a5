from nucleo.group import PermGroup
from nucleo.permutation import Permutation
from utils.errors import NotASubgroupError


class GSet:
    """Conjunto finito com ação à direita de um grupo de permutações."""

    def __init__(self, points, action, acting_group):
        self.points = tuple(points)
        self._index = {pt: i for i, pt in enumerate(self.points)}
        self.action = action
        self.acting_group = acting_group

    def __len__(self):
        return len(self.points)

    def __contains__(self, point):
        return point in self._index

    def act(self, point, g):
        return self.action(point, g)

    def index_of(self, point):
        return self._index[point]

    def restrict(self, subgroup):
        """Mesmos pontos, agindo apenas o subgrupo dado."""
        return GSet(self.points, self.action, subgroup)

    def fixed_points(self, g):
        return [pt for pt in self.points if self.action(pt, g) == pt]

    def permutation_character(self, g):
        return len(self.fixed_points(g))

    def is_transitive(self):
        if not self.points:
            return True
        return len(orbit_of(self, self.points[0])) == len(self.points)


def orbit_of(gset, point):
    if point not in gset:
        raise KeyError(f"Ponto desconhecido: {point!r}")
    orbit = {point}
    queue = [point]
    for pt in queue:
        for s in gset.acting_group.generators:
            img = gset.action(pt, s)
            if img not in orbit:
                orbit.add(img)
                queue.append(img)
    return orbit


def natural_gset(G):
    return GSet(range(G.degree), lambda pt, g: g.array[pt], G)


def _conjugate(x, g):
    return ~g * x * g


def conjugation_gset(G, elements):
    """Ação por conjugação sobre um conjunto de elementos invariante por G."""
    return GSet(sorted(elements), _conjugate, G)


def subgroup_key(H):
    return frozenset(H.elements())


def subgroup_conjugation_gset(G, H):
    """Ação por conjugação sobre os conjugados de H (pontos são conjuntos de elementos)."""
    def act(key, g):
        g_inv = ~g
        return frozenset(g_inv * x * g for x in key)

    start = subgroup_key(H)
    orbit = [start]
    seen = {start}
    for key in orbit:
        for s in G.generators:
            img = act(key, s)
            if img not in seen:
                seen.add(img)
                orbit.append(img)
    orbit.sort(key=lambda k: sorted(k))
    return GSet(orbit, act, G)


class CosetTable:
    """Classes laterais à direita Hx, identificadas pelo menor elemento de Hx."""

    def __init__(self, G, H):
        if H.degree != G.degree or not G.contains_all(H.generators):
            raise NotASubgroupError(f"{H.label()} não é subgrupo de {G.label()}")
        self.G = G
        self.H = H
        self._h_elements = H.elements()
        identity = G.identity
        self.representatives = [identity]
        self._lookup = {self.key(identity): 0}
        for rep in self.representatives:
            for s in G.generators:
                x = rep * s
                k = self.key(x)
                if k not in self._lookup:
                    self._lookup[k] = len(self.representatives)
                    self.representatives.append(x)

    def key(self, x):
        return min(h * x for h in self._h_elements).array

    def index_of(self, x):
        return self._lookup[self.key(x)]

    def __len__(self):
        return len(self.representatives)

    def act(self, i, g):
        return self.index_of(self.representatives[i] * g)

    def project(self, g):
        """Permutação induzida por g nas classes laterais."""
        return Permutation([self.act(i, g) for i in range(len(self.representatives))])

    def image(self, name=None):
        gens = [self.project(s) for s in self.G.generators]
        return PermGroup(gens, degree=len(self.representatives), name=name)


def coset_action(G, H):
    """Ação de G nas classes laterais à direita de H: (G-conjunto, imagem em S_{|G:H|})."""
    table = CosetTable(G, H)
    gset = GSet(range(len(table)), table.act, G)
    return gset, table.image()
