from collections import Counter
from fractions import Fraction

from caracteres.cyclotomic import CyclotomicValue
from caracteres.dixon import dixon_characters
from estrutura.classes import class_index
from estrutura.subgroups import derived_subgroup, is_normal
from utils.errors import InternalConsistencyError, NotNormalError
from utils.logger import log_info


class CharacterTable:
    """Classes, tamanhos e caracteres irredutíveis como vetores ciclotômicos exatos."""

    def __init__(self, group_order, classes, irreducibles, degrees, linear_count, prime, conductor,
                 index=None):
        self.group_order = group_order
        self.classes = classes
        self.irreducibles = irreducibles
        self.degrees = degrees
        self.linear_count = linear_count
        self.prime = prime
        self.conductor = conductor
        self._index = index

    @property
    def class_sizes(self):
        return [c.size for c in self.classes]

    def __len__(self):
        return len(self.irreducibles)

    def value(self, chi, cls):
        if not 0 <= chi < len(self.irreducibles):
            raise IndexError(f"Caractere {chi} fora do intervalo 0..{len(self.irreducibles) - 1}")
        if not 0 <= cls < len(self.classes):
            raise IndexError(f"Classe {cls} fora do intervalo 0..{len(self.classes) - 1}")
        return self.irreducibles[chi][cls]

    def class_of_element(self, x):
        return self._index[x]

    def nonlinear(self):
        return [i for i, d in enumerate(self.degrees) if d > 1]


def _sort_rows(rows, degrees):
    order = sorted(range(len(rows)),
                   key=lambda i: (degrees[i], [v.sort_key() for v in rows[i]]))
    trivial = [i for i in order if all(v == 1 for v in rows[i])]
    order = trivial + [i for i in order if i not in trivial]
    return [rows[i] for i in order], [degrees[i] for i in order]


def _inner(sizes, row_a, conj_b):
    total = CyclotomicValue.integer(row_a[0].conductor, 0)
    for size, x, y in zip(sizes, row_a, conj_b):
        total = total + (x * y) * size
    return total


def _check_table(G, table):
    n = table.group_order
    if sum(d * d for d in table.degrees) != n:
        raise InternalConsistencyError(f"Σ χ(1)² = {sum(d * d for d in table.degrees)} ≠ |G| = {n}")
    index = G.order() // derived_subgroup(G).order()
    if table.linear_count != index:
        raise InternalConsistencyError(f"{table.linear_count} caracteres lineares ≠ |G:G'| = {index}")
    sizes = table.class_sizes
    conj_rows = [[v.conjugate() for v in row] for row in table.irreducibles]
    for a, row in enumerate(table.irreducibles):
        for b in range(a, len(table.irreducibles)):
            inner = _inner(sizes, row, conj_rows[b])
            expected = n if a == b else 0
            if inner != expected:
                raise InternalConsistencyError(
                    f"Ortogonalidade violada entre caracteres {a} e {b}: {inner}")


def character_table(G):
    """Tabela exata de caracteres (Dixon), verificada antes de ser devolvida."""
    def build():
        result = dixon_characters(G)
        rows, degrees = _sort_rows(result.rows, result.degrees)
        table = CharacterTable(G.order(), result.classes, rows, degrees,
                               sum(1 for d in degrees if d == 1), result.prime, result.conductor,
                               class_index(G))
        _check_table(G, table)
        log_info(f"Tabela de {G.label()}: graus {sorted(Counter(degrees).items())}, primo {result.prime}",
                 "DIXON")
        return table
    return G.cached('character_table', build)


def is_zero_at(table, chi, cls):
    return table.value(chi, cls).is_zero


def orthogonality_check(table, class_i, class_j):
    """Σ_χ χ(g_i)·conj(χ(g_j)), como inteiro exato."""
    total = CyclotomicValue.integer(table.conductor, 0)
    for chi in range(len(table)):
        total = total + table.value(chi, class_i) * table.value(chi, class_j).conjugate()
    value = total.as_integer()
    if value is None:
        raise InternalConsistencyError(f"Segunda ortogonalidade não inteira: {total}")
    return value


def restriction_norm(table, G, N, chi):
    """⟨χ_N, χ_N⟩_N = (1/|N|)·Σ_{n∈N} |χ(n)|², exato."""
    if N.degree != G.degree or not G.contains_all(N.generators) or not is_normal(G, N):
        raise NotNormalError(f"{N.label()} não é normal em {G.label()}")
    covered = set()
    total = CyclotomicValue.integer(table.conductor, 0)
    for n in N.elements():
        c = table.class_of_element(n)
        if c in covered:
            continue
        covered.add(c)
        total = total + table.value(chi, c).norm_squared() * table.classes[c].size
    value = total.as_integer()
    if value is None:
        raise InternalConsistencyError(f"Soma de |χ(n)|² não inteira: {total}")
    return Fraction(value, N.order())


def vanishing_classes(table):
    """Classes em que todo caractere irredutível não linear se anula."""
    nonlinear = table.nonlinear()
    return [c for c in range(len(table.classes))
            if all(table.value(chi, c).is_zero for chi in nonlinear)]


def nonlinear_degrees(table):
    """Multiplicidade de cada grau não linear."""
    return dict(sorted(Counter(d for d in table.degrees if d > 1).items()))


def export_table(table):
    """Formato de exportação: comentário com o condutor, tamanhos de classe, uma linha por caractere."""
    lines = [f"# conductor {table.conductor} (z = raiz primitiva {table.conductor}-ésima da unidade)"]
    lines.append(','.join(str(s) for s in table.class_sizes))
    for row in table.irreducibles:
        lines.append(','.join(str(v) for v in row))
    return '\n'.join(lines) + '\n'
