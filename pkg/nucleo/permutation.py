from math import lcm

from utils.errors import DegreeMismatchError, PermutationParseError

# Convenção: ação à direita. O ponto i sob p*q é (i^p)^q, e x^g = g^-1 x g.
# Internamente os pontos são 0..degree-1; o texto em notação de ciclos usa 1..degree.


class Permutation:
    """Bijeção de {0..degree-1} guardada como tabela de imagens (imutável)."""

    __slots__ = ('array', '_hash')

    def __init__(self, images):
        array = tuple(images)
        if sorted(array) != list(range(len(array))):
            raise ValueError(f"Tabela de imagens não é uma bijeção: {array}")
        self.array = array
        self._hash = hash(array)

    @classmethod
    def _trusted(cls, array):
        # Sem validação: usado pelas operações internas que preservam bijeções
        obj = cls.__new__(cls)
        obj.array = array
        obj._hash = hash(array)
        return obj

    @classmethod
    def identity(cls, degree):
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles, degree):
        """Ciclos com pontos 0-based."""
        images = list(range(degree))
        for cycle in cycles:
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls(images)

    @property
    def degree(self):
        return len(self.array)

    @property
    def images(self):
        """Tabela de imagens 1-based, como na notação de ciclos."""
        return tuple(i + 1 for i in self.array)

    def image(self, point):
        return self.array[point]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self.array) != len(other.array):
            raise DegreeMismatchError(f"Graus diferentes: {self.degree} e {other.degree}")
        return Permutation._trusted(tuple(map(other.array.__getitem__, self.array)))

    def __invert__(self):
        inv = [0] * len(self.array)
        for i, j in enumerate(self.array):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    def __pow__(self, n):
        if n < 0:
            return (~self) ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.array == other.array

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.array < other.array

    def __le__(self, other):
        return self.array <= other.array

    @property
    def is_identity(self):
        return all(i == j for i, j in enumerate(self.array))

    def first_moved(self):
        for i, j in enumerate(self.array):
            if i != j:
                return i
        return None

    def support(self):
        return [i for i, j in enumerate(self.array) if i != j]

    def cycles(self):
        """Ciclos não triviais (0-based), cada um começando no menor ponto, ordenados."""
        seen = [False] * len(self.array)
        result = []
        for start in range(len(self.array)):
            if seen[start] or self.array[start] == start:
                seen[start] = True
                continue
            cycle = []
            point = start
            while not seen[point]:
                seen[point] = True
                cycle.append(point)
                point = self.array[point]
            result.append(tuple(cycle))
        return result

    def order(self):
        return lcm(1, *(len(c) for c in self.cycles()))

    def to_cycle_string(self):
        cycles = self.cycles()
        if not cycles:
            return '()'
        return ''.join('(' + ' '.join(str(p + 1) for p in c) + ')' for c in cycles)

    def __repr__(self):
        return f"Permutation({self.to_cycle_string()}, degree={self.degree})"

    def __str__(self):
        return self.to_cycle_string()


def parse_permutation(text, degree):
    """Lê ciclos disjuntos 1-based, ex. "(1 2 3)(4 5)". Pontos não citados ficam fixos."""
    if degree <= 0:
        raise PermutationParseError(f"Grau inválido: {degree}", 0)
    cycles = []
    used = {}
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != '(':
            raise PermutationParseError(f"Esperado '(' mas encontrado {ch!r}", pos)
        pos += 1
        cycle = []
        closed = False
        while pos < n:
            ch = text[pos]
            if ch.isspace() or ch == ',':
                pos += 1
                continue
            if ch == ')':
                closed = True
                pos += 1
                break
            if ch == '(':
                raise PermutationParseError("Parêntese aninhado", pos)
            if not ch.isdigit():
                raise PermutationParseError(f"Caractere inesperado {ch!r}", pos)
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            point = int(text[start:pos])
            if point < 1 or point > degree:
                raise PermutationParseError(f"Ponto {point} fora do intervalo 1..{degree}", start)
            if point in used:
                raise PermutationParseError(f"Ponto repetido {point}", start)
            used[point] = start
            cycle.append(point - 1)
        if not closed:
            raise PermutationParseError("Parêntese não fechado", n)
        if len(cycle) > 1:
            cycles.append(cycle)
    return Permutation.from_cycles(cycles, degree)


def compose(p, q):
    """p seguido de q (ação à direita)."""
    return p * q


def inverse(p):
    return ~p


def conjugate(x, g):
    """x^g = g^-1 x g."""
    return ~g * x * g


def commutator(a, g):
    """[a,g] = a^-1 g^-1 a g, de modo que a*[a,g] = a^g."""
    if a.degree != g.degree:
        raise DegreeMismatchError(f"Graus diferentes: {a.degree} e {g.degree}")
    return ~a * ~g * a * g
