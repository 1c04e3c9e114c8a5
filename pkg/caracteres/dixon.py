"""Algoritmo de Dixon: autovetores comuns das matrizes de classe sobre F_p e levantamento exato."""

from math import isqrt

from sympy import FiniteField, Poly, Symbol, nextprime, primitive_root, sqrt_mod
from sympy.polys.matrices import DomainMatrix

from caracteres.cyclotomic import CyclotomicValue
from estrutura.classes import class_index, conjugacy_classes
from estrutura.subgroups import exponent
from utils.errors import InternalConsistencyError
from utils.logger import log_debug


def dixon_prime(order, m):
    """Menor primo p ≡ 1 (mod m) com p > 2·√|G|."""
    p = nextprime(2 * isqrt(order))
    while p * p <= 4 * order or (p - 1) % m:
        p = nextprime(p)
    return int(p)


class ClassMatrices:
    """Constantes de estrutura das somas de classe, calculadas sob demanda.

    matrix(r)[t][s] = #{x ∈ C_r : x^-1 z_t ∈ C_s}, com z_t o representante de C_t.
    Os caracteres centrais ω são autovetores à esquerda: ω · matrix(r) = ω_r · ω.
    """

    def __init__(self, classes, index):
        self.classes = classes
        self.index = index
        self._cache = {}

    def matrix(self, r):
        rows = self._cache.get(r)
        if rows is None:
            k = len(self.classes)
            rows = [[0] * k for _ in range(k)]
            members = list(self.classes[r].member_set)
            inverses = [~x for x in members]
            for t, cls in enumerate(self.classes):
                z = cls.representative
                row = rows[t]
                for x_inv in inverses:
                    row[self.index[x_inv * z]] += 1
            self._cache[r] = rows
        return rows


def left_eigenspaces(A):
    """Bases escalonadas dos autoespaços à esquerda de A, uma por autovalor em F_p."""
    At = A.transpose()
    field = At.domain
    n = At.shape[0]
    poly = Poly(At.charpoly(), Symbol('t'), domain=field)
    result = []
    for root in poly.ground_roots():
        shift = At.diag([field(int(root))] * n, field)
        echelon, _ = (At - shift).nullspace().rref()
        result.append(echelon)
    return result


def split_by(spaces, rows, field):
    """Refina cada espaço comum pela ação de mais uma matriz de classe."""
    M = DomainMatrix.from_list(rows, field)
    refined = []
    for basis in spaces:
        if basis.shape[0] < 2:
            refined.append(basis)
            continue
        basis, pivots = basis.rref()
        # basis·M = R·basis; as colunas pivô de basis·M dão R
        R = basis * M.extract(range(M.shape[0]), pivots)
        refined.extend(piece * basis for piece in left_eigenspaces(R))
    return refined


def common_eigenvectors(matrices, k, Fp):
    spaces = [DomainMatrix.eye(k, Fp)]
    for r in range(1, k):
        if all(S.shape[0] == 1 for S in spaces):
            break
        spaces = split_by(spaces, matrices.matrix(r), Fp)
    if len(spaces) != k or any(S.shape[0] != 1 for S in spaces):
        raise InternalConsistencyError(
            f"Decomposição em autoespaços comuns falhou: {len(spaces)} espaços para {k} classes")
    return [[int(v) for v in S.to_list()[0]] for S in spaces]


class DixonResult:
    def __init__(self, classes, prime, conductor, rows, degrees):
        self.classes = classes
        self.prime = prime
        self.conductor = conductor
        self.rows = rows
        self.degrees = degrees


def dixon_characters(G):
    """Tabela exata de caracteres irredutíveis de G (linhas ainda não ordenadas)."""
    classes = conjugacy_classes(G)
    index = class_index(G)
    k = len(classes)
    order = G.order()
    m = exponent(G)
    p = dixon_prime(order, m)
    Fp = FiniteField(p)
    log_debug(f"|G|={order}, {k} classes, expoente {m}, primo {p}", "DIXON")

    reps = [c.representative for c in classes]
    sizes = [c.size for c in classes]
    inverse_class = [index[~z] for z in reps]

    vectors = common_eigenvectors(ClassMatrices(classes, index), k, Fp)

    x_m = pow(int(primitive_root(p)), (p - 1) // m, p)
    power_classes = {}

    def powers(s):
        cached = power_classes.get(s)
        if cached is None:
            z = reps[s]
            o = z.order()
            cached = [index[z ** l] for l in range(o)]
            power_classes[s] = cached
        return cached

    rows = []
    degrees = []
    for omega in vectors:
        if omega[0] % p == 0:
            raise InternalConsistencyError("Autovetor com coordenada nula na classe da identidade")
        scale = pow(omega[0], -1, p)
        omega = [w * scale % p for w in omega]
        total = sum(omega[s] * omega[inverse_class[s]] * pow(sizes[s], -1, p) for s in range(k)) % p
        if total == 0:
            raise InternalConsistencyError("Norma nula ao extrair o grau do caractere")
        degree_sq = order * pow(total, -1, p) % p
        root = sqrt_mod(degree_sq, p)
        if root is None:
            raise InternalConsistencyError(f"{degree_sq} não é quadrado módulo {p}")
        d = min(int(root), p - int(root))
        if d * d > order or order % d:
            raise InternalConsistencyError(f"Grau inválido {d} para |G| = {order}")
        chi_mod_p = [omega[s] * d * pow(sizes[s], -1, p) % p for s in range(k)]

        values = []
        for s in range(k):
            pw = powers(s)
            o = len(pw)
            x_o = pow(x_m, m // o, p)
            o_inv = pow(o, -1, p)
            terms = {}
            for j in range(o):
                # multiplicidade do autovalor ζ_o^j de g_s
                mu = sum(chi_mod_p[pw[l]] * pow(x_o, -l * j % o, p) for l in range(o)) * o_inv % p
                if mu > d:
                    raise InternalConsistencyError(
                        f"Multiplicidade {mu} fora de [0, {d}] no levantamento da classe {s}")
                if mu:
                    terms[j * (m // o)] = mu
            values.append(CyclotomicValue.from_exponents(m, terms))
        rows.append(values)
        degrees.append(d)

    return DixonResult(classes, p, m, rows, degrees)
