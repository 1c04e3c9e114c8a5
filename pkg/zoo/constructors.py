"""Construtores determinísticos das famílias de exemplo, como grupos de permutações."""

from math import prod

from sympy import isprime, primitive_root

from nucleo.group import PermGroup, trivial_group
from nucleo.permutation import Permutation
from estrutura.subgroups import center, quotient_group
from utils.config import DEGREE_BUDGET
from utils.errors import CapacityError
from utils.logger import log_debug
from zoo.fields import galois_field


def _check_degree(degree, what):
    if degree > DEGREE_BUDGET:
        raise CapacityError(degree, DEGREE_BUDGET, f"grau do construtor {what}")


def _shift(n, step=1):
    return Permutation([(i + step) % n for i in range(n)])


# --- produtos ---

def direct_product(A, B, name=None):
    """A × B agindo na união disjunta dos pontos (A primeiro)."""
    degree = A.degree + B.degree
    right = tuple(range(A.degree, degree))
    gens = [Permutation(a.array + right) for a in A.generators]
    gens += [Permutation(tuple(range(A.degree)) + tuple(A.degree + i for i in b.array))
             for b in B.generators]
    if name is None and A.name and B.name:
        name = f"{A.name}x{B.name}"
    return PermGroup(gens, degree=degree, name=name)


def embed_pair(A, B, a, b):
    """O elemento (a, b) de direct_product(A, B)."""
    return Permutation(a.array + tuple(A.degree + i for i in b.array))


# --- abelianos e cíclicos ---

def cyclic(n):
    if n < 1:
        raise ValueError(f"Ordem inválida: {n}")
    if n == 1:
        return trivial_group(1, name='C1')
    return PermGroup([_shift(n)], name=f"C{n}")


def abelian_group(invariant_factors):
    """Produto direto de ciclos em blocos disjuntos de pontos."""
    factors = list(invariant_factors)
    if not factors or any(n < 2 for n in factors):
        raise ValueError(f"Fatores invariantes devem ser ≥ 2: {factors}")
    degree = sum(factors)
    gens = []
    start = 0
    for n in factors:
        images = list(range(degree))
        for i in range(n):
            images[start + i] = start + (i + 1) % n
        gens.append(Permutation(images))
        start += n
    return PermGroup(gens, degree=degree, name='x'.join(f"C{n}" for n in factors))


# --- 2-grupos de classe maximal ---

def dihedral(points):
    """Grupo diedral de ordem 2·points nos vértices de um polígono."""
    r = _shift(points)
    s = Permutation([(-i) % points for i in range(points)])
    return PermGroup([r, s], name=f"D{2 * points}")


def _metacyclic_regular(n, r, c, name):
    """⟨x, y | x^n = 1, y^2 = x^c, x^y = x^r⟩ na ação regular à direita sobre x^i y^j."""
    def index(i, j):
        return i % n + n * j

    x_images = [0] * (2 * n)
    y_images = [0] * (2 * n)
    for j in range(2):
        rj = r if j else 1
        for i in range(n):
            # (x^i y^j)·x = x^{i + r^j} y^j
            x_images[index(i, j)] = index(i + rj, j)
            # (x^i y^j)·y = x^{i + c[j=1]} y^{j+1}
            y_images[index(i, j)] = index(i + (c if j else 0), (j + 1) % 2)
    return PermGroup([Permutation(x_images), Permutation(y_images)], name=name)


def two_generated_2group(kind, order):
    k = order.bit_length() - 1
    if order < 8 or order != 1 << k:
        raise ValueError(f"Ordem deve ser potência de 2 ≥ 8: {order}")
    n = order // 2
    if kind == 'dihedral':
        return dihedral(n)
    if kind == 'quaternion':
        return _metacyclic_regular(n, n - 1, n // 2, f"Q{order}")
    if kind == 'semidihedral':
        if order < 16:
            raise ValueError("Semidiedral exige ordem ≥ 16")
        return _metacyclic_regular(n, n // 2 - 1, 0, f"SD{order}")
    raise ValueError(f"Tipo desconhecido: {kind}")


# --- grupos unitriangulares ---

def _vector_codec(q, n):
    def decode(v):
        coords = []
        for _ in range(n):
            coords.append(v % q)
            v //= q
        return coords

    def encode(coords):
        v = 0
        for c in reversed(coords):
            v = v * q + c
        return v

    return decode, encode


def unitriangular(n, q):
    """UT(n, q) agindo à direita nos q^n vetores linha; a = I + superdiagonal de uns."""
    if n < 2:
        raise ValueError(f"n deve ser ≥ 2: {n}")
    F = galois_field(q)
    degree = q ** n
    _check_degree(degree, f"UT({n},{q})")
    decode, encode = _vector_codec(q, n)
    vectors = [decode(v) for v in range(degree)]

    def transvection(i, t):
        # v ↦ v·(I + t E_{i,i+1}): a coordenada i+1 recebe v_i·t
        images = []
        for v in vectors:
            w = list(v)
            w[i + 1] = F.add[w[i + 1]][F.mul[v[i]][t]]
            images.append(encode(w))
        return Permutation(images)

    basis = [F.p ** j for j in range(F.k)]
    gens = [transvection(i, t) for i in range(n - 1) for t in basis]
    images = []
    for v in vectors:
        w = [v[0]] + [F.add[v[j]][v[j - 1]] for j in range(1, n)]
        images.append(encode(w))
    a = Permutation(images)
    log_debug(f"UT({n},{q}) em {degree} pontos", "ZOO")
    return PermGroup(gens, degree=degree, name=f"UT({n},{q})"), a


# --- extraespeciais ---

def _central_generator(G):
    Z = center(G)
    return next(z for z in Z.elements() if not z.is_identity)


def central_product(A, B, name=None):
    """(A × B)/⟨(z_A, z_B^-1)⟩ para centros cíclicos de ordem prima, na ação regular do quociente."""
    P = direct_product(A, B)
    z = embed_pair(A, B, _central_generator(A), ~_central_generator(B))
    quotient = quotient_group(P, PermGroup([z], degree=P.degree))
    quotient.group.name = name
    return quotient


def _extraspecial_block(p, exponent_type):
    if p == 2:
        if exponent_type == 'D8':
            return dihedral(4)
        if exponent_type == 'Q8':
            return two_generated_2group('quaternion', 8)
        raise ValueError(f"Para p = 2 o tipo deve ser 'D8' ou 'Q8': {exponent_type}")
    if exponent_type == 'p':
        G, _ = unitriangular(3, p)
        G.name = f"Heis{p ** 3}"
        return G
    if exponent_type == 'p2':
        x = _shift(p * p)
        y = Permutation([((1 + p) * i) % (p * p) for i in range(p * p)])
        return PermGroup([x, y], name=f"M{p ** 3}")
    raise ValueError(f"Para p ímpar o tipo deve ser 'p' ou 'p2': {exponent_type}")


def extraspecial(p, order, exponent_type):
    """Extraespecial de ordem p^3 ou p^5 (produto central de dois blocos de ordem p^3).

    p = 2: 'D8' dá D8 e D8∘D8, 'Q8' dá Q8 e D8∘Q8. p ímpar: 'p' (expoente p) ou 'p2'.
    """
    if not isprime(p):
        raise ValueError(f"{p} não é primo")
    if order == p ** 3:
        return _extraspecial_block(p, exponent_type)
    if order != p ** 5:
        raise ValueError(f"Ordem não suportada: {order} (use p^3 ou p^5)")
    if p == 2:
        first = dihedral(4)
        second = _extraspecial_block(2, exponent_type)
    else:
        first = _extraspecial_block(p, exponent_type)
        second = _extraspecial_block(p, 'p')
    name = f"{first.name}o{second.name}"
    return central_product(first, second, name).group


# --- SL(2,3) ∘ E ---

def special_linear_23():
    """SL(2,3) nos 8 vetores não nulos de F_3^2, ação à direita v ↦ vM."""
    vectors = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    index = {v: i for i, v in enumerate(vectors)}

    def matrix_perm(m):
        (a, b), (c, d) = m
        return Permutation([index[((x * a + y * c) % 3, (x * b + y * d) % 3)] for x, y in vectors])

    upper = matrix_perm(((1, 1), (0, 1)))
    lower = matrix_perm(((1, 0), (1, 1)))
    minus = matrix_perm(((2, 0), (0, 2)))
    return PermGroup([upper, lower], name='SL(2,3)'), upper, minus


def central_product_sl23_e(e_kind):
    """(SL(2,3) × E)/⟨(-I, z)⟩, E ∈ {D8, Q8}; devolve o grupo e o elemento (x,y)Z designado."""
    S, x, minus = special_linear_23()
    if e_kind == 'D8':
        E = dihedral(4)
    elif e_kind == 'Q8':
        E = two_generated_2group('quaternion', 8)
    else:
        raise ValueError(f"E deve ser 'D8' ou 'Q8': {e_kind}")
    z = _central_generator(E)
    Zc = center(E)
    y = next(g for g in E.generators if g not in Zc)
    P = direct_product(S, E)
    glue = PermGroup([embed_pair(S, E, minus, z)], degree=P.degree)
    quotient = quotient_group(P, glue)
    G = quotient.group
    G.name = f"SL(2,3)o{e_kind}"
    a = quotient.project(embed_pair(S, E, x, y))
    return G, a


# --- produtos semidiretos por automorfismo sem pontos fixos ---

def fpf_semidirect(invariant_factors):
    """⟨α⟩ ⋉ K com K abeliano de ordem ímpar e α a inversão, agindo nos |K| pontos de K."""
    factors = list(invariant_factors)
    if not factors or any(n < 2 for n in factors):
        raise ValueError(f"Fatores invariantes devem ser ≥ 2: {factors}")
    size = prod(factors)
    if size % 2 == 0:
        raise ValueError(f"|K| = {size} deve ser ímpar para a inversão não ter pontos fixos")
    _check_degree(size, "fpf_semidirect")

    def decode(v):
        coords = []
        for n in factors:
            coords.append(v % n)
            v //= n
        return coords

    def encode(coords):
        v = 0
        for c, n in zip(reversed(coords), reversed(factors)):
            v = v * n + c
        return v

    gens = []
    for j, n in enumerate(factors):
        images = []
        for v in range(size):
            c = decode(v)
            c[j] = (c[j] + 1) % n
            images.append(encode(c))
        gens.append(Permutation(images))
    alpha = Permutation([encode([(-c) % n for c, n in zip(decode(v), factors)]) for v in range(size)])
    gens.append(alpha)
    name = 'x'.join(f"C{n}" for n in factors) + ':C2'
    return PermGroup(gens, degree=size, name=name), alpha


# --- famílias clássicas ---

def symmetric(n):
    if n < 1:
        raise ValueError(f"Grau inválido: {n}")
    if n == 1:
        return trivial_group(1, name='S1')
    if n == 2:
        return PermGroup([Permutation([1, 0])], name='S2')
    _check_degree(n, "simétrico")
    transposition = Permutation([1, 0] + list(range(2, n)))
    return PermGroup([transposition, _shift(n)], name=f"S{n}")


def alternating(n):
    if n < 1:
        raise ValueError(f"Grau inválido: {n}")
    if n < 3:
        return trivial_group(n, name=f"A{n}")
    _check_degree(n, "alternado")
    three = Permutation.from_cycles([(0, 1, 2)], n)
    if n == 3:
        return PermGroup([three], name='A3')
    long = _shift(n) if n % 2 else Permutation.from_cycles([tuple(range(1, n))], n)
    return PermGroup([three, long], name=f"A{n}")


def frobenius(p, d):
    """C_p ⋊ C_d nos p pontos de Z_p (x ↦ x+1 e x ↦ r·x com r de ordem d)."""
    if not isprime(p):
        raise ValueError(f"{p} não é primo")
    if d < 1 or (p - 1) % d:
        raise ValueError(f"d = {d} não divide p - 1 = {p - 1}")
    r = pow(int(primitive_root(p)), (p - 1) // d, p)
    gens = [_shift(p)]
    if d > 1:
        gens.append(Permutation([(r * i) % p for i in range(p)]))
    return PermGroup(gens, name=f"F{p * d}")


def wreath_pp(p):
    """C_p ≀ C_p nos p^2 pontos (blocos de tamanho p)."""
    if not isprime(p):
        raise ValueError(f"{p} não é primo")
    degree = p * p
    base = Permutation([(i + 1) % p if i < p else i for i in range(degree)])
    top = Permutation([(i + p) % degree for i in range(degree)])
    return PermGroup([base, top], name=f"C{p}wrC{p}")


def psl27():
    """PSL(2,7) na reta projetiva {0..6, ∞} (∞ = ponto 7): z ↦ z+1 e z ↦ -1/z."""
    inf = 7
    translate = Permutation([(z + 1) % 7 for z in range(7)] + [inf])

    def invert(z):
        if z == inf:
            return 0
        if z == 0:
            return inf
        return (-pow(z, -1, 7)) % 7

    return PermGroup([translate, Permutation([invert(z) for z in range(8)])], name='PSL(2,7)')


def classical(kind, n=None, p=None, d=None):
    if kind == 'symmetric':
        return symmetric(n)
    if kind == 'alternating':
        return alternating(n)
    if kind == 'cyclic':
        return cyclic(n)
    if kind == 'frobenius':
        return frobenius(p, d)
    if kind == 'wreath_pp':
        return wreath_pp(p)
    if kind == 'psl27':
        return psl27()
    raise ValueError(f"Família clássica desconhecida: {kind}")
