"""Corpos finitos GF(q) como tabelas de soma e produto sobre os inteiros 0..q-1."""

from functools import lru_cache
from itertools import product

from sympy import factorint
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_add, gf_irreducible_p, gf_mul, gf_rem, gf_strip


def prime_power(q):
    """(p, k) com q = p^k, ou ValueError."""
    factors = factorint(q)
    if q < 2 or len(factors) != 1:
        raise ValueError(f"{q} não é potência de primo")
    (p, k), = factors.items()
    return int(p), int(k)


def _first_irreducible(p, k):
    """Menor polinômio mônico irredutível de grau k sobre GF(p), em ordem lexicográfica."""
    for tail in product(range(p), repeat=k):
        f = [ZZ(1)] + [ZZ(c) for c in tail]
        if gf_irreducible_p(f, p, ZZ):
            return f
    raise ValueError(f"Sem polinômio irredutível de grau {k} sobre GF({p})")


class GaloisField:
    """Elemento c_0 + c_1 x + ... + c_{k-1} x^{k-1} codificado como Σ c_i p^i."""

    def __init__(self, q):
        self.p, self.k = prime_power(q)
        self.q = q
        self.modulus = _first_irreducible(self.p, self.k) if self.k > 1 else None
        polys = [self._poly(e) for e in range(q)]
        self.add = [[self._encode(gf_add(f, g, self.p, ZZ)) for g in polys] for f in polys]
        self.mul = [[self._encode(self._reduce(gf_mul(f, g, self.p, ZZ))) for g in polys]
                    for f in polys]
        self.neg = [row.index(0) for row in self.add]

    def _reduce(self, f):
        if self.modulus is None:
            return f
        return gf_rem(f, self.modulus, self.p, ZZ)

    def _poly(self, e):
        coeffs = []
        for _ in range(self.k):
            coeffs.append(ZZ(e % self.p))
            e //= self.p
        return gf_strip(list(reversed(coeffs)))

    def _encode(self, f):
        value = 0
        for c in f:
            value = value * self.p + int(c)
        return value

    @property
    def elements(self):
        return range(self.q)

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def galois_field(q):
    return GaloisField(q)
