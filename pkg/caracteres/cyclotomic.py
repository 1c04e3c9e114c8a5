from functools import lru_cache

from sympy import Symbol, cyclotomic_poly, totient
from sympy.polys.densearith import dup_mul, dup_rem
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import ZZ


@lru_cache(maxsize=None)
def _cyclotomic_dense(m):
    """Coeficientes de Φ_m, do termo líder para o constante."""
    poly = cyclotomic_poly(m, Symbol('z'), polys=True)
    return tuple(ZZ(int(c)) for c in poly.all_coeffs())


@lru_cache(maxsize=None)
def _phi(m):
    return int(totient(m))


def _reduce(m, ascending):
    """Reduz um polinômio em ζ_m (coeficientes crescentes) módulo Φ_m."""
    dense = dup_strip([ZZ(int(c)) for c in reversed(ascending)])
    rem = dup_rem(dense, list(_cyclotomic_dense(m)), ZZ)
    coeffs = [int(c) for c in reversed(rem)]
    phi = _phi(m)
    return tuple(coeffs + [0] * (phi - len(coeffs)))


class CyclotomicValue:
    """Inteiro ciclotômico Σ c_i ζ^i na base de potências 1, ζ, ..., ζ^{φ(m)-1}."""

    __slots__ = ('conductor', 'coefficients')

    def __init__(self, conductor, coefficients):
        phi = _phi(conductor)
        coeffs = tuple(int(c) for c in coefficients)
        if len(coeffs) != phi:
            coeffs = _reduce(conductor, coeffs)
        self.conductor = conductor
        self.coefficients = coeffs

    @classmethod
    def from_exponents(cls, conductor, terms):
        """terms: mapa expoente -> coeficiente, expoentes lidos módulo m."""
        dense = [0] * conductor
        for k, c in terms.items():
            dense[k % conductor] += c
        return cls(conductor, _reduce(conductor, dense))

    @classmethod
    def integer(cls, conductor, n):
        return cls(conductor, (n,) + (0,) * (_phi(conductor) - 1))

    def _coerce(self, other):
        if isinstance(other, CyclotomicValue):
            if other.conductor != self.conductor:
                raise ValueError(f"Condutores diferentes: {self.conductor} e {other.conductor}")
            return other
        if isinstance(other, int):
            return CyclotomicValue.integer(self.conductor, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicValue(self.conductor,
                               tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicValue(self.conductor, tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        f = dup_strip([ZZ(c) for c in reversed(self.coefficients)])
        g = dup_strip([ZZ(c) for c in reversed(other.coefficients)])
        product = dup_mul(f, g, ZZ)
        return CyclotomicValue(self.conductor, _reduce(self.conductor, list(reversed(product))))

    __rmul__ = __mul__

    def conjugate(self):
        """Conjugação complexa: ζ^i -> ζ^{-i}."""
        terms = {}
        for i, c in enumerate(self.coefficients):
            if c:
                terms[-i] = terms.get(-i, 0) + c
        return CyclotomicValue.from_exponents(self.conductor, terms)

    def norm_squared(self):
        """|v|^2 = v * conj(v), exato."""
        return self * self.conjugate()

    @property
    def is_zero(self):
        return not any(self.coefficients)

    def as_integer(self):
        """Valor inteiro, ou None se o valor não é racional."""
        if any(self.coefficients[1:]):
            return None
        return self.coefficients[0]

    def __eq__(self, other):
        if isinstance(other, int):
            return self.as_integer() == other
        if not isinstance(other, CyclotomicValue):
            return NotImplemented
        return self.conductor == other.conductor and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.conductor, self.coefficients))

    def sort_key(self):
        return self.coefficients

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            term = str(abs(c)) if i == 0 else f"{abs(c)}*z^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+{term}" if c > 0 else f"-{term}")
        return ''.join(parts) or '0'

    def __repr__(self):
        return f"CyclotomicValue({self}, m={self.conductor})"
