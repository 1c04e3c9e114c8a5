"""Manifestos: parâmetros de construção e propriedades esperadas de cada grupo do zoológico."""

import json
from math import factorial, prod

from nucleo.permutation import parse_permutation
from anticentral.criteria import (
    anticentral_elements, centralizer_order, commutator_index, is_anticentral,
)
from estrutura.series import is_solvable, nilpotency_class
from estrutura.subgroups import center, derived_subgroup
from utils.config import SCHEMA_VERSION
from utils.errors import ManifestMismatchError
from utils.logger import log_debug
from zoo import constructors


def _derived_unique_involution(G, a):
    D = derived_subgroup(G)
    return sum(1 for x in D.elements() if x.order() == 2) == 1


# Propriedade esperada -> como calculá-la a partir de (G, a)
PROPERTIES = {
    'order': lambda G, a: G.order(),
    'commutator_index': lambda G, a: commutator_index(G),
    'derived_order': lambda G, a: derived_subgroup(G).order(),
    'center_order': lambda G, a: center(G).order(),
    'nilpotency_class': lambda G, a: nilpotency_class(G),
    'solvable': lambda G, a: is_solvable(G),
    'anticentral_count': lambda G, a: len(anticentral_elements(G)),
    'has_anticentral': lambda G, a: bool(anticentral_elements(G)),
    'designated_anticentral': lambda G, a: is_anticentral(G, a),
    'designated_centralizer_order': lambda G, a: centralizer_order(G, a),
    'derived_unique_involution': _derived_unique_involution,
}
_NEEDS_ELEMENT = {'designated_anticentral', 'designated_centralizer_order'}


class GroupManifest:
    def __init__(self, name, family, params=None, expected=None, designated=None):
        unknown = set(expected or {}) - set(PROPERTIES)
        if unknown:
            raise ValueError(f"Propriedades desconhecidas no manifesto {name}: {sorted(unknown)}")
        self.name = name
        self.family = family
        self.params = dict(params or {})
        self.expected = dict(expected or {})
        self.designated = designated

    def to_dict(self):
        data = {
            'schema_version': SCHEMA_VERSION,
            'name': self.name,
            'family': self.family,
            'params': self.params,
            'expected': self.expected,
        }
        if self.designated is not None:
            data['designated'] = self.designated
        return data

    @classmethod
    def from_dict(cls, data):
        return cls(data['name'], data['family'], data.get('params'), data.get('expected'),
                   data.get('designated'))

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return f"GroupManifest({self.name}: {self.family} {self.params})"


def build_family(family, params):
    """Constrói (G, a) a partir da família e dos parâmetros; a é None quando não há designado."""
    p = dict(params)
    if family == 'abelian':
        return constructors.abelian_group(p['factors']), None
    if family == 'two_generated_2group':
        return constructors.two_generated_2group(p['kind'], p['order']), None
    if family == 'extraspecial':
        return constructors.extraspecial(p['p'], p['order'], p['exponent']), None
    if family == 'unitriangular':
        return constructors.unitriangular(p['n'], p['q'])
    if family == 'central_product_sl23_e':
        return constructors.central_product_sl23_e(p['e_kind'])
    if family == 'fpf_semidirect':
        return constructors.fpf_semidirect(p['factors'])
    if family == 'classical':
        return constructors.classical(p['kind'], n=p.get('n'), p=p.get('p'), d=p.get('d')), None
    if family == 'direct_product':
        left, a = build_manifest(GroupManifest.from_dict(p['left']))
        right, b = build_manifest(GroupManifest.from_dict(p['right']))
        G = constructors.direct_product(left, right)
        pair = constructors.embed_pair(left, right, a, b) if a is not None and b is not None else None
        return G, pair
    raise ValueError(f"Família desconhecida: {family}")


def build_manifest(manifest):
    """Grupo do manifesto, com o nome do manifesto e o elemento designado (se houver)."""
    G, a = build_family(manifest.family, manifest.params)
    if manifest.designated is not None:
        a = parse_permutation(manifest.designated, G.degree)
    G.name = manifest.name
    return G, a


def verify_manifest(G, manifest, a=None):
    """Recalcula cada propriedade esperada; ManifestMismatchError na primeira divergência."""
    for key, expected in sorted(manifest.expected.items()):
        if key in _NEEDS_ELEMENT and a is None:
            raise ManifestMismatchError(f"{manifest.name}: '{key}' exige elemento designado")
        actual = PROPERTIES[key](G, a)
        if actual != expected:
            raise ManifestMismatchError(
                f"{manifest.name}: {key} esperado {expected}, obtido {actual}")
    log_debug(f"Manifesto {manifest.name} conferido ({len(manifest.expected)} propriedades)", "ZOO")
    return True


def construct(manifest):
    """build_manifest seguido de verify_manifest."""
    G, a = build_manifest(manifest)
    verify_manifest(G, manifest, a)
    return G, a


def expected_properties(family, params):
    """Propriedades teóricas de cada família, usadas pelo subcomando construct."""
    p = dict(params)
    if family == 'abelian':
        order = prod(p['factors'])
        return {'order': order, 'commutator_index': order, 'anticentral_count': order}
    if family == 'two_generated_2group':
        order = p['order']
        return {'order': order, 'commutator_index': 4, 'nilpotency_class': order.bit_length() - 2}
    if family == 'extraspecial':
        return {'order': p['order'], 'center_order': p['p'], 'derived_order': p['p'],
                'anticentral_count': p['order'] - p['p']}
    if family == 'unitriangular':
        n, q = p['n'], p['q']
        return {'order': q ** (n * (n - 1) // 2), 'commutator_index': q ** (n - 1),
                'designated_centralizer_order': q ** (n - 1), 'designated_anticentral': True}
    if family == 'central_product_sl23_e':
        return {'order': 96, 'commutator_index': 12, 'derived_order': 8,
                'derived_unique_involution': True, 'designated_anticentral': True,
                'designated_centralizer_order': 12}
    if family == 'fpf_semidirect':
        return {'order': 2 * prod(p['factors']), 'commutator_index': 2,
                'designated_anticentral': True, 'designated_centralizer_order': 2}
    if family == 'classical':
        kind = p['kind']
        if kind == 'symmetric':
            return {'order': factorial(p['n'])}
        if kind == 'alternating':
            return {'order': max(1, factorial(p['n']) // 2)}
        if kind == 'cyclic':
            return {'order': p['n'], 'commutator_index': p['n']}
        if kind == 'frobenius':
            return {'order': p['p'] * p['d']}
        if kind == 'wreath_pp':
            return {'order': p['p'] ** (p['p'] + 1), 'nilpotency_class': p['p'], 'has_anticentral': True}
        if kind == 'psl27':
            return {'order': 168, 'commutator_index': 1, 'anticentral_count': 0, 'solvable': False}
    return {}
