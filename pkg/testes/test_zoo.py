import sys
import os
current_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(current_dir)
sys.path.insert(0, project_root)

import pytest

from anticentral.criteria import centralizer_order, commutator_index, is_anticentral
from estrutura.series import nilpotency_class
from estrutura.subgroups import center, derived_subgroup
from utils.errors import CapacityError, ManifestMismatchError
from zoo.constructors import (
    abelian_group, alternating, central_product_sl23_e, classical, cyclic, dihedral, direct_product,
    embed_pair, extraspecial, fpf_semidirect, frobenius, psl27, symmetric, two_generated_2group,
    unitriangular, wreath_pp,
)
from zoo.corpus import build_corpus, builtin_corpus
from zoo.fields import galois_field, prime_power
from zoo.manifest import (
    GroupManifest, build_family, construct, expected_properties, verify_manifest,
)


# --- corpos finitos ---

def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(7) == (7, 1)
    with pytest.raises(ValueError):
        prime_power(12)


def test_gf4_tables():
    F = galois_field(4)
    # x^2 = x + 1 no corpo com quatro elementos
    assert F.mul[2][2] == 3
    assert all(F.add[a][a] == 0 for a in F.elements)
    assert all(any(F.mul[a][b] == 1 for b in F.elements) for a in F.elements if a)


def test_prime_field_tables():
    F = galois_field(5)
    assert F.mul[2][3] == 1
    assert F.neg[2] == 3


# --- construtores ---

@pytest.mark.parametrize("G,order", [
    (cyclic(1), 1),
    (cyclic(7), 7),
    (abelian_group([2, 2, 3]), 12),
    (dihedral(5), 10),
    (symmetric(5), 120),
    (alternating(5), 60),
    (frobenius(7, 3), 21),
    (wreath_pp(3), 81),
    (psl27(), 168),
    (classical('cyclic', n=4), 4),
])
def test_constructor_orders(G, order):
    assert G.order() == order


@pytest.mark.parametrize("kind,order,klass", [
    ('dihedral', 8, 2),
    ('quaternion', 8, 2),
    ('dihedral', 16, 3),
    ('quaternion', 16, 3),
    ('semidihedral', 16, 3),
    ('dihedral', 32, 4),
])
def test_two_generated_2groups(kind, order, klass):
    G = two_generated_2group(kind, order)
    assert G.order() == order
    assert commutator_index(G) == 4
    assert nilpotency_class(G) == klass


def test_quaternion_has_unique_involution():
    G = two_generated_2group('quaternion', 8)
    assert sum(1 for x in G.elements() if x.order() == 2) == 1


def test_invalid_family_parameters():
    with pytest.raises(ValueError):
        two_generated_2group('semidihedral', 8)
    with pytest.raises(ValueError):
        two_generated_2group('dihedral', 12)
    with pytest.raises(ValueError):
        frobenius(7, 4)
    with pytest.raises(ValueError):
        fpf_semidirect([4])
    with pytest.raises(ValueError):
        extraspecial(3, 81, 'p')


@pytest.mark.parametrize("n,q", [(3, 2), (3, 3), (3, 4), (4, 2)])
def test_unitriangular(n, q):
    G, a = unitriangular(n, q)
    assert G.order() == q ** (n * (n - 1) // 2)
    assert commutator_index(G) == q ** (n - 1)
    assert centralizer_order(G, a) == q ** (n - 1)
    assert is_anticentral(G, a)


def test_unitriangular_degree_budget():
    with pytest.raises(CapacityError):
        unitriangular(3, 17)


@pytest.mark.parametrize("p,order,kind", [
    (2, 8, 'D8'), (2, 8, 'Q8'), (3, 27, 'p'), (3, 27, 'p2'), (2, 32, 'D8'), (2, 32, 'Q8'),
])
def test_extraspecial_groups(p, order, kind):
    G = extraspecial(p, order, kind)
    assert G.order() == order
    assert center(G).order() == p
    assert derived_subgroup(G).order() == p


def test_extraspecial_exponents():
    assert max(x.order() for x in extraspecial(3, 27, 'p').elements()) == 3
    assert max(x.order() for x in extraspecial(3, 27, 'p2').elements()) == 9


def test_sl23_central_product():
    G, a = central_product_sl23_e('Q8')
    D = derived_subgroup(G)
    assert G.order() == 96 and D.order() == 8
    assert sum(1 for x in D.elements() if x.order() == 2) == 1
    assert centralizer_order(G, a) == 12


def test_fpf_semidirect():
    G, alpha = fpf_semidirect([3, 3])
    assert G.order() == 18
    assert alpha.order() == 2
    assert centralizer_order(G, alpha) == 2


def test_direct_product_embedding():
    A, B = symmetric(3), alternating(4)
    G = direct_product(A, B)
    assert G.order() == 72 and G.name == 'S3xA4'
    pair = embed_pair(A, B, A.generators[0], B.generators[0])
    assert pair in G
    assert pair.order() == 6


# --- manifestos ---

def test_manifest_rejects_unknown_property():
    with pytest.raises(ValueError):
        GroupManifest('X', 'abelian', {'factors': [2]}, {'cor': 'azul'})


def test_manifest_json():
    manifest = GroupManifest('S3', 'classical', {'kind': 'symmetric', 'n': 3},
                             {'order': 6}, designated='(1 2)')
    data = GroupManifest.from_json(manifest.to_json()).to_dict()
    assert data == manifest.to_dict()
    assert data['schema_version'] == 1


def test_verify_manifest_detects_mismatch():
    G, a = build_family('abelian', {'factors': [2, 3]})
    good = GroupManifest('C6', 'abelian', {'factors': [2, 3]}, {'order': 6, 'anticentral_count': 6})
    assert verify_manifest(G, good)
    bad = GroupManifest('C6', 'abelian', {'factors': [2, 3]}, {'order': 7})
    with pytest.raises(ManifestMismatchError):
        verify_manifest(G, bad)
    needs = GroupManifest('C6', 'abelian', {'factors': [2, 3]}, {'designated_anticentral': True})
    with pytest.raises(ManifestMismatchError):
        verify_manifest(G, needs, a)


def test_nested_direct_product_manifest():
    left = {'name': 'S3', 'family': 'classical', 'params': {'kind': 'symmetric', 'n': 3},
            'designated': '(1 2)'}
    manifest = GroupManifest('S3xS3', 'direct_product', {'left': left, 'right': left},
                             {'order': 36, 'anticentral_count': 9, 'designated_anticentral': True})
    G, a = construct(manifest)
    assert G.name == 'S3xS3'
    assert a is not None and a.order() == 2


@pytest.mark.parametrize("family,params", [
    ('abelian', {'factors': [4, 2]}),
    ('two_generated_2group', {'kind': 'quaternion', 'order': 16}),
    ('extraspecial', {'p': 3, 'order': 27, 'exponent': 'p2'}),
    ('unitriangular', {'n': 3, 'q': 3}),
    ('central_product_sl23_e', {'e_kind': 'D8'}),
    ('fpf_semidirect', {'factors': [5]}),
    ('classical', {'kind': 'wreath_pp', 'p': 2}),
    ('classical', {'kind': 'psl27'}),
])
def test_expected_properties_hold(family, params):
    G, a = build_family(family, params)
    manifest = GroupManifest(family, family, params, expected_properties(family, params))
    assert verify_manifest(G, manifest, a)


# --- corpus embutido ---

def test_builtin_corpus_is_sorted_and_unique():
    names = [m.name for m in builtin_corpus()]
    assert names == sorted(names)
    assert len(names) == len(set(names)) == 35


def test_builtin_corpus_constructs():
    built = build_corpus()
    assert len(built) == 35
    by_name = {m.name: (G, a) for G, a, m in built}
    G, a = by_name['S3']
    assert a is not None and is_anticentral(G, a)
    assert by_name['Heis27'][0].order() == 27


def test_build_corpus_by_name():
    built = build_corpus(['A5', 'D8'])
    assert [m.name for _, _, m in built] == ['A5', 'D8']


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
