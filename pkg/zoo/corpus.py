"""Corpus embutido: um manifesto por grupo de teste, cobrindo todas as famílias do zoológico."""

from utils.logger import log_info
from zoo.manifest import GroupManifest, construct


def _classical(name, kind, expected, designated=None, **params):
    return GroupManifest(name, 'classical', dict(kind=kind, **params), expected, designated)


def _part(name, family, params, designated=None):
    part = {'name': name, 'family': family, 'params': params}
    if designated is not None:
        part['designated'] = designated
    return part


def builtin_corpus():
    """Manifestos do corpus, ordenados por nome."""
    s3 = _part('S3', 'classical', {'kind': 'symmetric', 'n': 3}, '(1 2)')
    a4 = _part('A4', 'classical', {'kind': 'alternating', 'n': 4}, '(1 2 3)')
    manifests = [
        # abelianos: todo elemento é anticentral
        _classical('C1', 'cyclic', {'order': 1, 'commutator_index': 1, 'anticentral_count': 1}, n=1),
        GroupManifest('C6', 'abelian', {'factors': [6]},
                      {'order': 6, 'commutator_index': 6, 'anticentral_count': 6}),
        GroupManifest('C2xC2', 'abelian', {'factors': [2, 2]},
                      {'order': 4, 'commutator_index': 4, 'anticentral_count': 4}),
        GroupManifest('C4xC2', 'abelian', {'factors': [4, 2]},
                      {'order': 8, 'commutator_index': 8, 'anticentral_count': 8}),

        # grupos simétricos e alternados pequenos
        _classical('S3', 'symmetric',
                   {'order': 6, 'commutator_index': 2, 'anticentral_count': 3,
                    'designated_anticentral': True, 'designated_centralizer_order': 2},
                   designated='(1 2)', n=3),
        _classical('A4', 'alternating',
                   {'order': 12, 'commutator_index': 3, 'derived_order': 4, 'anticentral_count': 8,
                    'designated_anticentral': True},
                   designated='(1 2 3)', n=4),
        _classical('S4', 'symmetric',
                   {'order': 24, 'commutator_index': 2, 'anticentral_count': 0, 'solvable': True}, n=4),

        # 2-grupos de classe maximal
        GroupManifest('D8', 'two_generated_2group', {'kind': 'dihedral', 'order': 8},
                      {'order': 8, 'commutator_index': 4, 'center_order': 2, 'nilpotency_class': 2,
                       'anticentral_count': 6}),
        GroupManifest('Q8', 'two_generated_2group', {'kind': 'quaternion', 'order': 8},
                      {'order': 8, 'commutator_index': 4, 'center_order': 2, 'nilpotency_class': 2,
                       'anticentral_count': 6}),
        GroupManifest('D16', 'two_generated_2group', {'kind': 'dihedral', 'order': 16},
                      {'order': 16, 'commutator_index': 4, 'nilpotency_class': 3,
                       'anticentral_count': 8}),
        GroupManifest('Q16', 'two_generated_2group', {'kind': 'quaternion', 'order': 16},
                      {'order': 16, 'commutator_index': 4, 'nilpotency_class': 3,
                       'anticentral_count': 8}),
        GroupManifest('SD16', 'two_generated_2group', {'kind': 'semidihedral', 'order': 16},
                      {'order': 16, 'commutator_index': 4, 'nilpotency_class': 3,
                       'anticentral_count': 8}),

        # extraespeciais
        GroupManifest('Heis27', 'extraspecial', {'p': 3, 'order': 27, 'exponent': 'p'},
                      {'order': 27, 'commutator_index': 9, 'center_order': 3, 'anticentral_count': 24}),
        GroupManifest('M27', 'extraspecial', {'p': 3, 'order': 27, 'exponent': 'p2'},
                      {'order': 27, 'commutator_index': 9, 'center_order': 3, 'anticentral_count': 24}),
        GroupManifest('D8oD8', 'extraspecial', {'p': 2, 'order': 32, 'exponent': 'D8'},
                      {'order': 32, 'commutator_index': 16, 'center_order': 2, 'anticentral_count': 30}),
        GroupManifest('D8oQ8', 'extraspecial', {'p': 2, 'order': 32, 'exponent': 'Q8'},
                      {'order': 32, 'commutator_index': 16, 'center_order': 2, 'anticentral_count': 30}),
        GroupManifest('3^(1+4)+', 'extraspecial', {'p': 3, 'order': 243, 'exponent': 'p'},
                      {'order': 243, 'commutator_index': 81, 'center_order': 3, 'anticentral_count': 240}),
        GroupManifest('3^(1+4)-', 'extraspecial', {'p': 3, 'order': 243, 'exponent': 'p2'},
                      {'order': 243, 'commutator_index': 81, 'center_order': 3, 'anticentral_count': 240}),

        # unitriangulares: |G:G'| = |C_G(a)| = q^{n-1}
        GroupManifest('UT(3,2)', 'unitriangular', {'n': 3, 'q': 2},
                      {'order': 8, 'commutator_index': 4, 'designated_centralizer_order': 4,
                       'designated_anticentral': True, 'anticentral_count': 6}),
        GroupManifest('UT(3,3)', 'unitriangular', {'n': 3, 'q': 3},
                      {'order': 27, 'commutator_index': 9, 'designated_centralizer_order': 9,
                       'designated_anticentral': True}),
        GroupManifest('UT(4,2)', 'unitriangular', {'n': 4, 'q': 2},
                      {'order': 64, 'commutator_index': 8, 'designated_centralizer_order': 8,
                       'designated_anticentral': True, 'nilpotency_class': 3}),
        GroupManifest('UT(4,3)', 'unitriangular', {'n': 4, 'q': 3},
                      {'order': 729, 'commutator_index': 27, 'designated_centralizer_order': 27,
                       'designated_anticentral': True}),
        GroupManifest('UT(5,2)', 'unitriangular', {'n': 5, 'q': 2},
                      {'order': 1024, 'commutator_index': 16, 'designated_centralizer_order': 16,
                       'designated_anticentral': True}),

        # produtos centrais de ordem 96
        GroupManifest('SL23oD8', 'central_product_sl23_e', {'e_kind': 'D8'},
                      {'order': 96, 'commutator_index': 12, 'derived_order': 8,
                       'derived_unique_involution': True, 'designated_anticentral': True,
                       'designated_centralizer_order': 12}),
        GroupManifest('SL23oQ8', 'central_product_sl23_e', {'e_kind': 'Q8'},
                      {'order': 96, 'commutator_index': 12, 'derived_order': 8,
                       'derived_unique_involution': True, 'designated_anticentral': True,
                       'designated_centralizer_order': 12}),

        # automorfismo sem pontos fixos e Frobenius
        GroupManifest('D10', 'fpf_semidirect', {'factors': [5]},
                      {'order': 10, 'commutator_index': 2, 'designated_anticentral': True,
                       'designated_centralizer_order': 2, 'anticentral_count': 5}),
        GroupManifest('C3xC3:C2', 'fpf_semidirect', {'factors': [3, 3]},
                      {'order': 18, 'commutator_index': 2, 'designated_anticentral': True,
                       'anticentral_count': 9}),
        _classical('F21', 'frobenius',
                   {'order': 21, 'commutator_index': 3, 'anticentral_count': 14}, p=7, d=3),
        _classical('F20', 'frobenius',
                   {'order': 20, 'commutator_index': 4, 'anticentral_count': 15}, p=5, d=4),
        _classical('C3wrC3', 'wreath_pp',
                   {'order': 81, 'commutator_index': 9, 'nilpotency_class': 3,
                    'has_anticentral': True}, p=3),

        # produtos diretos: (a,b) anticentral ⟺ a e b anticentrais
        GroupManifest('S3xS3', 'direct_product', {'left': s3, 'right': s3},
                      {'order': 36, 'commutator_index': 4, 'anticentral_count': 9,
                       'designated_anticentral': True}),
        GroupManifest('S3xA4', 'direct_product', {'left': s3, 'right': a4},
                      {'order': 72, 'commutator_index': 6, 'anticentral_count': 24,
                       'designated_anticentral': True}),

        # não solúveis: conjunto anticentral vazio
        _classical('A5', 'alternating',
                   {'order': 60, 'commutator_index': 1, 'anticentral_count': 0, 'solvable': False}, n=5),
        _classical('S5', 'symmetric',
                   {'order': 120, 'commutator_index': 2, 'anticentral_count': 0, 'solvable': False}, n=5),
        _classical('PSL(2,7)', 'psl27',
                   {'order': 168, 'commutator_index': 1, 'anticentral_count': 0, 'solvable': False}),
    ]
    return sorted(manifests, key=lambda m: m.name)


def build_corpus(names=None):
    """[(G, a, manifesto)] para o corpus (ou só os nomes pedidos), com manifestos conferidos."""
    result = []
    for manifest in builtin_corpus():
        if names is not None and manifest.name not in names:
            continue
        G, a = construct(manifest)
        result.append((G, a, manifest))
    log_info(f"Corpus embutido: {len(result)} grupos construídos", "ZOO")
    return result
