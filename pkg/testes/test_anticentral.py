import sys
import os
current_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(current_dir)
sys.path.insert(0, project_root)

import pytest
from hypothesis import given, settings, strategies as st

from nucleo.group import PermGroup
from nucleo.gset import coset_action, subgroup_conjugation_gset
from nucleo.permutation import parse_permutation
from anticentral.cchain import c_chain
from anticentral.chief import (
    chief_factor_criterion, hereditary_checks, invariant_class_bijection,
    solvability_contrapositive,
)
from anticentral.criteria import (
    anticentral_elements, centralizer_order, equivalence_report, find_anticentral_classes,
    is_anticentral,
)
from anticentral.examples import (
    extraspecial_law, maximal_class_law, metabelian_law, minimal_derived_dichotomy,
    small_p_group_law, unitriangular_law,
)
from anticentral.supplements import (
    carter_subgroups, carter_verify, fixed_point_analysis, supplement_properties,
)
from anticentral.sylowhall import (
    cyclic_sylow_complement_check, decompose, hall_system, invariant_sylow, normal_sylow_criteria,
    sylow_meet_supplement, sylow_normalizer_identity,
)
from estrutura.classes import conjugacy_classes
from estrutura.subgroups import derived_subgroup
from utils.errors import (
    NotAnticentralError, NotASubgroupError, PreconditionError, UnsupportedGroupError,
)
from zoo.constructors import (
    abelian_group, alternating, central_product_sl23_e, cyclic, dihedral, extraspecial, frobenius,
    symmetric, two_generated_2group, unitriangular,
)


def perm(text, degree):
    return parse_permutation(text, degree)


def group(degree, *texts):
    return PermGroup([perm(t, degree) for t in texts], degree=degree)


A4_ELEMENT = "(1 2 3)"
D8_ROTATION = "(1 2 3 4)"


# --- critérios ---

def test_abelian_groups_are_all_anticentral():
    G = abelian_group([2, 4])
    assert all(is_anticentral(G, x) for x in G.elements())
    assert len(anticentral_elements(G)) == 8


def test_sl23_central_product_designated_element():
    for kind in ('D8', 'Q8'):
        G, a = central_product_sl23_e(kind)
        assert G.order() == 96
        assert is_anticentral(G, a)
        assert centralizer_order(G, a) == 12


def test_symmetric_groups_have_no_anticentral_elements():
    assert find_anticentral_classes(symmetric(4)) == []
    assert find_anticentral_classes(symmetric(5)) == []
    assert not any(is_anticentral(symmetric(4), x) for x in symmetric(4).elements())


def test_outsider_is_rejected():
    with pytest.raises(NotASubgroupError):
        is_anticentral(alternating(4), perm("(1 2)", 4))


def test_equivalence_report_on_d8_rotation():
    cert = equivalence_report(dihedral(4), perm(D8_ROTATION, 4))
    assert cert.conditions == {'i': True, 'ii': True, 'iii': True, 'iv': True}
    assert cert.centralizer_order == cert.commutator_index == 4


def test_equivalence_report_negative_cases():
    cert = equivalence_report(symmetric(3), perm("", 3))
    assert cert.evaluated == {'i': False, 'ii': False, 'iii': False, 'iv': False}
    cert = equivalence_report(alternating(4), perm("(1 2)(3 4)", 4))
    assert not any(cert.evaluated.values())
    assert cert.centralizer_order == 4
    assert cert.to_dict()['class_coset_witness'] is not None


@pytest.mark.parametrize("G", [
    symmetric(3), alternating(4), dihedral(8), extraspecial(3, 27, 'p2'), frobenius(5, 4),
])
def test_anticentral_elements_avoid_derived_subgroup(G):
    D = derived_subgroup(G)
    for cls in conjugacy_classes(G):
        cert = equivalence_report(G, cls.representative)
        assert cert.in_derived == (cls.representative in D)
        if cert.is_anticentral:
            assert not cert.in_derived
    assert equivalence_report(abelian_group([3]), perm("", 3)).in_derived


def test_equivalence_without_characters():
    cert = equivalence_report(alternating(4), perm(A4_ELEMENT, 4), use_characters=False)
    assert cert.cond_iv is None
    assert cert.evaluated == {'i': True, 'ii': True, 'iii': True}


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(dihedral(8).elements()))
def test_conditions_always_agree_in_d16(x):
    cert = equivalence_report(dihedral(8), x)
    assert cert.agree
    assert cert.is_anticentral == is_anticentral(dihedral(8), x)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(symmetric(4).elements()))
def test_conditions_always_agree_in_s4(x):
    cert = equivalence_report(symmetric(4), x)
    assert cert.agree and not cert.is_anticentral


def test_extraspecial_anticentral_set():
    G = extraspecial(3, 27, 'p')
    D = derived_subgroup(G)
    anticentral = anticentral_elements(G)
    assert len(anticentral) == 24
    assert set(anticentral) == {x for x in G.elements() if x not in D}


def test_unitriangular_centralizer():
    G, a = unitriangular(4, 2)
    assert G.order() == 64
    assert centralizer_order(G, a) == 8
    assert any(a in cls for cls in find_anticentral_classes(G))


# --- cadeia C e subgrupo de Carter ---

def test_c_chain_limits():
    A4 = alternating(4)
    assert c_chain(A4, perm(A4_ELEMENT, 4)).limit.order() == 3
    assert c_chain(symmetric(3), perm("(1 2)", 3)).limit.order() == 2
    D8 = dihedral(4)
    chain = c_chain(D8, perm("(1 3)(2 4)", 4))
    assert chain.limit.order() == 8 and chain.is_subgroup


def test_c_chain_rejects_outsider():
    with pytest.raises(NotASubgroupError):
        c_chain(alternating(4), perm("(1 2)", 4))


def test_carter_subgroups():
    report = carter_verify(alternating(4), perm(A4_ELEMENT, 4))
    assert report.passed
    assert report.engine['D_order'] == 3
    assert report.engine['carter_regime'] == 'exhaustive'
    assert carter_verify(cyclic(6), perm("(1 2 3 4 5 6)", 6)).engine['D_order'] == 6
    assert carter_verify(dihedral(4), perm(D8_ROTATION, 4)).engine['D_order'] == 8


def test_carter_subgroups_are_conjugate():
    assert carter_verify(alternating(4), perm(A4_ELEMENT, 4)).engine['carter_conjugates'] == 4
    assert carter_verify(symmetric(3), perm("(1 2)", 3)).engine['carter_conjugates'] == 3
    assert carter_verify(dihedral(4), perm(D8_ROTATION, 4)).engine['carter_conjugates'] == 1
    carters = carter_subgroups(symmetric(4))
    assert sorted(K.order() for K in carters) == [8, 8, 8]


def test_carter_requires_anticentral():
    with pytest.raises(NotAnticentralError):
        carter_verify(symmetric(4), perm("(1 2)", 4))


# --- suplementos e pontos fixos ---

def test_fixed_point_on_cosets():
    S3 = symmetric(3)
    gset, _ = coset_action(S3, group(3, "(1 2)"))
    assert fixed_point_analysis(gset, S3, perm("(1 2)", 3)) == 0


def test_fixed_point_on_sylow_subgroups():
    A4 = alternating(4)
    a = perm(A4_ELEMENT, 4)
    omega = subgroup_conjugation_gset(A4, group(4, A4_ELEMENT))
    assert len(omega) == 4
    assert fixed_point_analysis(omega, A4, a) == frozenset(group(4, A4_ELEMENT).elements())


def test_supplement_properties():
    assert supplement_properties(symmetric(3), group(3, "(1 2)"), perm("(1 2)", 3)).passed
    assert supplement_properties(symmetric(3), symmetric(3), perm("(1 2)", 3)).passed
    report = supplement_properties(alternating(4), group(4, A4_ELEMENT), perm(A4_ELEMENT, 4))
    assert report.engine['abnormal_regime'] == 'exhaustive'


def test_supplement_preconditions():
    with pytest.raises(PreconditionError):
        supplement_properties(alternating(4), group(4, "(1 2)(3 4)", "(1 3)(2 4)"),
                              perm("(1 2)(3 4)", 4))


# --- Sylow e Hall ---

def test_invariant_sylow_and_hall_system():
    A4 = alternating(4)
    a = perm(A4_ELEMENT, 4)
    assert invariant_sylow(A4, A4, a, 3).order() == 3
    assert invariant_sylow(A4, A4, a, 2).order() == 4
    system = hall_system(A4, A4, a)
    assert system.orders() == {(): 1, (2,): 4, (3,): 3, (2, 3): 12}
    assert system[[3]].order() == 3 and system[[2, 3]].order() == 12
    assert system.report.passed
    assert sylow_normalizer_identity(A4, a).passed


def test_hall_system_needs_solvable():
    A5 = alternating(5)
    with pytest.raises(UnsupportedGroupError):
        hall_system(A5, A5, perm("(1 2 3)", 5))


def test_decompose():
    a = perm("(1 2 3 4 5 6)", 6)
    parts = decompose(a, 2)
    assert parts.p_part.order() == 2 and parts.p_prime_part.order() == 3
    assert parts.p_part * parts.p_prime_part == a


def test_normal_sylow_criteria():
    report = normal_sylow_criteria(alternating(4), perm(A4_ELEMENT, 4), 2)
    assert report.engine['conditions'] == [True, True, True, True]
    report = normal_sylow_criteria(alternating(4), perm("(1 2)(3 4)", 4), 2)
    assert report.engine['anticentral'] is False


def test_cyclic_sylow_complement():
    F21 = frobenius(7, 3)
    a = F21.generators[1]
    assert is_anticentral(F21, a)
    assert cyclic_sylow_complement_check(F21, a, derived_subgroup(F21), 7).passed


def test_sylow_meet_supplement():
    S3 = symmetric(3)
    report = sylow_meet_supplement(S3, group(3, "(1 2)"), perm("(1 2)", 3), 2)
    assert report.passed


# --- fatores principais, classes invariantes, hereditariedade ---

def test_chief_factor_criterion():
    A4 = alternating(4)
    assert chief_factor_criterion(A4, perm(A4_ELEMENT, 4)).engine['criterion'] is True
    assert chief_factor_criterion(A4, perm("(1 2)(3 4)", 4)).engine['criterion'] is False


@pytest.mark.parametrize("build", [
    lambda: unitriangular(4, 2)[0],
    lambda: extraspecial(2, 32, 'D8'),
])
def test_chief_factor_criterion_on_every_class(build):
    G = build()
    for cls in conjugacy_classes(G):
        a = cls.representative
        report = chief_factor_criterion(G, a)
        assert report.passed
        assert report.engine['criterion'] == is_anticentral(G, a)


def test_chief_factor_criterion_on_unitriangular_involution():
    G, _ = unitriangular(4, 2)
    # transvecção E_{3,4}: v_4 += v_3
    x = perm("(5 13)(6 14)(7 15)(8 16)", G.degree)
    assert x in G
    assert not is_anticentral(G, x)
    assert chief_factor_criterion(G, x).engine['criterion'] is False


def test_invariant_class_bijection():
    assert invariant_class_bijection(alternating(4), perm(A4_ELEMENT, 4)).passed


def test_solvability_contrapositive():
    report = solvability_contrapositive(alternating(5))
    assert report.engine['anticentral_classes'] == 0
    assert solvability_contrapositive(symmetric(3)).passed


def test_hereditary_checks():
    report = hereditary_checks(symmetric(3), perm("(1 2)", 3))
    assert report.passed
    assert len(report.checks) == 5


# --- leis das famílias de exemplo ---

def test_extraspecial_law():
    assert extraspecial_law(extraspecial(3, 27, 'p')).passed
    assert extraspecial_law(extraspecial(2, 32, 'D8')).passed
    with pytest.raises(PreconditionError):
        extraspecial_law(symmetric(3))


@pytest.mark.parametrize("kind", ['p', 'p2'])
def test_extraspecial_law_order_243(kind):
    G = extraspecial(3, 243, kind)
    report = extraspecial_law(G)
    assert report.passed
    assert len(anticentral_elements(G)) == 240
    assert any(c.check_id.startswith('not_in_centralizer') for c in report.checks)


def test_unitriangular_law():
    for n, q in ((3, 3), (4, 2)):
        G, a = unitriangular(n, q)
        assert unitriangular_law(G, a, q, n).passed


def test_maximal_class_law():
    for kind in ('dihedral', 'quaternion', 'semidihedral'):
        assert maximal_class_law(two_generated_2group(kind, 16)).passed
    with pytest.raises(PreconditionError):
        maximal_class_law(dihedral(4))


def test_minimal_derived_dichotomy():
    assert minimal_derived_dichotomy(dihedral(4)).engine['dichotomy'] == 'central'
    assert minimal_derived_dichotomy(symmetric(3)).engine['dichotomy'] == 'frobenius'
    with pytest.raises(UnsupportedGroupError):
        minimal_derived_dichotomy(alternating(5))
    with pytest.raises(PreconditionError):
        minimal_derived_dichotomy(symmetric(4))


def test_small_p_groups_and_metabelian_law():
    assert small_p_group_law(two_generated_2group('quaternion', 8)).passed
    assert metabelian_law(symmetric(3)).passed
    assert metabelian_law(frobenius(5, 4)).passed


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
