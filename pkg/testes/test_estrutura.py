import sys
import os
current_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(current_dir)
sys.path.insert(0, project_root)

import pytest

from nucleo.group import PermGroup, trivial_group
from nucleo.oracle import brute_centralizer, brute_classes, brute_derived
from nucleo.permutation import parse_permutation
from estrutura.classes import class_of, conjugacy_classes
from estrutura.lattice import subgroup_lattice
from estrutura.series import (
    chief_series, is_nilpotent, is_solvable, nilpotency_class, series_report,
)
from estrutura.subgroups import (
    center, centralizer, centralizer_of, derived_subgroup, intersection, is_normal,
    is_supplement, normal_closure, normalizer, quotient_group, same_subgroup,
)
from estrutura.sylow import sylow_subgroup, sylow_subgroups
from utils.errors import NotASubgroupError, NotNormalError, UnsupportedGroupError
from zoo.constructors import abelian_group, alternating, cyclic, dihedral, symmetric, unitriangular


def perm(text, degree):
    return parse_permutation(text, degree)


def group(degree, *texts):
    return PermGroup([perm(t, degree) for t in texts], degree=degree)


# --- centralizadores, classes, derivado, centro ---

def test_centralizer_orders():
    assert centralizer(symmetric(3), perm("(1 2)", 3)).order() == 2
    assert centralizer(alternating(4), perm("(1 2 3)", 4)).order() == 3
    D8 = dihedral(4)
    z = perm("(1 3)(2 4)", 4)
    assert centralizer(D8, z).order() == 8


def test_centralizer_of_transposition_in_s8():
    assert centralizer_of(symmetric(8), [perm("(1 2)", 8)]).order() == 1440


def test_centralizer_rejects_outsider():
    with pytest.raises(NotASubgroupError):
        centralizer(alternating(4), perm("(1 2)", 4))


@pytest.mark.parametrize("G,sizes", [
    (symmetric(3), [1, 2, 3]),
    (alternating(4), [1, 3, 4, 4]),
    (symmetric(4), [1, 3, 6, 6, 8]),
])
def test_class_sizes(G, sizes):
    assert sorted(c.size for c in conjugacy_classes(G)) == sizes
    assert sorted(len(c) for c in brute_classes(G.elements())) == sizes


def test_abelian_classes_are_singletons():
    G = abelian_group([2, 4])
    assert len(conjugacy_classes(G)) == 8


def test_class_representatives_are_minimal():
    for cls in conjugacy_classes(symmetric(4)):
        assert cls.representative == min(cls.member_set)
        assert class_of(symmetric(4), cls.representative) == cls.member_set


def test_derived_subgroups():
    assert derived_subgroup(symmetric(3)).order() == 3
    assert derived_subgroup(cyclic(6)).is_trivial
    S4 = symmetric(4)
    D = derived_subgroup(S4)
    assert D.order() == 12
    assert D.element_set() == frozenset(brute_derived(S4.elements(), 4, 100))


def test_centers():
    assert center(dihedral(4)).order() == 2
    assert center(abelian_group([3, 3])).order() == 9
    assert center(alternating(4)).is_trivial


def test_centralizer_matches_oracle():
    G = symmetric(4)
    x = perm("(1 2)(3 4)", 4)
    assert centralizer(G, x).element_set() == frozenset(brute_centralizer(G.elements(), x))


@pytest.mark.parametrize("G", [symmetric(4), alternating(4), dihedral(8), abelian_group([2, 6])])
def test_centralizer_paths_agree(G, monkeypatch):
    reps = [c.representative for c in conjugacy_classes(G)]
    exhaustive = [centralizer_of(G, [x]).element_set() for x in reps]
    subgroups = [group(G.degree, ""), PermGroup([reps[-1]], degree=G.degree)]
    normalizers = [normalizer(G, H).element_set() for H in subgroups]
    monkeypatch.setattr('estrutura.subgroups.EXHAUSTIVE_CENTRALIZER_LIMIT', 0)
    assert [centralizer_of(G, [x]).element_set() for x in reps] == exhaustive
    assert [normalizer(G, H).element_set() for H in subgroups] == normalizers


# --- normalizador, fecho normal, quociente ---

def test_normalizers():
    S3 = symmetric(3)
    assert normalizer(S3, group(3, "(1 2)")).order() == 2
    assert normalizer(S3, alternating(3)).order() == 6
    assert normalizer(alternating(4), group(4, "(1 2 3)")).order() == 3


def test_normal_closures():
    assert normal_closure(symmetric(3), [perm("(1 2 3)", 3)]).order() == 3
    assert normal_closure(symmetric(3), [perm("", 3)]).is_trivial
    assert normal_closure(alternating(4), [perm("(1 2)(3 4)", 4)]).order() == 4


def test_quotients():
    S3 = symmetric(3)
    assert quotient_group(S3, alternating(3)).group.order() == 2
    assert quotient_group(S3, S3).group.is_trivial
    D8 = dihedral(4)
    Q = quotient_group(D8, center(D8))
    assert Q.group.order() == 4 and Q.group.is_abelian()
    assert all(Q.project(z).is_identity for z in center(D8).generators)


def test_quotient_by_trivial_is_identity_map():
    G = symmetric(3)
    Q, project = quotient_group(G, trivial_group(3))
    assert Q is G
    assert project(perm("(1 2)", 3)) == perm("(1 2)", 3)


def test_quotient_requires_normal():
    with pytest.raises(NotNormalError):
        quotient_group(symmetric(3), group(3, "(1 2)"))


def test_intersection_and_normality():
    S4 = symmetric(4)
    V4 = group(4, "(1 2)(3 4)", "(1 3)(2 4)")
    assert is_normal(S4, V4)
    assert not is_normal(S4, group(4, "(1 2)"))
    assert intersection(V4, group(4, "(1 2)(3 4)", "(1 2)")).order() == 2


# --- Sylow ---

def test_sylow_subgroups():
    assert sylow_subgroup(symmetric(3), 3).order() == 3
    assert sylow_subgroup(cyclic(5), 2).is_trivial
    P = sylow_subgroup(alternating(4), 2)
    assert P.order() == 4 and is_normal(alternating(4), P)
    with pytest.raises(ValueError):
        sylow_subgroup(symmetric(3), 4)


@pytest.mark.parametrize("G,p,count,order", [
    (symmetric(4), 2, 3, 8),
    (symmetric(4), 3, 4, 3),
    (alternating(5), 5, 6, 5),
])
def test_sylow_counts(G, p, count, order):
    sylows = sylow_subgroups(G, p)
    assert len(sylows) == count
    assert all(P.order() == order for P in sylows)


# --- séries ---

def test_derived_series_of_s4():
    report = series_report(symmetric(4), 'derived')
    assert report.orders == [24, 12, 4, 1]
    assert report.is_solvable and not report.is_nilpotent
    assert report.nilpotency_class is None


def test_abelian_series():
    report = series_report(abelian_group([2, 3]), 'lower_central')
    assert report.is_nilpotent and report.nilpotency_class == 1
    assert nilpotency_class(trivial_group(2)) == 0


def test_maximal_class():
    D16 = dihedral(8)
    assert nilpotency_class(D16) == 3
    assert series_report(D16, 'upper_central').orders == [1, 2, 4, 16]


def test_chief_series_of_a4_and_s4():
    A4 = chief_series(alternating(4))
    assert A4.orders == [1, 4, 12]
    assert A4.central_factors == [False, True]
    S4 = chief_series(symmetric(4))
    assert S4.orders == [1, 4, 12, 24]
    assert S4.central_factors == [False, False, True]


def test_chief_series_of_nilpotent_groups():
    D8 = chief_series(dihedral(4))
    assert D8.orders == [1, 2, 4, 8]
    assert all(D8.central_factors)
    C5 = chief_series(cyclic(5))
    assert C5.orders == [1, 5] and C5.central_factors == [True]


def test_chief_series_needs_solvable():
    assert not is_solvable(alternating(5))
    assert not is_nilpotent(alternating(5))
    with pytest.raises(UnsupportedGroupError):
        chief_series(alternating(5))


def test_chief_series_passes_through_derived_subgroup():
    G, _ = unitriangular(4, 2)
    series = chief_series(G)
    D = derived_subgroup(G)
    assert D.order() == 8
    assert any(same_subgroup(N, D) for N in series.terms)
    assert series.orders == [1, 2, 4, 8, 16, 32, 64]
    assert all(series.central_factors)


# --- suplementos e reticulado ---

def test_supplements():
    S3 = symmetric(3)
    assert is_supplement(S3, group(3, "(1 2)"))
    assert is_supplement(S3, S3)
    A4 = alternating(4)
    assert not is_supplement(A4, group(4, "(1 2)(3 4)", "(1 3)(2 4)"))


@pytest.mark.parametrize("G,count", [
    (symmetric(3), 6),
    (dihedral(4), 10),
    (alternating(4), 10),
    (symmetric(4), 30),
])
def test_lattice_sizes(G, count):
    lattice = subgroup_lattice(G)
    assert len(lattice) == count
    assert lattice[0].is_trivial and lattice[-1].order() == G.order()


def test_lattice_containing_element():
    lattice = subgroup_lattice(symmetric(3), [perm("(1 2)", 3)])
    assert [H.order() for H in lattice] == [2, 6]


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
