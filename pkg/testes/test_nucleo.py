import sys
import os
current_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(current_dir)
sys.path.insert(0, project_root)

import pytest
from hypothesis import given, settings, strategies as st
from sympy.combinatorics import Permutation as SymPermutation, PermutationGroup

from nucleo.group import PermGroup, build_bsgs, elements_enumerate, membership_test, trivial_group
from nucleo.gset import conjugation_gset, coset_action, natural_gset, orbit_of
from nucleo.oracle import brute_centralizer, brute_classes, brute_order
from nucleo.permutation import (
    Permutation, commutator, compose, conjugate, inverse, parse_permutation,
)
from utils.errors import CapacityError, DegreeMismatchError, PermutationParseError


def perm(text, degree):
    return parse_permutation(text, degree)


def group(degree, *texts):
    return PermGroup([perm(t, degree) for t in texts], degree=degree)


S3 = lambda: group(3, "(1 2)", "(1 2 3)")
A4 = lambda: group(4, "(1 2 3)", "(2 3 4)")
D8 = lambda: group(4, "(1 2 3 4)", "(2 4)")

permutations6 = st.permutations(list(range(6))).map(Permutation)


# --- Permutation / parse ---

def test_parse_cycle_notation():
    assert perm("(1 2 3)", 4).images == (2, 3, 1, 4)
    assert perm("(1 2 3)(4 5)", 5).array == (1, 2, 0, 4, 3)
    assert perm("", 5) == Permutation.identity(5)
    assert perm("(1)(2)", 3).is_identity


@pytest.mark.parametrize("text,degree,offset", [
    ("(1 2", 5, 4),
    ("(1 2 1)", 5, 5),
    ("(1 9)", 5, 3),
    ("x", 5, 0),
    ("(1 2)(1 3)", 3, 6),
])
def test_parse_errors_report_offset(text, degree, offset):
    with pytest.raises(PermutationParseError) as info:
        parse_permutation(text, degree)
    assert info.value.offset == offset


def test_cycle_string_is_canonical():
    assert perm("(3 1 2)(5 4)", 5).to_cycle_string() == "(1 2 3)(4 5)"
    assert Permutation.identity(3).to_cycle_string() == "()"


def test_right_action_composition():
    p = compose(perm("(1 2)", 3), perm("(2 3)", 3))
    assert p.array[0] == 2
    assert p == perm("(1 3 2)", 3)


def test_commutator_examples():
    a = perm("(1 2)", 3)
    assert commutator(a, a).is_identity
    assert commutator(a, perm("(1 3)", 3)) == perm("(1 3 2)", 3)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        perm("(1 2)", 3) * perm("(1 2)", 4)
    with pytest.raises(DegreeMismatchError):
        PermGroup([perm("(1 2)", 3), perm("(1 2)", 4)])


def test_order_and_powers():
    p = perm("(1 2 3)(4 5)", 5)
    assert p.order() == 6
    assert (p ** 6).is_identity
    assert p ** -1 == inverse(p)


@settings(max_examples=50)
@given(permutations6, permutations6)
def test_commutator_conjugation_identity(a, g):
    assert a * commutator(a, g) == conjugate(a, g)


@settings(max_examples=50)
@given(permutations6)
def test_inverse_law(p):
    assert (p * ~p).is_identity
    assert (p * Permutation.identity(6)) == p


# --- PermGroup ---

def test_orders_against_enumeration():
    assert S3().order() == 6
    assert group(5, "(1 2 3 4 5)", "(2 3 5 4)").order() == 20
    assert trivial_group(3).order() == 1
    assert build_bsgs(A4()).has_bsgs


@pytest.mark.parametrize("gens,degree", [
    (["(1 2)", "(1 2 3)"], 3),
    (["(1 2 3 4 5)", "(2 3 5 4)"], 5),
    (["(1 2 3 4 5 6 7 8)", "(1 2)"], 8),
    (["(1 2 3)(4 5 6)", "(1 4)(2 5)(3 6)"], 6),
])
def test_order_matches_sympy(gens, degree):
    G = group(degree, *gens)
    reference = PermutationGroup([SymPermutation(list(perm(t, degree).array)) for t in gens])
    assert G.order() == reference.order()


def test_membership():
    G = A4()
    assert membership_test(G, perm("(1 2 3)", 4))
    assert not membership_test(G, perm("(1 2)", 4))
    assert G.identity in G


def test_elements_are_sorted_and_distinct():
    G = D8()
    elements = elements_enumerate(G, 8)
    assert len(elements) == len(set(elements)) == 8
    assert elements == sorted(elements)
    assert trivial_group(4).elements() == [Permutation.identity(4)]


def test_enumeration_bound(monkeypatch):
    with pytest.raises(CapacityError):
        elements_enumerate(A4(), 11)
    monkeypatch.setenv('ACG_ENUM_BOUND', '10')
    with pytest.raises(CapacityError):
        A4().elements()


def test_oracle_matches_engine():
    G = group(5, "(1 2 3 4 5)", "(1 2)")
    assert brute_order(G, 200) == G.order() == 120


# --- G-conjuntos ---

def test_natural_orbits():
    assert orbit_of(natural_gset(A4()), 0) == {0, 1, 2, 3}
    assert orbit_of(natural_gset(trivial_group(3)), 2) == {2}


def test_conjugation_orbit_of_three_cycle():
    G = A4()
    three_cycles = [x for x in G.elements() if x.order() == 3]
    omega = conjugation_gset(G, three_cycles)
    assert len(orbit_of(omega, perm("(1 2 3)", 4))) == 4


def test_coset_action():
    gset, image = coset_action(S3(), group(3, "(1 2)"))
    assert len(gset) == 3 and image.order() == 6
    gset, image = coset_action(S3(), S3())
    assert len(gset) == 1 and image.is_trivial
    gset, image = coset_action(D8(), group(4, "(1 3)(2 4)"))
    assert len(gset) == 4 and image.order() == 4


def test_brute_classes_of_s3():
    elements = S3().elements()
    assert sorted(len(c) for c in brute_classes(elements)) == [1, 2, 3]
    assert len(brute_centralizer(elements, perm("(1 2)", 3))) == 2


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
