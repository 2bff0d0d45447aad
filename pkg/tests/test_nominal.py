"""Single-orbit classification, equivariance decisions, the subset-orbit
counterexample functor, and the strictness construction for nominal sets."""

import itertools
import random

import pytest

from finbench.nominal import (
    ONE,
    NomMor,
    NominalSetSpec,
    OrbitSpec,
    all_equivariant_maps,
    countable_strictness_witness,
    equivalence_from_subgroup,
    equivariant_map_check,
    hom_exists_Pn,
    nom_compose,
    nom_counterexample,
    nom_counterexample_mor,
    nom_identity,
    orbit_iso_map,
    p_chain_certificate,
    p_prefix,
    pn_orbit,
    single_orbit_enumerate,
    subgroup_from_quotient,
    subgroups_of_Sn,
    support,
    support_rigidity_check,
    P_SUBSET_FAMILY,
)
from finbench.perms import all_perms, transposition
from finbench.colimits import FAIL

from oracles import brute_subgroups, subgroups_conjugacy_classes


# ---------------------------------------------------------------------------
# subgroup enumeration


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 2), (3, 6), (4, 30)])
def test_subgroup_counts_against_oracle(n, count):
    ours = subgroups_of_Sn(n)
    oracle = brute_subgroups(n)
    assert len(ours) == len(oracle) == count
    assert {frozenset(h) for h in ours} == set(oracle)


def test_subgroup_enumeration_rejects_large_n():
    with pytest.raises(ValueError):
        subgroups_of_Sn(6)


# ---------------------------------------------------------------------------
# orbits and supports


def test_orbit_elements_ordered_pairs():
    v2 = OrbitSpec(2)
    els = v2.elements(4)
    assert len(els) == 12  # all injective pairs from a 4-name pool


def test_orbit_elements_unordered_pairs():
    p2 = pn_orbit(2)
    els = p2.elements(4)
    assert len(els) == 6
    assert all(rep == tuple(sorted(rep)) for rep in els)


def test_support_is_tuple_image():
    p2 = pn_orbit(2)
    X = NominalSetSpec((p2,))
    for e in X.elements(6):
        assert support(e) == frozenset(e[1])


def test_support_of_triple():
    v3 = OrbitSpec(3)
    X = NominalSetSpec((v3,))
    elem = (0, (0, 1, 2))
    assert support(elem) == frozenset({0, 1, 2})


def test_support_equivariance_sampled():
    rng = random.Random(4)
    X = NominalSetSpec((pn_orbit(2), OrbitSpec(2)))
    pool = 6
    perms = all_perms(pool)
    for _ in range(40):
        pi = perms[rng.randrange(len(perms))]
        e = rng.choice(X.elements(pool))
        assert support(X.act(pi, e)) == frozenset(pi[v] for v in support(e))


def test_orbit_support_size_constant():
    # every element of an orbit built from a subgroup keeps full support
    for n in range(4):
        for H in subgroups_of_Sn(n):
            spec = OrbitSpec(n, tuple(H))
            for e in spec.elements(2 * n + 2):
                assert len(set(e)) == n


# ---------------------------------------------------------------------------
# quotient correspondence roundtrips


@pytest.mark.parametrize("n", [2, 3])
def test_subgroup_equivalence_roundtrip(n):
    for H in subgroups_of_Sn(n):
        eq = equivalence_from_subgroup(H, n)
        assert subgroup_from_quotient(eq, n) == H


def test_identity_equivalence_gives_trivial_subgroup():
    eq = lambda t, u: tuple(t) == tuple(u)
    S = subgroup_from_quotient(eq, 2)
    assert S == ((0, 1),)


def test_same_image_equivalence_gives_full_group():
    eq = lambda t, u: frozenset(t) == frozenset(u)
    S = subgroup_from_quotient(eq, 2)
    assert len(S) == 2


def test_non_equivariant_equivalence_rejected():
    # relating one specific pair only cannot be equivariant
    special = ((0, 1), (1, 0))

    def eq(t, u):
        if tuple(t) == tuple(u):
            return True
        return (tuple(t), tuple(u)) in (special, special[::-1])

    with pytest.raises(ValueError):
        subgroup_from_quotient(eq, 2)


# ---------------------------------------------------------------------------
# single-orbit classification


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 2), (3, 4)])
def test_single_orbit_class_counts(n, count):
    assert len(single_orbit_enumerate(n)) == count
    # independent oracle: conjugacy classes of subgroups
    assert len(subgroups_conjugacy_classes(n)) == count


def test_conjugate_subgroups_give_isomorphic_orbits():
    a = OrbitSpec(3, (transposition(3, 0, 1),))
    b = OrbitSpec(3, (transposition(3, 1, 2),))
    assert orbit_iso_map(a, b) is not None


def test_non_conjugate_subgroups_distinct_orbits():
    ordered = OrbitSpec(2)
    unordered = pn_orbit(2)
    assert orbit_iso_map(ordered, unordered) is None


# ---------------------------------------------------------------------------
# equivariant maps


def test_equivariant_map_check_identity():
    X = NominalSetSpec((pn_orbit(2),))
    pool = 6
    f = {e: e for e in X.elements(pool)}
    assert equivariant_map_check(f, X, X, pool)


def test_equivariant_map_check_rejects_choice_map():
    # sending {a,b} to {min(a,b)} is not equivariant: a transposition of the
    # two names moves the value but fixes the argument
    P2 = NominalSetSpec((pn_orbit(2),))
    P1 = NominalSetSpec((pn_orbit(1),))
    pool = 6
    f = {(0, rep): (0, (min(rep),)) for _, rep in P2.elements(pool)}
    assert not equivariant_map_check(f, P2, P1, pool)


def test_equivariant_image_map_accepted():
    # tuple to its underlying name set
    V2 = NominalSetSpec((OrbitSpec(2),))
    P2 = NominalSetSpec((pn_orbit(2),))
    pool = 6
    f = {(0, rep): (0, tuple(sorted(rep))) for _, rep in V2.elements(pool)}
    assert equivariant_map_check(f, V2, P2, pool)


def test_pool_too_small_rejected():
    X = NominalSetSpec((pn_orbit(2),))
    with pytest.raises(ValueError):
        equivariant_map_check({}, X, X, 4)


# ---------------------------------------------------------------------------
# hom existence and the counterexample functor


def test_hom_exists_examples():
    V = NominalSetSpec((OrbitSpec(1),))
    assert hom_exists_Pn(1, V)
    assert hom_exists_Pn(2, ONE)
    assert not hom_exists_Pn(2, NominalSetSpec((pn_orbit(1),)))


def test_hom_exists_into_family():
    assert hom_exists_Pn(3, P_SUBSET_FAMILY)


def test_nom_cx_on_p1():
    r = nom_counterexample(NominalSetSpec((pn_orbit(1),)))
    assert r.added_unit and r.witness_n == 2
    assert r.value.orbit_count == 2


def test_nom_cx_on_terminal():
    r = nom_counterexample(ONE)
    assert not r.added_unit and r.value == ONE


def test_nom_cx_on_prefix():
    r = nom_counterexample(p_prefix(3))
    assert r.added_unit and r.witness_n == 4
    assert r.value.orbit_count == 4


def test_nom_cx_on_family():
    r = nom_counterexample(P_SUBSET_FAMILY)
    assert r.value == ONE


def test_nom_cx_morphism_action():
    X, Y = p_prefix(1), p_prefix(2)
    inc = NomMor(X, Y, ((0, (0,)),), 10)
    Ff = nom_counterexample_mor(inc, n_bound=3)
    assert Ff.dom.orbit_count == 2 and Ff.cod.orbit_count == 3
    assert Ff.images[0] == (0, ())  # the added unit maps to the added unit


# ---------------------------------------------------------------------------
# rigidity and the chain certificate


def test_only_endo_of_prefix_is_identity():
    X = p_prefix(3)
    endos = all_equivariant_maps(X, X, pool=10)
    assert len(endos) == 1
    ident = nom_identity(X, pool=10)
    assert endos[0].images == ident.images


def test_rigidity_report():
    X = p_prefix(3)
    for f in all_equivariant_maps(X, X, pool=10):
        report = support_rigidity_check(f)
        assert report.preserved
        assert report.checked == len(X.elements(10))


def test_p_chain_certificate():
    cert = p_chain_certificate(3)
    assert cert.verdict == FAIL
    assert cert.lhs_size == 4 and cert.rhs_size == 1
    assert cert.persistence["still_failing"]
    assert cert.persistence["lhs_size_k1"] == 5


# ---------------------------------------------------------------------------
# strictness construction


def test_strictness_identity():
    X = p_prefix(2)
    b = nom_identity(X, pool=10)
    wit = countable_strictness_witness(b)
    assert wit.b_prime.dom.orbit_count == X.orbit_count


def test_strictness_duplicate_orbit_folds():
    A = NominalSetSpec((pn_orbit(1), pn_orbit(1)))
    b = NomMor(NominalSetSpec((pn_orbit(1),)), A, ((0, (0,)),), 10)
    wit = countable_strictness_witness(b)
    assert wit.b_prime.dom.orbit_count == 2
    # the fold sends the duplicate orbit onto its isomorphic representative
    assert wit.f.images[1][0] in (0, 1)


def test_strictness_triple_duplicate_folds_to_two():
    A = NominalSetSpec((pn_orbit(1), pn_orbit(1), pn_orbit(1)))
    b = NomMor(NominalSetSpec((pn_orbit(1),)), A, ((0, (0,)),), 10)
    wit = countable_strictness_witness(b)
    assert wit.b_prime.dom.orbit_count == 2  # image orbit plus one class rep


def test_strictness_mixed_orbits():
    A = NominalSetSpec((pn_orbit(1), pn_orbit(2)))
    b = NomMor(NominalSetSpec((pn_orbit(1),)), A, ((0, (0,)),), 10)
    wit = countable_strictness_witness(b)
    assert wit.b_prime.dom.orbit_count == 2  # non-isomorphic orbits both kept


@pytest.mark.slow
def test_single_orbit_classes_n4_against_conjugacy_oracle():
    assert len(single_orbit_enumerate(4)) == len(subgroups_conjugacy_classes(4)) == 11
