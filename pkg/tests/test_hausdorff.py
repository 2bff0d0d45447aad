"""Exact-arithmetic metric spaces and the subset-space functor."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from finbench.hausdorff import (
    FinMetricSpace,
    NonexpandingMap,
    boundedness_witness,
    hausdorff_dist,
    metric_space,
    nonexpanding,
    point_set_dist,
    random_metric_space,
    subset_map,
    subset_space,
)

from oracles import hausdorff_by_definition


def _half_space():
    return metric_space([0, 1], lambda x, y: Fraction(1, 2))


def test_point_in_set_distance_zero():
    X = _half_space()
    assert point_set_dist(X, 0, [0, 1]) == 0


def test_point_set_distance_half():
    X = _half_space()
    assert point_set_dist(X, 0, [1]) == Fraction(1, 2)


def test_point_set_distance_is_min():
    X = metric_space(
        [0, 1, 2],
        {(0, 1): Fraction(1, 5), (0, 2): Fraction(2, 5), (1, 2): Fraction(1, 2)},
    )
    assert point_set_dist(X, 0, [1, 2]) == Fraction(1, 5)


def test_point_set_distance_empty_rejected():
    with pytest.raises(ValueError):
        point_set_dist(_half_space(), 0, [])


def test_hausdorff_identity_symmetry():
    X = _half_space()
    assert hausdorff_dist(X, [0, 1], [0, 1]) == 0
    assert hausdorff_dist(X, [0], [1]) == hausdorff_dist(X, [1], [0]) == Fraction(1, 2)


def test_hausdorff_one_sided_sup():
    X = _half_space()
    assert hausdorff_dist(X, [0], [0, 1]) == X.d(1, 0)


def test_subset_space_sizes():
    for size in (1, 2, 3):
        X = random_metric_space(random.Random(size), size)
        assert subset_space(X).size == 2**size - 1


def test_subset_space_table_matches_definition():
    X = random_metric_space(random.Random(3), 3)
    H = subset_space(X)
    for a in H.points:
        for b in H.points:
            expected = 0 if a == b else hausdorff_by_definition(X, a, b)
            assert H.d(a, b) == expected


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 5))
def test_subset_space_metric_axioms(seed, size):
    # the FinMetricSpace constructor checks all axioms with exact equality
    X = random_metric_space(random.Random(seed), size)
    subset_space(X)


def test_subset_map_identity_and_constant():
    X = random_metric_space(random.Random(5), 3)
    idX = nonexpanding(X, X, lambda x: x)
    assert subset_map(idX).mapping == subset_space(X).points
    c = nonexpanding(X, X, lambda x: X.points[0])
    Hc = subset_map(c)
    assert all(img == frozenset({X.points[0]}) for img in Hc.mapping)


def test_subset_map_of_embedding_is_injective():
    X = random_metric_space(random.Random(6), 3)
    points = tuple(X.points) + ("far",)
    Y = metric_space(
        points, lambda a, b: Fraction(1) if "far" in (a, b) else X.d(a, b)
    )
    emb = nonexpanding(X, Y, lambda x: x)
    assert emb.is_isometric_embedding()
    Hemb = subset_map(emb)
    assert len(set(Hemb.mapping)) == len(Hemb.mapping)


def test_expanding_map_rejected():
    X = metric_space([0, 1], lambda a, b: Fraction(1, 4))
    Y = metric_space([0, 1], lambda a, b: Fraction(1, 2))
    with pytest.raises(ValueError):
        nonexpanding(X, Y, lambda x: x)


def test_boundedness_witness_singleton():
    X = random_metric_space(random.Random(7), 4)
    w = boundedness_witness(X, [frozenset([X.points[0]])])
    assert w.union == (X.points[0],)


def test_boundedness_witness_all_singletons():
    X = random_metric_space(random.Random(8), 4)
    w = boundedness_witness(X, [frozenset([p]) for p in X.points])
    assert set(w.union) == set(X.points)


def test_boundedness_witness_random_members():
    rng = random.Random(9)
    X = random_metric_space(rng, 5)
    members = [frozenset(rng.sample(X.points, rng.randint(1, 5))) for _ in range(3)]
    w = boundedness_witness(X, members)
    assert set(w.union) == set().union(*members)
    assert w.verified
