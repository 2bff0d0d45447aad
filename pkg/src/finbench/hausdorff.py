"""Finite metric spaces of diameter at most 1 with exact rational distances,
nonexpanding maps, and the subset-space functor with the Hausdorff metric.

Rational arithmetic keeps the metric axioms assertable with equality; the
module desk-models the countable-boundedness argument, where at finite scale
the dense subsets are the whole carriers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class FinMetricSpace:
    points: tuple
    dist: tuple  # full matrix of Fractions aligned with points

    def __post_init__(self):
        n = len(self.points)
        if len(set(self.points)) != n:
            raise ValueError("duplicate points")
        if len(self.dist) != n or any(len(row) != n for row in self.dist):
            raise ValueError("distance matrix shape mismatch")
        for i in range(n):
            if self.dist[i][i] != 0:
                raise ValueError("nonzero self distance")
            for j in range(n):
                d = self.dist[i][j]
                if not isinstance(d, Fraction):
                    raise ValueError("distances must be Fractions")
                if d != self.dist[j][i]:
                    raise ValueError("distance matrix not symmetric")
                if i != j and not (0 < d <= 1):
                    raise ValueError("distances must lie in (0, 1]")
        for i, j, k in itertools.product(range(n), repeat=3):
            if self.dist[i][j] > self.dist[i][k] + self.dist[k][j]:
                raise ValueError("triangle inequality fails")

    def d(self, x, y):
        return self.dist[self.points.index(x)][self.points.index(y)]

    @property
    def size(self):
        return len(self.points)


def metric_space(points, d) -> FinMetricSpace:
    """Build a space from a callable or dict of Fractions."""
    points = tuple(points)

    def get(x, y):
        if x == y:
            return Fraction(0)
        if callable(d):
            return Fraction(d(x, y))
        return Fraction(d[(x, y)] if (x, y) in d else d[(y, x)])

    matrix = tuple(tuple(get(x, y) for y in points) for x in points)
    return FinMetricSpace(points, matrix)


@dataclass(frozen=True)
class NonexpandingMap:
    dom: FinMetricSpace
    cod: FinMetricSpace
    mapping: tuple  # images aligned with dom.points

    def __post_init__(self):
        if len(self.mapping) != self.dom.size:
            raise ValueError("mapping length mismatch")
        for y in self.mapping:
            if y not in self.cod.points:
                raise ValueError("image outside codomain")
        for x1, y1 in zip(self.dom.points, self.mapping):
            for x2, y2 in zip(self.dom.points, self.mapping):
                if self.cod.d(y1, y2) > self.dom.d(x1, x2):
                    raise ValueError("map is expanding")

    def __call__(self, x):
        return self.mapping[self.dom.points.index(x)]

    def is_isometric_embedding(self):
        return all(
            self.cod.d(self(x1), self(x2)) == self.dom.d(x1, x2)
            for x1 in self.dom.points
            for x2 in self.dom.points
        )


def nonexpanding(dom, cod, f) -> NonexpandingMap:
    return NonexpandingMap(dom, cod, tuple(f(x) for x in dom.points))


def point_set_dist(space: FinMetricSpace, x, M) -> Fraction:
    """Distance from a point to a nonempty subset (a minimum here)."""
    M = list(M)
    if not M:
        raise ValueError("distance to the empty set is undefined")
    return min(space.d(x, y) for y in M)


def hausdorff_dist(space: FinMetricSpace, M, N) -> Fraction:
    """Maximum of the two directed point-to-set suprema."""
    M, N = list(M), list(N)
    if not M or not N:
        raise ValueError("hausdorff distance needs nonempty subsets")
    forward = max(point_set_dist(space, x, N) for x in M)
    backward = max(point_set_dist(space, y, M) for y in N)
    return max(forward, backward)


def subset_space(space: FinMetricSpace) -> FinMetricSpace:
    """All nonempty subsets with the Hausdorff metric (2^n - 1 points)."""
    subs = []
    for r in range(1, space.size + 1):
        subs.extend(frozenset(c) for c in itertools.combinations(space.points, r))
    matrix = tuple(
        tuple(
            Fraction(0) if a == b else hausdorff_dist(space, a, b) for b in subs
        )
        for a in subs
    )
    return FinMetricSpace(tuple(subs), matrix)


def subset_map(f: NonexpandingMap) -> NonexpandingMap:
    """Direct images on the subset spaces; nonexpansion is re-verified by the
    constructor."""
    HX = subset_space(f.dom)
    HY = subset_space(f.cod)
    return NonexpandingMap(
        HX, HY, tuple(frozenset(f(x) for x in s) for s in HX.points)
    )


@dataclass
class SubsetBoundednessWitness:
    members: tuple  # the chosen subsets of X (points of the subspace of H X)
    union: tuple  # carrier of the recovering subspace M of X
    verified: bool


def boundedness_witness(space: FinMetricSpace, members) -> SubsetBoundednessWitness:
    """Recover a point set M of X so that every member subset is a direct
    image of a subset of M; at finite scale M is the union of the members."""
    members = tuple(frozenset(m) for m in members)
    union = sorted(set().union(*members) if members else set(), key=space.points.index)
    mset = set(union)
    verified = all(set(m) <= mset for m in members)
    if not verified:
        raise AssertionError("union failed to cover a member subset")
    return SubsetBoundednessWitness(members, tuple(union), verified)


def random_metric_space(rng, size: int) -> FinMetricSpace:
    """Random rational metric, repaired by min-plus closure and capped at 1."""
    points = tuple(range(size))
    d = {}
    for i in range(size):
        for j in range(i + 1, size):
            d[(i, j)] = Fraction(rng.randint(1, 12), 12)
    # Floyd-Warshall closure keeps positivity and enforces the triangle law
    for k, i, j in itertools.product(range(size), repeat=3):
        if i == j or i == k or j == k:
            continue
        a = d.get(tuple(sorted((i, k))))
        b = d.get(tuple(sorted((k, j))))
        ij = tuple(sorted((i, j)))
        if a is not None and b is not None and a + b < d[ij]:
            d[ij] = a + b
    return metric_space(points, {k: min(v, Fraction(1)) for k, v in d.items()})
