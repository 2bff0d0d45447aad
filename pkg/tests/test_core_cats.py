"""Category backbone: hom enumeration, factorization, mono/epi, coproducts,
coequalizers, kernel pairs, subobjects, and isomorphism search."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from finbench.cats import (
    FINSET,
    GRA,
    UN,
    VEC2,
    Z2_GPD,
    Z3_GPD,
    S3_GPD,
    gset_cat,
    gset_free_orbit,
    gset_fixed_point,
    pair_through_chain,
    probe_objects,
    random_finset_mor,
    random_un_obj,
    random_un_surjection,
    two_object_iso_groupoid,
    presheaf_cat,
)
from finbench.core import Mor, category_of

from oracles import brute_homs


# ---------------------------------------------------------------------------
# hom enumeration


def test_finset_hom_count():
    X, Y = FINSET.obj(range(2)), FINSET.obj(range(3))
    assert len(FINSET.hom_set(X, Y)) == 9  # |Y| ** |X|


def test_un_hom_against_function_space():
    c2, c4 = UN.cycle(2), UN.cycle(4)
    assert UN.hom_set(c2, c4) == []
    assert len(brute_homs(c2, c4)) == 0
    homs = UN.hom_set(c4, c2)
    assert len(homs) == 2
    assert len(brute_homs(c4, c2)) == 2


@pytest.mark.parametrize("p", [1, 2, 3, 4, 5, 6])
@pytest.mark.parametrize("q", [1, 2, 3, 4, 5])
def test_un_divisibility_small_oracle(p, q):
    homs = UN.hom_set(UN.cycle(p), UN.cycle(q))
    brute = brute_homs(UN.cycle(p), UN.cycle(q))
    assert len(homs) == len(brute)
    assert (len(homs) > 0) == (p % q == 0)


def test_un_divisibility_law_full_range():
    for p in range(1, 24):
        for q in range(1, 24):
            nonempty = bool(UN.hom_set(UN.cycle(p), UN.cycle(q)))
            assert nonempty == (p % q == 0), (p, q)


def test_hom_composition_closure():
    rng = random.Random(3)
    objs = [random_un_obj(rng, 3) for _ in range(3)]
    for X in objs:
        for Y in objs:
            for f in UN.hom_set(X, Y):
                for Z in objs:
                    for g in UN.hom_set(Y, Z)[:4]:
                        gf = UN.compose(g, f)
                        assert gf in UN.hom_set(X, Z)


# ---------------------------------------------------------------------------
# factorization


def test_factorize_identity():
    X = FINSET.obj(range(3))
    e, m = FINSET.factorize(FINSET.identity(X))
    assert e.dom == e.cod == X and m.dom == m.cod == X


def test_factorize_constant():
    X = FINSET.obj(range(3))
    f = FINSET.mor(X, X, lambda x: 0)
    e, m = FINSET.factorize(f)
    assert m.dom.size == 1


def test_factorize_graph_collapse_to_loop():
    P2, L = GRA.path(2), GRA.loop()
    f = GRA.mor(P2, L, lambda v: 0)
    e, m = GRA.factorize(f)
    assert m.dom.size == 1
    assert GRA.edges(m.dom) == ((0, 0),)


def test_factorize_graph_edges_not_induced():
    # map an edgeless pair onto both endpoints of an edge: image has no edges
    pair = GRA.obj([0, 1], [])
    edge = GRA.obj([0, 1], [(0, 1)])
    f = GRA.mor(pair, edge, lambda v: v)
    _, m = GRA.factorize(f)
    assert GRA.edges(m.dom) == ()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_factorize_recomposes(seed):
    rng = random.Random(seed)
    f = random_finset_mor(rng)
    e, m = FINSET.factorize(f)
    assert FINSET.compose(m, e) == f
    assert FINSET.is_strong_epi(e) and FINSET.is_mono(m)


def test_diagonal_fillin_probes():
    # squares v . e = m . u with e strong epi, m mono admit a unique diagonal
    rng = random.Random(5)
    for _ in range(25):
        X = FINSET.obj(range(rng.randint(2, 4)))
        f = random_finset_mor(rng, 4, 4)
        e, _ = FINSET.factorize(
            FINSET.mor(X, X, {x: rng.randrange(X.size) for x in X.carrier})
        )
        M = FINSET.obj(range(rng.randint(1, 3)))
        Y, (m, _) = FINSET.coproduct([M, FINSET.obj(range(2))])
        for t in FINSET.hom_set(e.cod, M)[:3]:
            u = FINSET.compose(t, e)
            v = FINSET.compose(m, t)
            assert FINSET.compose(v, e) == FINSET.compose(m, u)
            d = FINSET.mor(e.cod, M, {e(x): u(x) for x in e.dom.carrier})
            assert FINSET.compose(d, e) == u
            assert FINSET.compose(m, d) == v


def test_un_factorize_image_is_subalgebra():
    rng = random.Random(11)
    for _ in range(20):
        X = random_un_obj(rng, 5)
        Y = random_un_obj(rng, 4)
        homs = UN.hom_set(X, Y)
        if not homs:
            continue
        f = homs[rng.randrange(len(homs))]
        e, m = UN.factorize(f)
        assert UN.compose(m, e) == f
        members = set(m.dom.carrier)
        assert all(UN.op(m.dom, x) in members for x in members)


# ---------------------------------------------------------------------------
# mono / epi and cancellation probes


def test_mono_epi_examples():
    inj = FINSET.mor(FINSET.obj(range(2)), FINSET.obj(range(3)), lambda x: x)
    assert FINSET.is_mono(inj) and not FINSET.is_epi(inj)
    c4, c2 = UN.cycle(4), UN.cycle(2)
    red = UN.mor(c4, c2, lambda e: (2, e[1] % 2))
    assert UN.is_epi(red) and not UN.is_mono(red)


def _cancellation_epi(cat, f, probes):
    for Z in probes:
        homs = cat.hom_set(f.cod, Z)
        for g in homs:
            for h in homs:
                if g != h and cat.compose(g, f) == cat.compose(h, f):
                    return False
    return True


def _cancellation_mono(cat, f, probes):
    for Z in probes:
        homs = cat.hom_set(Z, f.dom)
        for g in homs:
            for h in homs:
                if g != h and cat.compose(f, g) == cat.compose(f, h):
                    return False
    return True


def test_epi_agrees_with_cancellation():
    probes = probe_objects(FINSET, 3)
    rng = random.Random(1)
    for _ in range(15):
        f = random_finset_mor(rng, 3, 3)
        assert FINSET.is_epi(f) == _cancellation_epi(FINSET, f, probes)
        assert FINSET.is_mono(f) == _cancellation_mono(FINSET, f, probes)


def test_un_epi_agrees_with_cancellation():
    probes = [UN.cycle(1), UN.cycle(2), UN.obj(range(2), {0: 1, 1: 1})]
    c4, c2 = UN.cycle(4), UN.cycle(2)
    red = UN.mor(c4, c2, lambda e: (2, e[1] % 2))
    assert _cancellation_epi(UN, red, probes)
    assert not _cancellation_mono(UN, red, [c2, c4])


def test_graph_strong_epi_needs_edge_surjectivity():
    pair = GRA.obj([0, 1], [])
    edge = GRA.obj([0, 1], [(0, 1)])
    f = GRA.mor(pair, edge, lambda v: v)
    assert GRA.is_epi(f)
    assert not GRA.is_strong_epi(f)


# ---------------------------------------------------------------------------
# coproducts


def test_empty_coproduct_is_initial():
    out, injs = UN.coproduct([])
    assert out == UN.initial() and injs == []


def test_un_coproduct_two_cycles():
    out, injs = UN.coproduct([UN.cycle(2), UN.cycle(3)])
    assert out.size == 5
    assert sorted(UN.cycle_lengths(out)) == [2, 3]


def test_graph_coproduct_edges():
    edge = GRA.obj([0, 1], [(0, 1)])
    out, injs = GRA.coproduct([edge, edge])
    assert out.size == 4 and len(GRA.edges(out)) == 2


def test_coproduct_universal_property_probes():
    A, B = FINSET.obj(range(2)), FINSET.obj(range(1))
    S, (ia, ib) = FINSET.coproduct([A, B])
    for Z in probe_objects(FINSET, 2):
        for f in FINSET.hom_set(A, Z):
            for g in FINSET.hom_set(B, Z):
                pairing = {}
                for x in A.carrier:
                    pairing[ia(x)] = f(x)
                for x in B.carrier:
                    pairing[ib(x)] = g(x)
                h = FINSET.mor(S, Z, pairing)
                assert FINSET.compose(h, ia) == f
                assert FINSET.compose(h, ib) == g
                others = [
                    k for k in FINSET.hom_set(S, Z)
                    if FINSET.compose(k, ia) == f and FINSET.compose(k, ib) == g
                ]
                assert others == [h]


# ---------------------------------------------------------------------------
# coequalizers and kernel pairs


def test_coequalizer_of_equal_pair_is_iso():
    c3 = UN.cycle(3)
    f = UN.identity(c3)
    q = UN.coequalizer(f, f)
    assert UN.is_iso(q)


def test_finset_coequalizer_two_constants():
    one, two = FINSET.obj([0]), FINSET.obj(range(2))
    f = FINSET.mor(one, two, lambda x: 0)
    g = FINSET.mor(one, two, lambda x: 1)
    q = FINSET.coequalizer(f, g)
    assert q.cod.size == 1


def test_kernel_pair_of_cycle_reduction():
    c4, c2 = UN.cycle(4), UN.cycle(2)
    red = UN.mor(c4, c2, lambda e: (2, e[1] % 2))
    p1, p2 = UN.kernel_pair(red)
    assert p1.dom.size == 8
    assert UN.compose(red, p1) == UN.compose(red, p2)


def test_regularity_small_samples():
    from finbench.suites import regularity_check

    rng = random.Random(2)
    for _ in range(25):
        assert regularity_check(random_finset_mor(rng, surjective=True))
        assert regularity_check(random_un_surjection(rng))


def test_regularity_presheaf_carrier_6():
    from finbench.suites import regularity_check

    cat = gset_cat(Z2_GPD)
    both, injs = cat.coproduct([gset_free_orbit(cat, 0), gset_free_orbit(cat, 1)])
    free = gset_free_orbit(cat, 0)
    for f in cat.hom_set(both, free):
        if f.is_surjective():
            assert regularity_check(f)


# ---------------------------------------------------------------------------
# subobjects


def test_finset_subobjects_of_pair():
    monos = FINSET.subobjects_fg(FINSET.obj(range(2)))
    assert len(monos) == 4
    assert sorted(m.dom.size for m in monos) == [0, 1, 1, 2]


def test_un_subalgebras_of_cycle():
    monos = UN.subobjects_fg(UN.cycle(4))
    assert sorted(m.dom.size for m in monos) == [0, 4]


def test_graph_subobjects_not_induced():
    edge = GRA.obj([0, 1], [(0, 1)])
    monos = GRA.subobjects_fg(edge)
    # vertex subsets: {}, {0}, {1}, {0,1} without edge, {0,1} with edge
    assert len(monos) == 5


# ---------------------------------------------------------------------------
# presheaves and vector spaces


def test_presheaf_ops_satisfy_composition():
    cat = gset_cat(Z3_GPD)
    free = gset_free_orbit(cat)
    g = Z3_GPD.mors[1][0]
    h = Z3_GPD.compose_names(g, g)
    for x in free.carrier:
        assert cat.op(free, g, cat.op(free, g, x)) == cat.op(free, h, x)


def test_presheaf_two_sorted_groupoid():
    gpd = two_object_iso_groupoid()
    cat = presheaf_cat(gpd)
    T = cat.terminal()
    assert T.size == 2  # one point per sort
    free = cat.obj({"a": [0], "b": [1]}, {"ia": {0: 0}, "ib": {1: 1}, "u": {0: 1}, "v": {1: 0}})
    assert cat.is_isomorphic(free, T)


def test_presheaf_hom_respects_sorts():
    cat = gset_cat(Z2_GPD)
    free = gset_free_orbit(cat)
    fix = gset_fixed_point(cat)
    homs = cat.hom_set(free, fix)
    assert len(homs) == 1  # collapse the free orbit
    assert cat.hom_set(fix, free) == []  # no fixed points in a free orbit


def test_vec_factorize_and_rank():
    v = VEC2
    f = v.from_matrix(v.obj(3), v.obj(2), [(1, 0), (1, 0), (0, 0)])
    e, m = v.factorize(f)
    assert v.dim(e.cod) == 1
    assert v.compose(m, e) == f


def test_vec_subobjects_count():
    # subspaces of F_2^2: trivial, three lines, whole plane
    assert len(VEC2.subobjects_fg(VEC2.obj(2))) == 5


def test_vec_coequalizer_is_cokernel():
    v = VEC2
    f = v.from_matrix(v.obj(1), v.obj(2), [(1, 0)])
    z = v.from_matrix(v.obj(1), v.obj(2), [(0, 0)])
    q = v.coequalizer(f, z)
    assert v.dim(q.cod) == 1
    assert q.is_surjective()


# ---------------------------------------------------------------------------
# isomorphism search and chains


def test_iso_search_un():
    a = UN.cycles_sum([2, 3])
    b, _ = UN.coproduct([UN.cycle(3), UN.cycle(2)])
    assert UN.is_isomorphic(a, b)
    assert not UN.is_isomorphic(a, UN.cycle(5))


def test_iso_graph_requires_edge_reflection():
    loop = GRA.loop()
    point = GRA.obj([0], [])
    assert not GRA.is_isomorphic(loop, point)


def test_chain_colimit_of_prefix():
    from finbench.colimits import chain_colimit

    c2 = UN.cycles_sum([2])
    c23 = UN.cycles_sum([2, 3])
    c235 = UN.cycles_sum([2, 3, 5])
    links = [UN.mor(c2, c23, lambda x: x), UN.mor(c23, c235, lambda x: x)]
    cocone = chain_colimit(links)
    assert cocone.apex == c235
    assert cocone.legs[-1] == UN.identity(c235)
    assert cocone.legs[0] == UN.compose(links[1], links[0])


def test_chain_colimit_single_object():
    from finbench.colimits import chain_colimit

    X = FINSET.obj(range(2))
    cocone = chain_colimit([], objects=[X])
    assert cocone.apex == X and cocone.legs == (FINSET.identity(X),)


def test_split_quotients_of_finite_objects_are_finite():
    # sections s with r . s = id exhibit split quotients; all stay finite
    X = FINSET.obj(range(3))
    for r in FINSET.hom_set(X, FINSET.obj(range(2))):
        for s in FINSET.hom_set(FINSET.obj(range(2)), X):
            if FINSET.compose(r, s) == FINSET.identity(FINSET.obj(range(2))):
                assert r.cod.size <= X.size


def test_pair_through_chain_parallel():
    rng = random.Random(9)
    for _ in range(10):
        X = random_un_obj(rng, 5)
        if X.size < 2:
            continue
        a, b = rng.sample(list(X.carrier), 2)
        u, v = pair_through_chain(X, a, b)
        assert u.dom == v.dom and u.cod == v.cod == X
        assert u(0) == a and v(0) == b


def test_symbolic_subobjects_of_ray_windowed():
    # path segments with at most 4 vertices, anywhere inside the window
    from finbench.symbolic import RAY, fg_subobjects

    window = 10
    subs = fg_subobjects(RAY, bound=4, window=window)
    paths = [(M, m) for M, m in subs if M.size > 0]
    assert all(M.size <= 4 for M, _ in paths)
    lengths = {}
    for M, m in paths:
        lengths.setdefault(M.size - 1, 0)
        lengths[M.size - 1] += 1
    # one segment per start position: window - length of them
    assert lengths == {k: window - k for k in range(4)}


def test_symbolic_subobjects_of_cycle_family_bounded():
    from finbench.symbolic import CYCLE_FAMILY, fg_subobjects

    subs = fg_subobjects(CYCLE_FAMILY, bound=5, window=12)
    sizes = sorted(M.size for M, _ in subs)
    # empty, single cycles of sizes 2, 3, 5, and the sum 2+3
    assert sizes == [0, 2, 3, 5, 5]
