"""Orbit-finite nominal sets over a finite name pool.

A single orbit is presented as (support size n, subgroup S of the symmetric
group on n points): its elements are injective tuples t from n into the name
pool modulo t ~ t . sigma for sigma in S.  A nominal set is a finite list of
orbits.  All equivariance decisions run over a pool of size 2n+2, which is
the documented soundness boundary: any violation for elements of support at
most n is witnessed by a permutation moving at most 2n+2 names.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import elem_key
from .perms import (
    all_perms,
    cycle_type,
    is_subgroup,
    mulclose,
    subgroups_of_sym,
    transposition,
    transpositions,
)
from .symbolic import SymbolicObject

P_SUBSET_FAMILY = SymbolicObject("p_subset_family", "nom")


@dataclass(frozen=True)
class OrbitSpec:
    n: int
    gens: tuple = ()

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.n:
                raise ValueError("generator degree mismatch")

    @property
    def group(self):
        return _orbit_group(self)

    def canon_rep(self, t):
        return min((tuple(t[s[i]] for i in range(self.n)) for s in self.group),
                   default=tuple(t))

    def elements(self, pool: int):
        return _orbit_elements(self, pool)

    def act(self, pi, rep):
        """pi: permutation of the pool as a tuple."""
        return self.canon_rep(tuple(pi[v] for v in rep))

    def default_pool(self):
        return 2 * self.n + 2


@lru_cache(maxsize=None)
def _orbit_group(spec: OrbitSpec):
    if spec.n == 0:
        return frozenset({()})
    group = mulclose(spec.gens, spec.n)
    if not is_subgroup(group, spec.n):
        raise AssertionError("closure failed to produce a subgroup")
    return group


@lru_cache(maxsize=None)
def _orbit_elements(spec: OrbitSpec, pool: int):
    if spec.n > pool:
        raise ValueError("pool too small for the support size")
    reps = {
        spec.canon_rep(t)
        for t in itertools.permutations(range(pool), spec.n)
    }
    return tuple(sorted(reps, key=elem_key))


def pn_orbit(n: int) -> OrbitSpec:
    """The orbit of n-element name sets: full symmetric group on n points."""
    gens = tuple(transpositions(n)) if n >= 2 else ()
    return OrbitSpec(n, gens)


@dataclass(frozen=True)
class NominalSetSpec:
    orbits: tuple

    def max_support(self):
        return max((o.n for o in self.orbits), default=0)

    def default_pool(self):
        return 2 * self.max_support() + 2

    def elements(self, pool: int):
        return [
            (i, rep) for i, o in enumerate(self.orbits) for rep in o.elements(pool)
        ]

    def act(self, pi, elem):
        i, rep = elem
        return (i, self.orbits[i].act(pi, rep))

    @property
    def orbit_count(self):
        return len(self.orbits)


ONE = NominalSetSpec((OrbitSpec(0),))


def support(elem) -> frozenset:
    """Names occurring in the representative tuple; representative choice
    does not matter since the subgroup only permutes positions."""
    _, rep = elem
    return frozenset(rep)


def p_prefix(k: int) -> NominalSetSpec:
    """P_1 + ... + P_k."""
    return NominalSetSpec(tuple(pn_orbit(n) for n in range(1, k + 1)))


def one_plus(X: NominalSetSpec) -> NominalSetSpec:
    return NominalSetSpec((OrbitSpec(0),) + X.orbits)


# ---------------------------------------------------------------------------
# equivariant maps


def _extend_to_pool_perm(src, dst, pool):
    mapping = dict(zip(src, dst))
    rest_src = sorted(set(range(pool)) - set(src))
    rest_dst = sorted(set(range(pool)) - set(dst))
    mapping.update(zip(rest_src, rest_dst))
    return tuple(mapping[i] for i in range(pool))


def _base_rep(spec: OrbitSpec):
    return spec.canon_rep(tuple(range(spec.n)))


def _stabilizer_pool_perms(spec: OrbitSpec, rep, pool):
    """Pool permutations generating the stabilizer of the class [rep]:
    extensions of rep . sigma . rep^{-1} for sigma in the subgroup, plus
    transpositions away from the support."""
    out = []
    for sigma in spec.group:
        dst = tuple(rep[sigma[i]] for i in range(spec.n))
        out.append(_extend_to_pool_perm(rep, dst, pool))
    rest = sorted(set(range(pool)) - set(rep))
    for a, b in itertools.combinations(rest, 2):
        out.append(transposition(pool, a, b))
    return out


def orbit_map_candidates(dom_orbit: OrbitSpec, cod: NominalSetSpec, pool: int):
    """Elements of cod that can receive the base representative of the orbit:
    support contained in the base support and fixed by its stabilizer."""
    rep = _base_rep(dom_orbit)
    supp = set(rep)
    stab = _stabilizer_pool_perms(dom_orbit, rep, pool)
    found = []
    for elem in cod.elements(pool):
        if not support(elem) <= supp:
            continue
        if all(cod.act(pi, elem) == elem for pi in stab):
            found.append(elem)
    return found


@dataclass(frozen=True)
class NomMor:
    dom: NominalSetSpec
    cod: NominalSetSpec
    images: tuple  # per dom orbit: element of cod receiving the base rep
    pool: int

    def __post_init__(self):
        if len(self.images) != len(self.dom.orbits):
            raise ValueError("one image per orbit required")
        for spec, img in zip(self.dom.orbits, self.images):
            rep = _base_rep(spec)
            if not support(img) <= set(rep):
                raise ValueError("image support escapes the domain support")
            stab = _stabilizer_pool_perms(spec, rep, self.pool)
            if not all(self.cod.act(pi, img) == img for pi in stab):
                raise ValueError("image not fixed by the base stabilizer")

    def apply(self, elem):
        i, rep = elem
        base = _base_rep(self.dom.orbits[i])
        pi = _extend_to_pool_perm(base, rep, self.pool)
        return self.cod.act(pi, self.images[i])

    def as_dict(self):
        return {e: self.apply(e) for e in self.dom.elements(self.pool)}


def nom_identity(X: NominalSetSpec, pool=None) -> NomMor:
    pool = pool or X.default_pool()
    return NomMor(X, X, tuple((i, _base_rep(o)) for i, o in enumerate(X.orbits)), pool)


def nom_compose(g: NomMor, f: NomMor) -> NomMor:
    if f.cod != g.dom or f.pool != g.pool:
        raise ValueError("not composable")
    return NomMor(f.dom, g.cod, tuple(g.apply(img) for img in f.images), f.pool)


def all_equivariant_maps(dom: NominalSetSpec, cod: NominalSetSpec, pool=None):
    """Exhaustive enumeration: one candidate image per orbit, by the
    stabilizer criterion."""
    pool = pool or max(dom.default_pool(), cod.default_pool())
    per_orbit = [orbit_map_candidates(o, cod, pool) for o in dom.orbits]
    out = []
    for combo in itertools.product(*per_orbit):
        out.append(NomMor(dom, cod, tuple(combo), pool))
    return out


def equivariant_map_check(f: dict, dom: NominalSetSpec, cod: NominalSetSpec, pool: int) -> bool:
    """Explicit element map: true iff it commutes with all pool
    transpositions (generators suffice)."""
    if pool < 2 * max(dom.max_support(), cod.max_support()) + 2:
        raise ValueError("pool below the soundness boundary")
    elems = dom.elements(pool)
    if set(f) != set(elems):
        raise ValueError("map not total on the domain elements")
    for tau in transpositions(pool):
        pi = tau
        for e in elems:
            if f[dom.act(pi, e)] != cod.act(pi, f[e]):
                return False
    return True


# ---------------------------------------------------------------------------
# classification: subgroups, orbit isomorphism, the quotient correspondence


def subgroups_of_Sn(n: int):
    """Every subgroup of the symmetric group, each as a sorted tuple."""
    return [tuple(sorted(h, key=elem_key)) for h in subgroups_of_sym(n)]


def _group_invariant(spec: OrbitSpec):
    return (spec.n, len(spec.group), tuple(sorted(cycle_type(g) for g in spec.group)))


def orbit_iso_map(a: OrbitSpec, b: OrbitSpec, pool=None):
    """Equivariant bijection between pool realizations, or None.

    The map is propagated from a single seed image through all pool
    transpositions; candidate seeds share the base support (equivariant
    bijections preserve supports exactly)."""
    if _group_invariant(a) != _group_invariant(b):
        return None
    pool = pool or max(a.default_pool(), b.default_pool())
    els_a = a.elements(pool)
    els_b = b.elements(pool)
    if len(els_a) != len(els_b):
        return None
    e0 = els_a[0]
    taus = transpositions(pool)
    for cand in els_b:
        if frozenset(cand) != frozenset(e0):
            continue
        mapping = {e0: cand}
        stack = [e0]
        ok = True
        while stack and ok:
            e = stack.pop()
            for tau in taus:
                e2 = a.act(tau, e)
                img2 = b.act(tau, mapping[e])
                if e2 in mapping:
                    if mapping[e2] != img2:
                        ok = False
                        break
                else:
                    mapping[e2] = img2
                    stack.append(e2)
        if ok and len(mapping) == len(els_a) and len(set(mapping.values())) == len(els_b):
            return mapping
    return None


def single_orbit_enumerate(n: int):
    """One OrbitSpec per isomorphism class, deduplicated by explicit
    equivariant-bijection search (not by assuming conjugacy)."""
    if n > 4:
        raise ValueError("single-orbit enumeration supported for n <= 4")
    out = []
    for H in subgroups_of_Sn(n):
        spec = OrbitSpec(n, tuple(H))
        if not any(orbit_iso_map(spec, seen) is not None for seen in out):
            out.append(spec)
    return out


def equivalence_from_subgroup(S, n):
    """The equivariant equivalence t ~ t . sigma for sigma in S."""
    S = set(S)

    def eq(t, u):
        return any(tuple(t[s[i]] for i in range(n)) == tuple(u) for s in S)

    return eq


def subgroup_from_quotient(eq, n: int, pool=None):
    """Recover the subgroup from an equivariant, support-preserving
    equivalence on injective tuples; rejects non-equivariant input.

    Checking that the set of related pairs is closed under pool
    transpositions is complete for equivariance, and relating any base
    tuple across different supports falsifies support preservation.
    """
    pool = pool or 2 * n + 2
    tuples = list(itertools.permutations(range(pool), n))
    by_image = {}
    for t in tuples:
        by_image.setdefault(frozenset(t), []).append(t)
    # support preservation: representatives related only within their image
    reps = [group[0] for group in by_image.values()]
    for r in reps:
        for u in tuples:
            if eq(r, u) and frozenset(r) != frozenset(u):
                raise ValueError("equivalence does not preserve supports")
    # equivariance: related pairs stay related under every transposition
    taus = transpositions(pool)
    for group in by_image.values():
        for t, u in itertools.combinations_with_replacement(group, 2):
            if not eq(t, u):
                continue
            for tau in taus:
                t2 = tuple(tau[v] for v in t)
                u2 = tuple(tau[v] for v in u)
                if not eq(t2, u2):
                    raise ValueError("equivalence is not equivariant")
    t0 = tuple(range(n))
    S = [s for s in all_perms(n) if eq(tuple(t0[s[i]] for i in range(n)), t0)]
    if not is_subgroup(S, n):
        raise ValueError("recovered relation is not a subgroup")
    # one tuple suffices by equivariance; verify on all of them anyway
    for t in tuples:
        for s in S:
            if not eq(tuple(t[s[i]] for i in range(n)), t):
                raise AssertionError("subgroup criterion not uniform over tuples")
    # completeness: every related pair is a subgroup translate
    sset = set(S)
    for group in by_image.values():
        for t in group:
            for u in group:
                if eq(t, u):
                    if not any(
                        tuple(t[s[i]] for i in range(n)) == u for s in sset
                    ):
                        raise ValueError(
                            "equivalence relates pairs outside the subgroup orbit"
                        )
    return tuple(sorted(S, key=elem_key))


# ---------------------------------------------------------------------------
# hom existence from the n-subset orbits, and the counterexample functor


def hom_exists_Pn(n: int, X, pool=None) -> bool:
    """Equivariant map from the n-subset orbit into X exists iff some element
    can receive the base n-subset: support inside it and fixed by its setwise
    stabilizer."""
    if isinstance(X, SymbolicObject):
        if X.kind == "p_subset_family":
            return True  # the n-subset orbit itself receives the identity
        raise ValueError(f"no hom procedure for {X.kind}")
    if n > 5:
        # n = 5 is needed to certify persistence on the prefix chain
        raise ValueError("hom search supported for n <= 5")
    pool = pool or max(2 * n + 2, X.default_pool())
    return bool(orbit_map_candidates(pn_orbit(n), X, pool))


@dataclass
class NomFunctorValue:
    value: object  # NominalSetSpec or the symbolic family
    added_unit: bool
    witness_n: int | None
    bound: int


def nom_counterexample(X, n_bound: int = 4) -> NomFunctorValue:
    """1 + X when some n-subset orbit has no equivariant map into X (n
    searched up to the bound), else the terminal nominal set."""
    if isinstance(X, SymbolicObject):
        return NomFunctorValue(ONE, False, None, n_bound)
    for n in range(1, n_bound + 1):
        if not hom_exists_Pn(n, X):
            return NomFunctorValue(one_plus(X), True, n, n_bound)
    return NomFunctorValue(ONE, False, None, n_bound)


def nom_counterexample_mor(f: NomMor, n_bound: int = 4) -> NomMor:
    """Unit-plus-f when the codomain case adds the unit, else the unique map
    to the terminal value."""
    FX = nom_counterexample(f.dom, n_bound)
    FY = nom_counterexample(f.cod, n_bound)
    if FY.added_unit:
        if not FX.added_unit:
            raise AssertionError("domain case must add the unit as well")
        images = [(0, ())]
        for i, img in enumerate(f.images):
            j, rep = img
            images.append((j + 1, rep))
        return NomMor(FX.value, FY.value, tuple(images), f.pool)
    images = tuple((0, ()) for _ in FX.value.orbits)
    return NomMor(FX.value, FY.value, images, f.pool)


# ---------------------------------------------------------------------------
# support rigidity and the chain certificate


@dataclass
class RigidityReport:
    preserved: bool
    checked: int
    failures: tuple
    note: str


def support_rigidity_check(f: NomMor) -> RigidityReport:
    """Verify supp(f(Y)) = supp(Y) on every element over the pool.

    Equivariance alone forces supp(f(Y)) to contain supp(Y) once it is
    nonempty (transposition argument); combined with the general inclusion
    the supports agree, so no endomorphism can shrink supports and factor
    through an orbit-finite set of bounded support sizes.
    """
    failures = []
    count = 0
    for e in f.dom.elements(f.pool):
        count += 1
        if support(f.apply(e)) != support(e):
            failures.append(e)
    return RigidityReport(
        not failures,
        count,
        tuple(failures),
        "support-preserving endomorphisms rule out factorizations through "
        "orbit-finite sets with bounded support sizes",
    )


def p_chain_certificate(k: int, n_bound: int = 5):
    """Counterexample functor on the chain of subset-orbit prefixes.

    Returns the data of a certified non-finitarity check: orbit counts of the
    functor on the prefix at k and k+1 against the value on the full family.
    """
    from .functors import FinitarityCertificate
    from .colimits import FAIL

    sizes = {}
    for j in (k, k + 1):
        prefix = p_prefix(j)
        val = nom_counterexample(prefix, n_bound=max(n_bound, j + 1))
        if not val.added_unit:
            raise AssertionError("prefix unexpectedly admits all subset orbits")
        sizes[j] = val.value.orbit_count
    colimit_val = nom_counterexample(P_SUBSET_FAMILY)
    rhs = colimit_val.value.orbit_count
    still = sizes[k + 1] != rhs
    return FinitarityCertificate(
        "nom-counterexample",
        "p-subsets",
        k,
        sizes[k],
        rhs,
        FAIL if sizes[k] != rhs and still else "PASS(probe-limited)",
        persistence={
            "prefix_k1": k + 1,
            "lhs_size_k1": sizes[k + 1],
            "rhs_size_k1": rhs,
            "still_failing": still,
        },
        notes=("sizes are orbit counts",),
    )


# ---------------------------------------------------------------------------
# strictness construction for orbit-finite nominal sets


@dataclass
class NomStrictnessWitness:
    b: NomMor
    b_prime: NomMor
    f: NomMor

    def __post_init__(self):
        through = nom_compose(self.b_prime, nom_compose(self.f, self.b))
        if through.images != self.b.images:
            raise ValueError("strictness square does not commute")


def countable_strictness_witness(b: NomMor) -> NomStrictnessWitness:
    """Split the codomain into the image orbits plus the rest, fold the rest
    onto one orbit per isomorphism class, and verify b = b' . f . b."""
    A = b.cod
    pool = b.pool
    hit = sorted({img[0] for img in b.images})
    rest = [i for i in range(len(A.orbits)) if i not in hit]
    class_reps: list[int] = []
    fold_to: dict[int, tuple[int, dict]] = {}
    for i in rest:
        target = None
        for r in class_reps:
            m = orbit_iso_map(A.orbits[i], A.orbits[r], pool)
            if m is not None:
                target = (r, m)
                break
        if target is None:
            class_reps.append(i)
            fold_to[i] = (i, None)
        else:
            fold_to[i] = target
    keep = sorted(hit + class_reps)
    position = {orig: pos for pos, orig in enumerate(keep)}
    Bp = NominalSetSpec(tuple(A.orbits[i] for i in keep))
    bp = NomMor(Bp, A, tuple((i, _base_rep(A.orbits[i])) for i in keep), pool)
    f_images = []
    for i in range(len(A.orbits)):
        if i in position:
            f_images.append((position[i], _base_rep(A.orbits[i])))
        else:
            r, m = fold_to[i]
            f_images.append((position[r], m[_base_rep(A.orbits[i])]))
    f = NomMor(A, Bp, tuple(f_images), pool)
    return NomStrictnessWitness(b, bp, f)
