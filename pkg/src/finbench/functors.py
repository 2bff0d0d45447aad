"""Black-box functor handles, boundedness witness search, and finitarity
certificates for the counterexample endofunctors.

The two graph/unary counterexamples share one shape: send X to 1 + X when a
family of test objects admits no morphism into X, and to the terminal object
otherwise.  Both are finitely bounded yet fail to preserve the colimit of an
explicit chain, which the certificate pins down by comparing carrier sizes of
the finite prefix colimit against the value on the formal colimit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import Mor, Obj, category_of, lookup_category
from .cats import GRA, UN
from .colimits import FAIL, PASS, Cocone, chain_colimit, reflect_colimit_test
from .symbolic import (
    CYCLE_FAMILY,
    RAY,
    SymMor,
    SymbolicObject,
    fg_subobjects,
    primes_upto,
)


@dataclass
class FunctorHandle:
    """Functor between registered categories, given by callables.

    ``sym_obj`` evaluates the functor on registered symbolic objects (the
    counterexample functors collapse them to finite objects).
    """

    name: str
    source: str
    target: str
    obj_map: object
    mor_map: object
    sym_obj: object = None

    def on_obj(self, X):
        if isinstance(X, SymbolicObject):
            if self.sym_obj is None:
                raise ValueError(f"{self.name} has no symbolic evaluator")
            return self.sym_obj(X)
        return self.obj_map(X)

    def on_mor(self, f):
        return self.mor_map(f)


def identity_functor(cat_name: str) -> FunctorHandle:
    return FunctorHandle(
        f"identity:{cat_name}", cat_name, cat_name, lambda X: X, lambda f: f,
        sym_obj=lambda s: s,
    )


def check_functor_laws(F: FunctorHandle, composable_pairs) -> bool:
    """F(id) = id and F(g . f) = F(g) . F(f) on the supplied probe pairs."""
    src = lookup_category(F.source)
    tgt = lookup_category(F.target)
    seen_objs = set()
    for g, f in composable_pairs:
        for X in (f.dom, f.cod, g.cod):
            if X not in seen_objs:
                seen_objs.add(X)
                if F.on_mor(src.identity(X)) != tgt.identity(F.on_obj(X)):
                    return False
        lhs = F.on_mor(src.compose(g, f))
        rhs = tgt.compose(F.on_mor(g), F.on_mor(f))
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# the unary-algebra counterexample


def _un_missing_prime(X: Obj):
    """Least prime p with no hom from the p-cycle into X, or None.

    A cycle of length q maps into X iff X has a cycle of length dividing q,
    so for prime p only fixed points and p-cycles matter.  The search is
    bounded: only cycle lengths occurring in X can absorb primes.
    """
    lengths = UN.cycle_lengths(X)
    if 1 in lengths:
        return None
    for p in primes_upto(2 * max(lengths | {2}) + 3):
        if p not in lengths:
            return p
    raise AssertionError("prime search bound too small")


def un_counterexample() -> FunctorHandle:
    """Endofunctor of unary algebras: X maps to C1 + X when some prime cycle
    admits no hom into X, and to C1 otherwise.  Finitely bounded, not
    finitary."""
    c1 = UN.cycle(1)

    def on_obj(X):
        if _un_missing_prime(X) is None:
            return c1
        out, _ = UN.coproduct([c1, X])
        return out

    def case_added(X):
        return _un_missing_prime(X) is not None

    def on_mor(f):
        FX, FY = on_obj(f.dom), on_obj(f.cod)
        if case_added(f.cod):
            # a hom X -> Y forces the added-unit case for X as well
            mapping = {}
            for x in FX.carrier:
                i, v = x
                mapping[x] = (0, v) if i == 0 else (1, f(v))
            return UN.mor(FX, FY, mapping)
        return UN.mor(FX, FY, lambda x: c1.carrier[0])

    def sym_obj(sobj):
        if sobj.kind != "cycle_family":
            raise ValueError("unary counterexample evaluates cycle families only")
        # every prime cycle admits a hom into the family, so the value is C1
        return c1

    return FunctorHandle("un-counterexample", "un", "un", on_obj, on_mor, sym_obj)


# ---------------------------------------------------------------------------
# the graph counterexample


def graph_counterexample() -> FunctorHandle:
    """Endofunctor of graphs: X maps to 1 + X when X has no cycle and no
    infinite path (for finite X both reduce to acyclicity), else to the
    terminal loop graph."""
    one = GRA.loop()

    def acyclic(X):
        return not GRA.has_cycle(X)

    def on_obj(X):
        if acyclic(X):
            out, _ = GRA.coproduct([one, X])
            return out
        return one

    def on_mor(f):
        FX, FY = on_obj(f.dom), on_obj(f.cod)
        if acyclic(f.cod):
            mapping = {}
            for x in FX.carrier:
                i, v = x
                mapping[x] = (0, v) if i == 0 else (1, f(v))
            return GRA.mor(FX, FY, mapping)
        return GRA.mor(FX, FY, lambda x: 0)

    def sym_obj(sobj):
        if sobj.kind in ("ray", "loop_ray"):
            # an infinite path (and for loop_ray also a cycle) is present
            return one
        raise ValueError("graph counterexample evaluates ray kinds only")

    return FunctorHandle("graph-counterexample", "gra", "gra", on_obj, on_mor, sym_obj)


# ---------------------------------------------------------------------------
# hom functors into finite sets


def hom_functor(cat_name: str, A: Obj) -> FunctorHandle:
    """Covariant hom-functor from a finite object, landing in finite sets."""
    if isinstance(A, SymbolicObject):
        raise TypeError("hom functors of symbolic objects are out of probe scope")
    src = lookup_category(cat_name)
    finset = lookup_category("finset")

    def on_obj(X):
        homs = src.hom_set(A, X)
        return finset.obj(h.mapping for h in homs)

    def on_mor(f):
        FX = on_obj(f.dom)
        FY = on_obj(f.cod)

        def post(h_mapping):
            h = Mor(A, f.dom, h_mapping)
            return src.compose(f, h).mapping

        return finset.mor(FX, FY, post)

    return FunctorHandle(f"hom({cat_name},{A.size})", cat_name, "finset", on_obj, on_mor)


# ---------------------------------------------------------------------------
# boundedness witnesses


@dataclass
class BoundednessWitness:
    m0: Mor
    m: object  # mono into A (Mor or SymMor)
    mediating: Mor

    def triangle_commutes(self, Fm: Mor) -> bool:
        tgt = category_of(self.m0.dom)
        return tgt.compose(Fm, self.mediating) == self.m0


@dataclass
class Exhaustion:
    bound: int
    detail: str


def subobjects_of(A, bound):
    """Uniform fg-subobject enumeration for finite and symbolic objects."""
    if isinstance(A, SymbolicObject):
        return fg_subobjects(A, bound)
    cat = category_of(A)
    return [(m.dom, m) for m in cat.subobjects_fg(A, bound)]


def finitely_bounded_witness(F: FunctorHandle, A, m0: Mor, bound: int):
    """Search an fg subobject m of A whose F-image absorbs m0.

    Returns a BoundednessWitness (triangle verified on carriers) or an
    Exhaustion carrying the bound reached.
    """
    tgt = lookup_category(F.target)
    FA = F.on_obj(A)
    if m0.cod != FA:
        raise ValueError("m0 must land in F(A)")
    candidates = sorted(subobjects_of(A, bound), key=lambda pair: pair[0].size)
    for M, m in candidates:
        Fm = F.on_mor(m) if not isinstance(m, SymMor) else _apply_to_symmono(F, m)
        FM = Fm.dom
        mediating = _mediate(m0, Fm)
        if mediating is not None:
            wit = BoundednessWitness(m0, m, mediating)
            if not wit.triangle_commutes(Fm):
                raise AssertionError("witness triangle failed verification")
            return wit
    return Exhaustion(bound, f"no fg subobject of size <= {bound} absorbs m0")


def _apply_to_symmono(F: FunctorHandle, m: SymMor) -> Mor:
    """F on a mono with symbolic codomain; the counterexample functors send
    the registered symbolic objects to finite values."""
    FM = F.on_obj(m.dom)
    FA = F.on_obj(m.cod)
    if FA.size == 1:
        tgt = lookup_category(F.target)
        return tgt.mor(FM, FA, lambda x: FA.carrier[0])
    raise ValueError("symbolic mono with non-collapsing functor value")


def _mediate(m0: Mor, Fm: Mor):
    """All maps t with Fm . t = m0 come from per-element fibers; return the
    first that is a morphism."""
    fibers = []
    look = dict(zip(Fm.dom.carrier, Fm.mapping))
    for x in m0.dom.carrier:
        want = m0(x)
        fib = [d for d in Fm.dom.carrier if look[d] == want]
        if not fib:
            return None
        fibers.append(fib)
    for combo in itertools.product(*fibers):
        try:
            return Mor(m0.dom, Fm.dom, tuple(combo))
        except ValueError:
            continue
    return None


# ---------------------------------------------------------------------------
# finitarity certificates on chains with a formal colimit


@dataclass
class FinitarityCertificate:
    functor: str
    chain: str
    prefix_k: int
    lhs_size: int
    rhs_size: int
    verdict: str
    persistence: dict = field(default_factory=dict)
    notes: tuple = ()


def _obj_size(X):
    return X.size if isinstance(X, Obj) else None


def finitarity_certificate(
    F: FunctorHandle,
    cocone_k: Cocone,
    cocone_k1: Cocone,
    chain_name: str = "chain",
    probes=None,
) -> FinitarityCertificate:
    """Compare the colimit of the F-image prefix with F of the formal colimit.

    The prefix colimit of a finite chain is its last object, so the
    comparison morphism is F of the last leg.  A certified FAIL requires the
    obstruction (non-invertible comparison) to persist when the prefix grows
    by one; a symbolic F-value downgrades the check to a probe-limited
    reflection test.
    """
    k = len(cocone_k.objects)  # prefix stages
    F_apex = F.on_obj(cocone_k.apex)
    lhs = F.on_obj(cocone_k.last)
    notes = []

    if isinstance(F_apex, SymbolicObject):
        image = Cocone(
            tuple(F.on_obj(D) for D in cocone_k.objects),
            tuple(F.on_mor(ln) for ln in cocone_k.links),
            F_apex,
            tuple(_push_leg(F, leg) for leg in cocone_k.legs),
        )
        probe_objs = probes if probes is not None else list(image.objects)
        verdict = reflect_colimit_test(image, probe_objs)
        return FinitarityCertificate(
            F.name, chain_name, k, lhs.size, -1, verdict.status,
            notes=tuple(verdict.notes) + ("symbolic functor value: reflection probe only",),
        )

    comparison = _comparison_mor(F, cocone_k)
    invertible = category_of(lhs).is_iso(comparison) if comparison is not None else False
    if invertible:
        return FinitarityCertificate(
            F.name, chain_name, k, lhs.size, F_apex.size, PASS,
            notes=("comparison invertible at this prefix",),
        )
    lhs1 = F.on_obj(cocone_k1.last)
    comparison1 = _comparison_mor(F, cocone_k1)
    invertible1 = category_of(lhs1).is_iso(comparison1) if comparison1 is not None else False
    persistence = {
        "prefix_k1": len(cocone_k1.objects),
        "lhs_size_k1": lhs1.size,
        "rhs_size_k1": F.on_obj(cocone_k1.apex).size,
        "still_failing": not invertible1,
    }
    verdict = FAIL if not invertible1 else PASS
    if invertible1:
        notes.append("obstruction vanished at the longer prefix")
    return FinitarityCertificate(
        F.name, chain_name, k, lhs.size, F_apex.size, verdict,
        persistence=persistence, notes=tuple(notes),
    )


def _push_leg(F: FunctorHandle, leg):
    if isinstance(leg, SymMor) and isinstance(F.on_obj(leg.cod), SymbolicObject):
        if F.name.startswith("identity"):
            return leg
    raise ValueError("no symbolic leg transport for this functor")


def _comparison_mor(F: FunctorHandle, cocone: Cocone):
    """F applied to the last leg, as the comparison out of the prefix colimit."""
    last_leg = cocone.legs[-1]
    if isinstance(last_leg, SymMor):
        return _apply_to_symmono(F, last_leg)
    return F.on_mor(last_leg)


# ---------------------------------------------------------------------------
# standard chains


def prime_cycle_chain(k: int) -> Cocone:
    """C_2 into C_2+C_3 into ... (k objects) with the cycle family as formal
    colimit."""
    ps = primes_upto(100)[:k]
    objects = [UN.cycles_sum(ps[: i + 1]) for i in range(k)]
    links = [
        UN.mor(objects[i], objects[i + 1], lambda x: x) for i in range(k - 1)
    ]
    legs = [SymMor(D, CYCLE_FAMILY, tuple(D.carrier)) for D in objects]
    return chain_colimit(links, objects=objects, apex=CYCLE_FAMILY, legs=legs)


def path_chain(k: int) -> Cocone:
    """P_1 into P_2 into ... (k objects) with the ray as formal colimit."""
    objects = [GRA.path(i + 1) for i in range(k)]
    links = [
        GRA.mor(objects[i], objects[i + 1], lambda v: v) for i in range(k - 1)
    ]
    legs = [SymMor(D, RAY, tuple(D.carrier)) for D in objects]
    return chain_colimit(links, objects=objects, apex=RAY, legs=legs)
