"""Concrete computable categories: finite sets, directed graphs, unary
algebras, presheaves on a finite groupoid, and F_q vector spaces.

Objects are finite carrier presentations (see core.Obj); each category wires
its structure into the generic hom/factorization/colimit machinery.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    Category,
    Mor,
    Obj,
    canon,
    canon_pairs,
    elem_key,
    register_category,
)
from .perms import compose_perm, identity_perm


# ---------------------------------------------------------------------------
# finite sets


class FinSetCat(Category):
    name = "finset"

    def obj(self, elems) -> Obj:
        return Obj(self.name, canon(elems))

    def std(self, k: int) -> Obj:
        return self.obj(range(k))

    def image_obj(self, f):
        return Obj(self.name, f.image_elems())

    def initial(self):
        return self.obj(())

    def terminal(self):
        return self.obj((0,))

    def coproduct(self, objs):
        carrier = []
        for i, X in enumerate(objs):
            carrier.extend((i, x) for x in X.carrier)
        out = Obj(self.name, canon(carrier))
        injections = [
            Mor(X, out, tuple((i, x) for x in X.carrier)) for i, X in enumerate(objs)
        ]
        return out, injections

    def quotient_obj(self, X, rep):
        return Obj(self.name, canon(rep.values()))

    def kernel_pair(self, f):
        pairs = [
            (x, y) for x in f.dom.carrier for y in f.dom.carrier if f(x) == f(y)
        ]
        P = Obj(self.name, canon(pairs))
        p1 = Mor(P, f.dom, tuple(p[0] for p in P.carrier))
        p2 = Mor(P, f.dom, tuple(p[1] for p in P.carrier))
        return p1, p2

    def subobjects_fg(self, X, bound=None):
        monos = []
        n = X.size
        limit = n if bound is None else min(bound, n)
        for k in range(limit + 1):
            for sub in itertools.combinations(X.carrier, k):
                monos.append(self.sub_mono(X, self.obj(sub)))
        return monos


FINSET = register_category(FinSetCat())


# ---------------------------------------------------------------------------
# directed graphs (vertex set with an edge relation; loops allowed)


class GraphCat(Category):
    name = "gra"

    def obj(self, vertices, edges) -> Obj:
        vs = canon(vertices)
        es = canon_pairs(tuple(e) for e in edges)
        vset = set(vs)
        for u, v in es:
            if u not in vset or v not in vset:
                raise ValueError(f"edge {(u, v)} outside vertex set")
        return Obj(self.name, vs, ("edges", es))

    def edges(self, X):
        return X.structure[1]

    def path(self, k: int) -> Obj:
        """Directed path on vertices 0..k with edges i -> i+1."""
        return self.obj(range(k + 1), [(i, i + 1) for i in range(k)])

    def loop(self) -> Obj:
        return self.obj([0], [(0, 0)])

    def preserves_structure(self, f):
        target = set(self.edges(f.cod))
        return all((f(u), f(v)) in target for u, v in self.edges(f.dom))

    def relations_ok(self, X, Y, assign):
        target = set(self.edges(Y))
        for u, v in self.edges(X):
            if u in assign and v in assign:
                if (assign[u], assign[v]) not in target:
                    return False
        return True

    def iso_invariant(self, X):
        es = self.edges(X)
        outd = {v: 0 for v in X.carrier}
        ind = {v: 0 for v in X.carrier}
        for u, v in es:
            outd[u] += 1
            ind[v] += 1
        return (X.size, len(es), tuple(sorted((outd[v], ind[v]) for v in X.carrier)))

    def is_iso(self, f):
        if not (f.is_injective() and f.is_surjective()):
            return False
        # bijective graph hom is iso only when the inverse preserves edges
        try:
            self.inverse(f)
        except ValueError:
            return False
        return True

    def is_strong_epi(self, f):
        if not f.is_surjective():
            return False
        image_edges = {(f(u), f(v)) for u, v in self.edges(f.dom)}
        return image_edges == set(self.edges(f.cod))

    def image_obj(self, f):
        # image edges are f-images of edges, not the induced relation
        return self.obj(f.mapping, [(f(u), f(v)) for u, v in self.edges(f.dom)])

    def initial(self):
        return self.obj((), ())

    def terminal(self):
        return self.loop()

    def coproduct(self, objs):
        vertices, edges = [], []
        for i, X in enumerate(objs):
            vertices.extend((i, v) for v in X.carrier)
            edges.extend(((i, u), (i, v)) for u, v in self.edges(X))
        out = self.obj(vertices, edges)
        injections = [
            Mor(X, out, tuple((i, v) for v in X.carrier)) for i, X in enumerate(objs)
        ]
        return out, injections

    def quotient_obj(self, X, rep):
        return self.obj(
            canon(rep.values()), [(rep[u], rep[v]) for u, v in self.edges(X)]
        )

    def kernel_pair(self, f):
        verts = [
            (x, y) for x in f.dom.carrier for y in f.dom.carrier if f(x) == f(y)
        ]
        es = set(self.edges(f.dom))
        edges = [
            ((u1, u2), (v1, v2))
            for (u1, u2) in verts
            for (v1, v2) in verts
            if (u1, v1) in es and (u2, v2) in es
        ]
        P = self.obj(verts, edges)
        p1 = Mor(P, f.dom, tuple(p[0] for p in P.carrier))
        p2 = Mor(P, f.dom, tuple(p[1] for p in P.carrier))
        return p1, p2

    def subobjects_fg(self, X, bound=None):
        monos = []
        limit = X.size if bound is None else min(bound, X.size)
        all_edges = self.edges(X)
        for k in range(limit + 1):
            for vs in itertools.combinations(X.carrier, k):
                vset = set(vs)
                avail = [e for e in all_edges if e[0] in vset and e[1] in vset]
                for r in range(len(avail) + 1):
                    for es in itertools.combinations(avail, r):
                        monos.append(self.sub_mono(X, self.obj(vs, es)))
        return monos

    def has_cycle(self, X) -> bool:
        """Directed cycle detection; a finite graph has an infinite path iff
        it has a cycle."""
        adj = {v: [] for v in X.carrier}
        for u, v in self.edges(X):
            adj[u].append(v)
        WHITE, GREY, BLACK = 0, 1, 2
        state = {v: WHITE for v in X.carrier}

        def visit(v):
            state[v] = GREY
            for w in adj[v]:
                if state[w] == GREY:
                    return True
                if state[w] == WHITE and visit(w):
                    return True
            state[v] = BLACK
            return False

        return any(state[v] == WHITE and visit(v) for v in X.carrier)


GRA = register_category(GraphCat())


# ---------------------------------------------------------------------------
# unary algebras (one total unary operation)


class UnCat(Category):
    name = "un"

    def obj(self, elems, op) -> Obj:
        carrier = canon(elems)
        if callable(op):
            op = {x: op(x) for x in carrier}
        cset = set(carrier)
        for x in carrier:
            if x not in op or op[x] not in cset:
                raise ValueError("operation not total on carrier")
        pairs = canon_pairs((x, op[x]) for x in carrier)
        return Obj(self.name, carrier, ("op", pairs))

    def op(self, X, x):
        return _un_op_map(X)[x]

    def cycle(self, p: int) -> Obj:
        """Algebra on p elements whose operation is a single p-cycle."""
        return self.obj([(p, i) for i in range(p)], lambda e: (e[0], (e[1] + 1) % p))

    def cycles_sum(self, ps) -> Obj:
        """Disjoint union of cycles, kept flat so prefix inclusions are monos."""
        ps = list(ps)
        if len(set(ps)) != len(ps):
            raise ValueError("cycle lengths must be distinct")
        elems = [(p, i) for p in ps for i in range(p)]
        return self.obj(elems, lambda e: (e[0], (e[1] + 1) % e[0]))

    def preserves_structure(self, f):
        return all(f(self.op(f.dom, x)) == self.op(f.cod, f(x)) for x in f.dom.carrier)

    def op_successors(self, X, x):
        return (("op", self.op(X, x)),)

    def op_apply(self, Y, op_id, y):
        return self.op(Y, y)

    def iso_invariant(self, X):
        return (X.size, tuple(sorted(self.cycle_lengths(X))))

    def image_obj(self, f):
        elems = f.image_elems()
        return self.obj(elems, {x: self.op(f.cod, x) for x in elems})

    def initial(self):
        return self.obj((), {})

    def terminal(self):
        return self.cycle(1)

    def coproduct(self, objs):
        elems = []
        for i, X in enumerate(objs):
            elems.extend((i, x) for x in X.carrier)
        ops = {}
        for i, X in enumerate(objs):
            for x in X.carrier:
                ops[(i, x)] = (i, self.op(X, x))
        out = self.obj(elems, ops)
        injections = [
            Mor(X, out, tuple((i, x) for x in X.carrier)) for i, X in enumerate(objs)
        ]
        return out, injections

    def quotient_obj(self, X, rep):
        return self.obj(canon(rep.values()), {rep[x]: rep[self.op(X, x)] for x in X.carrier})

    def kernel_pair(self, f):
        pairs = [
            (x, y) for x in f.dom.carrier for y in f.dom.carrier if f(x) == f(y)
        ]
        P = self.obj(pairs, lambda e: (self.op(f.dom, e[0]), self.op(f.dom, e[1])))
        p1 = Mor(P, f.dom, tuple(p[0] for p in P.carrier))
        p2 = Mor(P, f.dom, tuple(p[1] for p in P.carrier))
        return p1, p2

    def subobjects_fg(self, X, bound=None):
        """Subalgebras = subsets closed under the operation."""
        monos = []
        limit = X.size if bound is None else min(bound, X.size)
        for k in range(limit + 1):
            for sub in itertools.combinations(X.carrier, k):
                sset = set(sub)
                if all(self.op(X, x) in sset for x in sub):
                    monos.append(
                        self.sub_mono(X, self.obj(sub, {x: self.op(X, x) for x in sub}))
                    )
        return monos

    def cycle_lengths(self, X):
        """Lengths of the operation's cycles (every finite orbit ends in one)."""
        lengths = set()
        for x in X.carrier:
            seen = {}
            cur, steps = x, 0
            while cur not in seen:
                seen[cur] = steps
                cur = self.op(X, cur)
                steps += 1
            lengths.add(steps - seen[cur])
        return lengths

    def has_fixed_point(self, X):
        return any(self.op(X, x) == x for x in X.carrier)


UN = register_category(UnCat())


@lru_cache(maxsize=None)
def _un_op_map(X: Obj):
    return dict(X.structure[1])


# ---------------------------------------------------------------------------
# presheaves on a finite groupoid, presented as S-sorted unary algebras


@dataclass(frozen=True)
class FiniteGroupoid:
    """Finite groupoid: sorts, morphisms (name, dom, cod), composition table.

    Presheaves are encoded as covariant functors on the groupoid (equivalent
    to presheaves, since every morphism is invertible): one carrier per sort
    plus one unary operation per groupoid morphism satisfying
    op_g(op_f(x)) = op_{g o f}(x) and op_id(x) = x.
    """

    name: str
    sorts: tuple
    mors: tuple  # (mor_name, dom_sort, cod_sort)
    comp: tuple  # ((g_name, f_name), h_name) with h = g o f
    ids: tuple  # (sort, mor_name)

    def __post_init__(self):
        comp = dict(self.comp)
        info = {m: (d, c) for m, d, c in self.mors}
        idm = dict(self.ids)
        for m, d, c in self.mors:
            if comp[(m, idm[d])] != m or comp[(idm[c], m)] != m:
                raise ValueError("identity law fails")
        for g, gd, gc in self.mors:
            for f, fd, fc in self.mors:
                if fc != gd:
                    continue
                h = comp[(g, f)]
                hd, hc = info[h]
                if (hd, hc) != (fd, gc):
                    raise ValueError("composition types broken")
        for m, d, c in self.mors:
            if not any(
                info[n] == (c, d) and comp[(n, m)] == idm[d] and comp[(m, n)] == idm[c]
                for n, _, _ in self.mors
            ):
                raise ValueError(f"no inverse for {m}")

    def compose_names(self, g, f):
        return dict(self.comp)[(g, f)]

    def mor_info(self):
        return {m: (d, c) for m, d, c in self.mors}

    def identity_name(self, sort):
        return dict(self.ids)[sort]


def group_groupoid(name, elements) -> FiniteGroupoid:
    """One-sorted groupoid from a permutation group (closure assumed)."""
    els = sorted(set(elements), key=elem_key)
    n = len(els[0])
    mors = tuple((g, "*", "*") for g in els)
    comp = tuple((((g, f), compose_perm(g, f))) for g in els for f in els)
    return FiniteGroupoid(name, ("*",), mors, comp, (("*", identity_perm(n)),))


def two_object_iso_groupoid(name="pairgpd") -> FiniteGroupoid:
    """Connected groupoid on two sorts with trivial vertex groups."""
    mors = (("ia", "a", "a"), ("ib", "b", "b"), ("u", "a", "b"), ("v", "b", "a"))
    comp = (
        (("ia", "ia"), "ia"),
        (("ib", "ib"), "ib"),
        (("u", "ia"), "u"),
        (("ib", "u"), "u"),
        (("v", "ib"), "v"),
        (("ia", "v"), "v"),
        (("v", "u"), "ia"),
        (("u", "v"), "ib"),
    )
    return FiniteGroupoid(name, ("a", "b"), mors, comp, (("a", "ia"), ("b", "ib")))


class PresheafCat(Category):
    """Presheaves on a finite groupoid; carrier elements are (sort, value)."""

    def __init__(self, gpd: FiniteGroupoid):
        self.gpd = gpd
        self.name = f"psh({gpd.name})"
        self._info = gpd.mor_info()

    def obj(self, carriers: dict, ops: dict) -> Obj:
        """carriers: sort -> values; ops: mor_name -> {value: value}."""
        carrier = canon((s, v) for s, vs in carriers.items() for v in vs)
        tagged_ops = []
        for m, d, c in self.gpd.mors:
            table = ops.get(m, {})
            pairs = []
            for s, v in carrier:
                if s != d:
                    continue
                if v not in table:
                    raise ValueError(f"operation {m} not total")
                w = table[v]
                if (c, w) not in set(carrier):
                    raise ValueError(f"operation {m} leaves the carrier")
                pairs.append(((d, v), (c, w)))
            tagged_ops.append((m, canon_pairs(pairs)))
        X = Obj(self.name, carrier, ("ops", tuple(sorted(tagged_ops, key=elem_key))))
        self._validate(X)
        return X

    def _validate(self, X):
        idm = dict(self.gpd.ids)
        for s, v in X.carrier:
            if self.op(X, idm[s], (s, v)) != (s, v):
                raise ValueError("identity operation is not the identity")
        for g, gd, gc in self.gpd.mors:
            for f, fd, fc in self.gpd.mors:
                if fc != gd:
                    continue
                h = self.gpd.compose_names(g, f)
                for x in X.carrier:
                    if x[0] != fd:
                        continue
                    if self.op(X, g, self.op(X, f, x)) != self.op(X, h, x):
                        raise ValueError("composition equation fails")

    def op(self, X, mor_name, x):
        return _psh_op_map(X, mor_name).get(x)

    def sort_of(self, x):
        return x[0]

    def preserves_structure(self, f):
        for x in f.dom.carrier:
            if self.sort_of(f(x)) != self.sort_of(x):
                return False
        for m, d, c in self.gpd.mors:
            for x in f.dom.carrier:
                if x[0] != d:
                    continue
                if f(self.op(f.dom, m, x)) != self.op(f.cod, m, f(x)):
                    return False
        return True

    def candidate_targets(self, X, x, Y):
        return [y for y in Y.carrier if y[0] == x[0]]

    def op_successors(self, X, x):
        return tuple(
            (m, self.op(X, m, x)) for m, d, c in self.gpd.mors if x[0] == d
        )

    def op_apply(self, Y, op_id, y):
        return self.op(Y, op_id, y)

    def iso_invariant(self, X):
        per_sort = {s: 0 for s in self.gpd.sorts}
        for s, _ in X.carrier:
            per_sort[s] += 1
        return (X.size, tuple(sorted(per_sort.items())))

    def _obj_from_tagged(self, elems, op_of):
        carriers = {}
        for s, v in elems:
            carriers.setdefault(s, []).append(v)
        ops = {}
        for m, d, c in self.gpd.mors:
            ops[m] = {v: op_of(m, (s, v))[1] for s, v in elems if s == d}
        return self.obj(carriers, ops)

    def image_obj(self, f):
        elems = f.image_elems()
        return self._obj_from_tagged(elems, lambda m, x: self.op(f.cod, m, x))

    def initial(self):
        return self.obj({s: [] for s in self.gpd.sorts}, {})

    def terminal(self):
        carriers = {s: [0] for s in self.gpd.sorts}
        ops = {m: {0: 0} for m, _, _ in self.gpd.mors}
        return self.obj(carriers, ops)

    def coproduct(self, objs):
        elems = []
        for i, X in enumerate(objs):
            elems.extend((s, (i, v)) for s, v in X.carrier)
        carriers = {}
        for s, v in elems:
            carriers.setdefault(s, []).append(v)
        ops = {}
        for m, d, c in self.gpd.mors:
            table = {}
            for i, X in enumerate(objs):
                for s, v in X.carrier:
                    if s != d:
                        continue
                    _, w = self.op(X, m, (s, v))
                    table[(i, v)] = (i, w)
            ops[m] = table
        out = self.obj(carriers, ops)
        injections = [
            Mor(X, out, tuple((s, (i, v)) for s, v in X.carrier))
            for i, X in enumerate(objs)
        ]
        return out, injections

    def quotient_obj(self, X, rep):
        elems = canon(rep.values())
        return self._obj_from_tagged(elems, lambda m, x: rep[self.op(X, m, x)])

    def kernel_pair(self, f):
        pairs = [
            (x[0], (x[1], y[1]))
            for x in f.dom.carrier
            for y in f.dom.carrier
            if x[0] == y[0] and f(x) == f(y)
        ]

        def op_of(m, e):
            s, (v, w) = e
            _, v2 = self.op(f.dom, m, (s, v))
            c, w2 = self.op(f.dom, m, (s, w))
            return (c, (v2, w2))

        P = self._obj_from_tagged(pairs, op_of)
        p1 = Mor(P, f.dom, tuple((s, vw[0]) for s, vw in P.carrier))
        p2 = Mor(P, f.dom, tuple((s, vw[1]) for s, vw in P.carrier))
        return p1, p2

    def subobjects_fg(self, X, bound=None):
        monos = []
        limit = X.size if bound is None else min(bound, X.size)
        for k in range(limit + 1):
            for sub in itertools.combinations(X.carrier, k):
                sset = set(sub)
                if all(
                    self.op(X, m, x) in sset
                    for x in sub
                    for m, d, _ in self.gpd.mors
                    if x[0] == d
                ):
                    monos.append(
                        self.sub_mono(
                            X,
                            self._obj_from_tagged(sub, lambda m, x: self.op(X, m, x)),
                        )
                    )
        return monos

    def generated_subalgebra(self, X, x):
        """Closure of {x} under all operations."""
        seen = {x}
        frontier = [x]
        while frontier:
            a = frontier.pop()
            for m, d, _ in self.gpd.mors:
                if a[0] != d:
                    continue
                b = self.op(X, m, a)
                if b not in seen:
                    seen.add(b)
                    frontier.append(b)
        return self._obj_from_tagged(canon(seen), lambda m, e: self.op(X, m, e))


@lru_cache(maxsize=None)
def _psh_op_map(X: Obj, mor_name):
    for m, pairs in X.structure[1]:
        if m == mor_name:
            return dict(pairs)
    raise KeyError(mor_name)


_PSH_CACHE: dict[str, PresheafCat] = {}


def presheaf_cat(gpd: FiniteGroupoid) -> PresheafCat:
    cat = _PSH_CACHE.get(gpd.name)
    if cat is None:
        cat = PresheafCat(gpd)
        _PSH_CACHE[gpd.name] = cat
        register_category(cat)
    return cat


# standard acting groups

TRIVIAL_GPD = group_groupoid("triv", [(0,)])
Z2_GPD = group_groupoid("z2", [(0, 1), (1, 0)])
Z3_GPD = group_groupoid("z3", [(0, 1, 2), (1, 2, 0), (2, 0, 1)])
S3_GPD = group_groupoid("s3", list(itertools.permutations(range(3))))


def gset_cat(gpd) -> PresheafCat:
    return presheaf_cat(gpd)


def group_elements(gpd: FiniteGroupoid):
    return [m for m, _, _ in gpd.mors]


def gset_free_orbit(cat: PresheafCat, tag=0) -> Obj:
    """Regular action of a one-sorted groupoid on itself."""
    els = group_elements(cat.gpd)
    ops = {g: {(tag, h): (tag, compose_perm(g, h)) for h in els} for g in els}
    return cat.obj({"*": [(tag, h) for h in els]}, ops)


def gset_fixed_point(cat: PresheafCat, tag=0) -> Obj:
    els = group_elements(cat.gpd)
    ops = {g: {(tag, "pt"): (tag, "pt")} for g in els}
    return cat.obj({"*": [(tag, "pt")]}, ops)


def gset_from_cosets(cat: PresheafCat, subgroup, tag=0) -> Obj:
    """Left translation action on left cosets of the given subgroup."""
    els = group_elements(cat.gpd)
    sub = set(subgroup)
    cosets = {frozenset(compose_perm(x, h) for h in sub) for x in els}
    ops = {
        g: {
            (tag, c): (tag, frozenset(compose_perm(g, x) for x in c)) for c in cosets
        }
        for g in els
    }
    return cat.obj({"*": [(tag, c) for c in cosets]}, ops)


# ---------------------------------------------------------------------------
# vector spaces over a prime field, presented by dimension


class VecCat(Category):
    """F_q vector spaces; objects are full coordinate spaces, with vectors as
    the carrier so that the generic machinery applies.  Subspaces are
    re-presented as standard spaces through an explicit basis embedding."""

    def __init__(self, q: int):
        if q not in (2, 3):
            raise ValueError("supported field orders: 2, 3")
        self.q = q
        self.name = f"vec{q}"

    def obj(self, dim: int) -> Obj:
        carrier = canon(itertools.product(range(self.q), repeat=dim))
        return Obj(self.name, carrier, ("q", self.q, "dim", dim))

    def dim(self, X):
        return X.structure[3]

    def add(self, u, v):
        return tuple((a + b) % self.q for a, b in zip(u, v))

    def scale(self, c, u):
        return tuple((c * a) % self.q for a in u)

    def zero(self, dim):
        return (0,) * dim

    def preserves_structure(self, f):
        dom = f.dom.carrier
        for u in dom:
            for v in dom:
                if f(self.add(u, v)) != self.add(f(u), f(v)):
                    return False
        for c in range(self.q):
            for u in dom:
                if f(self.scale(c, u)) != self.scale(c, f(u)):
                    return False
        return True

    def basis_vectors(self, dim):
        return [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]

    def from_matrix(self, dom: Obj, cod: Obj, cols) -> Mor:
        """Linear map sending the i-th standard basis vector to cols[i]."""
        def apply(u):
            out = self.zero(self.dim(cod))
            for c, col in zip(u, cols):
                out = self.add(out, self.scale(c, col))
            return out

        return self.mor(dom, cod, apply)

    def hom_set(self, X, Y):
        n, m = self.dim(X), self.dim(Y)
        homs = []
        for cols in itertools.product(Y.carrier, repeat=n):
            homs.append(self.from_matrix(X, Y, cols))
        return homs

    def span(self, vectors, dim):
        """All vectors in the span (q^rank of them)."""
        basis = self.reduce_basis(vectors, dim)
        out = {self.zero(dim)}
        for b in basis:
            out = {self.add(u, self.scale(c, b)) for u in out for c in range(self.q)}
        return canon(out)

    def reduce_basis(self, vectors, dim):
        """Row reduction over F_q; returns an echelon basis."""
        basis = []
        pivots = []
        for v in vectors:
            v = list(v)
            for b, p in zip(basis, pivots):
                if v[p] != 0:
                    c = v[p] * pow(b[p], -1, self.q) % self.q
                    v = [(a - c * bb) % self.q for a, bb in zip(v, b)]
            if any(v):
                p = next(i for i, a in enumerate(v) if a)
                basis.append(v)
                pivots.append(p)
        order = sorted(range(len(basis)), key=lambda i: pivots[i])
        return [tuple(basis[i]) for i in order]

    def subspace_presentation(self, vectors, ambient: Obj):
        """Standard space of the right dimension plus a mono onto the span."""
        dim = self.dim(ambient)
        basis = self.reduce_basis(vectors, dim)
        sub = self.obj(len(basis))
        m = self.from_matrix(sub, ambient, basis)
        return sub, m

    def coords_in_basis(self, basis, v, dim):
        """Coordinates of v in an independent basis (brute force, small q^k)."""
        for coeffs in itertools.product(range(self.q), repeat=len(basis)):
            acc = self.zero(dim)
            for c, b in zip(coeffs, basis):
                acc = self.add(acc, self.scale(c, b))
            if acc == v:
                return coeffs
        raise ValueError("vector outside span")

    def complement_basis(self, basis, dim):
        """Extend an independent set to a basis with standard vectors."""
        full = list(basis)
        extra = []
        for e in self.basis_vectors(dim):
            if len(self.reduce_basis(full + [e], dim)) > len(full):
                full.append(e)
                extra.append(e)
        return extra

    def image_obj(self, f):
        sub, _ = self.subspace_presentation(list(f.mapping), f.cod)
        return sub

    def factorize(self, f):
        sub, m = self.subspace_presentation(list(f.mapping), f.cod)
        basis = [m(b) for b in self.basis_vectors(self.dim(sub))]
        dimc = self.dim(f.cod)
        coord = {v: self.coords_in_basis(basis, v, dimc) for v in set(f.mapping)}
        e = self.mor(f.dom, sub, lambda u: coord[f(u)])
        return e, m

    def initial(self):
        return self.obj(0)

    def terminal(self):
        return self.obj(0)

    def coproduct(self, objs):
        dims = [self.dim(X) for X in objs]
        total = sum(dims)
        out = self.obj(total)
        injections = []
        offset = 0
        for X, d in zip(objs, dims):
            lo = offset

            def make(lo=lo, d=d):
                return lambda u: (0,) * lo + u + (0,) * (total - lo - d)

            injections.append(self.mor(X, out, make()))
            offset += d
        return out, injections

    def coequalizer(self, f, g):
        """Cokernel of f - g: quotient by the spanned difference subspace."""
        if f.dom != g.dom or f.cod != g.cod:
            raise ValueError("not a parallel pair")
        dimc = self.dim(f.cod)
        diffs = [self.add(f(u), self.scale(self.q - 1, g(u))) for u in f.dom.carrier]
        wbasis = self.reduce_basis(diffs, dimc)
        comp = self.complement_basis(wbasis, dimc)
        Q = self.obj(len(comp))
        full = wbasis + comp

        def project(v):
            coords = self.coords_in_basis(full, v, dimc)
            return tuple(coords[len(wbasis):])

        return self.mor(f.cod, Q, project)

    def kernel_pair(self, f):
        pairs = [
            u + v for u in f.dom.carrier for v in f.dom.carrier if f(u) == f(v)
        ]
        dimd = self.dim(f.dom)
        P, m = self.subspace_presentation(pairs, self.obj(2 * dimd))
        p1 = self.mor(P, f.dom, lambda w: m(w)[:dimd])
        p2 = self.mor(P, f.dom, lambda w: m(w)[dimd:])
        return p1, p2

    def subobjects_fg(self, X, bound=None):
        dim = self.dim(X)
        seen = {}
        for r in range(dim + 1):
            for vecs in itertools.combinations(X.carrier, r):
                spanned = self.span(list(vecs), dim)
                if spanned not in seen:
                    sub, m = self.subspace_presentation(list(vecs), X)
                    seen[spanned] = m
        return [seen[k] for k in sorted(seen, key=elem_key)]

    def projection_onto(self, sub_mono: Mor) -> Mor:
        """Retraction of a subspace embedding along a standard complement."""
        X = sub_mono.cod
        dim = self.dim(X)
        basis = [sub_mono(b) for b in self.basis_vectors(self.dim(sub_mono.dom))]
        comp = self.complement_basis(basis, dim)
        full = basis + comp

        def retract(v):
            coords = self.coords_in_basis(full, v, dim)
            return tuple(coords[: len(basis)])

        return self.mor(X, sub_mono.dom, retract)


VEC2 = register_category(VecCat(2))
VEC3 = register_category(VecCat(3))


# ---------------------------------------------------------------------------
# probe families and samplers


def probe_objects(cat, max_size=3, rng=None, samples=6):
    """Small probe objects for universal-property and cancellation checks.

    Exhaustive for finite sets and unary algebras; graphs on 3 vertices are
    sampled (512 of them would blow up probe products).
    """
    if cat is FINSET:
        return [cat.obj(range(k)) for k in range(max_size + 1)]
    if cat is UN:
        out = []
        for k in range(max_size + 1):
            for images in itertools.product(range(k), repeat=k):
                out.append(cat.obj(range(k), dict(enumerate(images))))
        return out
    if cat is GRA:
        out = []
        for k in range(min(max_size, 2) + 1):
            pairs = [(i, j) for i in range(k) for j in range(k)]
            for r in range(len(pairs) + 1):
                for es in itertools.combinations(pairs, r):
                    out.append(cat.obj(range(k), es))
        if max_size >= 3 and rng is not None:
            pairs = [(i, j) for i in range(3) for j in range(3)]
            for _ in range(samples):
                es = [e for e in pairs if rng.random() < 0.3]
                out.append(cat.obj(range(3), es))
        return out
    if isinstance(cat, PresheafCat):
        out = [cat.initial(), cat.terminal()]
        if cat.gpd.sorts == ("*",):
            out.append(gset_free_orbit(cat))
            out.append(gset_fixed_point(cat))
        return out
    if isinstance(cat, VecCat):
        return [cat.obj(d) for d in range(min(max_size, 2) + 1)]
    raise ValueError(f"no probe family for {cat.name}")


def random_finset_mor(rng, max_dom=4, max_cod=4, surjective=False):
    n = rng.randint(1, max_dom)
    m = rng.randint(1, max_cod)
    X, Y = FINSET.obj(range(n)), FINSET.obj(range(m))
    if surjective:
        if m > n:
            m = n
            Y = FINSET.obj(range(m))
        images = list(range(m)) + [rng.randrange(m) for _ in range(n - m)]
        rng.shuffle(images)
        return FINSET.mor(X, Y, dict(enumerate(images)))
    return FINSET.mor(X, Y, {i: rng.randrange(m) for i in range(n)})


def random_un_obj(rng, max_size=5):
    n = rng.randint(1, max_size)
    return UN.obj(range(n), {i: rng.randrange(n) for i in range(n)})


def random_un_surjection(rng, max_size=5):
    """Random surjective unary-algebra hom, built via a sampled quotient."""
    X = random_un_obj(rng, max_size)
    if X.size >= 2:
        a, b = rng.sample(list(X.carrier), 2)
        u, v = pair_through_chain(X, a, b)
        return UN.coequalizer(u, v)
    return UN.identity(X)


def _tail_period(X, x):
    seen = {}
    cur, steps = x, 0
    while cur not in seen:
        seen[cur] = steps
        cur = UN.op(X, cur)
        steps += 1
    tail = seen[cur]
    return tail, steps - tail


def pair_through_chain(X, a, b):
    """Parallel pair u, v from one chain algebra with u(0) = a, v(0) = b.

    A chain with tail t and period p admits a hom picking out any element
    whose own tail is at most t and whose cycle length divides p.
    """
    import math

    ta, pa = _tail_period(X, a)
    tb, pb = _tail_period(X, b)
    t = max(ta, tb)
    p = pa * pb // math.gcd(pa, pb)
    total = t + p
    chain = UN.obj(
        range(total), {i: (i + 1 if i + 1 < total else t) for i in range(total)}
    )

    def walk(start):
        images = {}
        cur = start
        for i in range(total):
            images[i] = cur
            cur = UN.op(X, cur)
        return images

    return UN.mor(chain, X, walk(a)), UN.mor(chain, X, walk(b))


def random_gset(rng, cat: PresheafCat, subgroups, max_size=8):
    """Random disjoint union of coset actions with carrier at most max_size."""
    parts = []
    total = 0
    tag = 0
    while True:
        H = subgroups[rng.randrange(len(subgroups))]
        orbit = gset_from_cosets(cat, H, tag)
        if total + orbit.size > max_size:
            break
        parts.append(orbit)
        total += orbit.size
        tag += 1
        if total == max_size or rng.random() < 0.3:
            break
    if not parts:
        return gset_fixed_point(cat)
    out, _ = cat.coproduct(parts)
    return out
