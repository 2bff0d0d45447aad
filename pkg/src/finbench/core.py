"""Finite presentations of objects and morphisms, plus the shared category API.

Every concrete category subclasses :class:`Category` and registers itself
under a unique name.  Objects and morphisms are immutable value types carrying
that name, so generic machinery (hom search, factorization, quotients,
subobject enumeration) dispatches through the registry.  Carriers are plain
tuples of hashable elements; S-sorted categories tag elements with their sort.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache


def elem_key(x):
    """Total order key for carrier elements (ints, strings, tuples, frozensets)."""
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, len(x), tuple(elem_key(y) for y in x))
    if isinstance(x, frozenset):
        return (3, len(x), tuple(sorted(elem_key(y) for y in x)))
    raise TypeError(f"unsupported carrier element: {x!r}")


def canon(elems):
    """Deduplicate and sort into a canonical carrier tuple."""
    return tuple(sorted(set(elems), key=elem_key))


def canon_pairs(pairs):
    return tuple(sorted(set(pairs), key=elem_key))


@dataclass(frozen=True)
class Obj:
    cat: str
    carrier: tuple
    structure: tuple = ()

    def __post_init__(self):
        if len(set(self.carrier)) != len(self.carrier):
            raise ValueError("carrier has duplicate elements")

    @property
    def size(self):
        return len(self.carrier)

    def __repr__(self):
        if self.size <= 6:
            return f"Obj({self.cat}, {list(self.carrier)})"
        return f"Obj({self.cat}, |{self.size}|)"


@dataclass(frozen=True)
class Mor:
    dom: Obj
    cod: Obj
    mapping: tuple  # images aligned with dom.carrier

    def __post_init__(self):
        if self.dom.cat != self.cod.cat:
            raise ValueError("morphism across categories")
        if len(self.mapping) != len(self.dom.carrier):
            raise ValueError("mapping length does not match domain carrier")
        cod_set = set(self.cod.carrier)
        for y in self.mapping:
            if y not in cod_set:
                raise ValueError(f"image {y!r} outside codomain")
        if not category_of(self.dom).preserves_structure(self):
            raise ValueError("mapping does not preserve structure")

    @cached_property
    def _lookup(self):
        return dict(zip(self.dom.carrier, self.mapping))

    def __call__(self, x):
        return self._lookup[x]

    @property
    def cat(self):
        return self.dom.cat

    def image_elems(self):
        return canon(self.mapping)

    def is_injective(self):
        return len(set(self.mapping)) == len(self.mapping)

    def is_surjective(self):
        return set(self.mapping) == set(self.cod.carrier)

    def __repr__(self):
        if self.dom.size <= 5:
            pairs = ", ".join(f"{x!r}>{y!r}" for x, y in zip(self.dom.carrier, self.mapping))
            return f"Mor({pairs})"
        return f"Mor({self.dom!r} -> {self.cod!r})"


_REGISTRY: dict[str, "Category"] = {}


def register_category(cat):
    existing = _REGISTRY.get(cat.name)
    if existing is not None:
        return existing
    _REGISTRY[cat.name] = cat
    return cat


def category_of(x):
    return _REGISTRY[x.cat]


def lookup_category(name):
    return _REGISTRY[name]


class Category:
    """Shared finite-category machinery; subclasses fill in structure hooks."""

    name: str

    # ---- structure hooks -------------------------------------------------

    def preserves_structure(self, f: Mor) -> bool:
        return True

    def op_successors(self, X: Obj, x):
        """Functional constraints: pairs (op_id, op(x)) for unary operations."""
        return ()

    def op_apply(self, X: Obj, op_id, x):
        """Apply op_id in X, or None when undefined; mirror of op_successors."""
        return None

    def candidate_targets(self, X: Obj, x, Y: Obj):
        """Codomain elements a hom may send x to (sort filtering etc.)."""
        return Y.carrier

    def relations_ok(self, X: Obj, Y: Obj, assign: dict) -> bool:
        """Relational constraints (edges) among currently assigned elements."""
        return True

    def iso_invariant(self, X: Obj):
        return X.size

    # ---- identities and composition --------------------------------------

    def identity(self, X: Obj) -> Mor:
        return Mor(X, X, tuple(X.carrier))

    def compose(self, g: Mor, f: Mor) -> Mor:
        if f.cod != g.dom:
            raise ValueError("morphisms not composable")
        return Mor(f.dom, g.cod, tuple(g(f(x)) for x in f.dom.carrier))

    def mor(self, dom: Obj, cod: Obj, mapping) -> Mor:
        if callable(mapping):
            return Mor(dom, cod, tuple(mapping(x) for x in dom.carrier))
        if isinstance(mapping, dict):
            return Mor(dom, cod, tuple(mapping[x] for x in dom.carrier))
        return Mor(dom, cod, tuple(mapping))

    # ---- hom enumeration ---------------------------------------------------

    def hom_set(self, X: Obj, Y: Obj) -> list[Mor]:
        """All structure-preserving maps X -> Y, duplicate free.

        Backtracking with propagation along unary operations; relational
        constraints are rechecked on partial assignments.
        """
        results = []
        xs = X.carrier

        def propagate(assign, queue):
            while queue:
                a, b = queue.pop()
                for op_id, a2 in self.op_successors(X, a):
                    b2 = self.op_apply(Y, op_id, b)
                    if b2 is None:
                        return False
                    if a2 in assign:
                        if assign[a2] != b2:
                            return False
                    else:
                        assign[a2] = b2
                        queue.append((a2, b2))
            return True

        def extend(assign):
            pending = [x for x in xs if x not in assign]
            if not pending:
                results.append(Mor(X, Y, tuple(assign[x] for x in xs)))
                return
            x = pending[0]
            for y in self.candidate_targets(X, x, Y):
                trial = dict(assign)
                trial[x] = y
                if propagate(trial, [(x, y)]) and self.relations_ok(X, Y, trial):
                    extend(trial)

        extend({})
        return results

    # ---- mono / epi --------------------------------------------------------

    def is_mono(self, f: Mor) -> bool:
        return f.is_injective()

    def is_epi(self, f: Mor) -> bool:
        return f.is_surjective()

    def is_strong_epi(self, f: Mor) -> bool:
        return f.is_surjective()

    def is_iso(self, f: Mor) -> bool:
        if not (f.is_injective() and f.is_surjective()):
            return False
        try:
            self.inverse(f)
        except ValueError:
            return False
        return True

    def inverse(self, f: Mor) -> Mor:
        back = {y: x for x, y in zip(f.dom.carrier, f.mapping)}
        return Mor(f.cod, f.dom, tuple(back[y] for y in f.cod.carrier))

    # ---- factorization -----------------------------------------------------

    def image_obj(self, f: Mor) -> Obj:
        """Intermediate object of the (strong epi, mono) factorization."""
        raise NotImplementedError

    def factorize(self, f: Mor):
        im = self.image_obj(f)
        e = Mor(f.dom, im, f.mapping)
        m = Mor(im, f.cod, tuple(im.carrier))
        return e, m

    # ---- colimits ------------------------------------------------------------

    def initial(self) -> Obj:
        raise NotImplementedError

    def terminal(self) -> Obj:
        raise NotImplementedError

    def coproduct(self, objs):
        raise NotImplementedError

    def quotient_obj(self, X: Obj, class_of: dict) -> Obj:
        """Object on canonical class representatives; class_of maps x -> rep."""
        raise NotImplementedError

    def coequalizer(self, f: Mor, g: Mor) -> Mor:
        """Quotient of cod(f) by the congruence generated by f(x) ~ g(x)."""
        if f.dom != g.dom or f.cod != g.cod:
            raise ValueError("not a parallel pair")
        Y = f.cod
        parent = {y: y for y in Y.carrier}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        queue = [(f(x), g(x)) for x in f.dom.carrier]
        while queue:
            a, b = queue.pop()
            ra, rb = find(a), find(b)
            if ra == rb:
                continue
            parent[ra] = rb
            # propagate through unary operations
            for op_id, a2 in self.op_successors(Y, a):
                b2 = self.op_apply(Y, op_id, b)
                queue.append((a2, b2))
        classes = {}
        for y in Y.carrier:
            classes.setdefault(find(y), []).append(y)
        rep = {}
        for members in classes.values():
            r = min(members, key=elem_key)
            for y in members:
                rep[y] = r
        Q = self.quotient_obj(Y, rep)
        return Mor(Y, Q, tuple(rep[y] for y in Y.carrier))

    def kernel_pair(self, f: Mor):
        raise NotImplementedError

    # ---- subobjects ------------------------------------------------------------

    def subobjects_fg(self, X: Obj, bound=None) -> list[Mor]:
        """Monos into X, one per subobject; optionally size-bounded."""
        raise NotImplementedError

    def sub_mono(self, X: Obj, sub: Obj) -> Mor:
        return Mor(sub, X, tuple(sub.carrier))

    # ---- isomorphism search ------------------------------------------------------

    def find_iso(self, X: Obj, Y: Obj):
        """Backtracking search for an isomorphism X -> Y, or None."""
        if X.size != Y.size or self.iso_invariant(X) != self.iso_invariant(Y):
            return None
        xs = X.carrier

        def extend(assign, used):
            pending = [x for x in xs if x not in assign]
            if not pending:
                f = Mor(X, Y, tuple(assign[x] for x in xs))
                if self.is_iso(f):
                    return f
                return None
            x = pending[0]
            for y in self.candidate_targets(X, x, Y):
                if y in used:
                    continue
                trial = dict(assign)
                trial[x] = y
                ok = True
                queue = [(x, y)]
                while queue and ok:
                    a, b = queue.pop()
                    for op_id, a2 in self.op_successors(X, a):
                        b2 = self.op_apply(Y, op_id, b)
                        if b2 is None:
                            ok = False
                            break
                        if a2 in trial:
                            if trial[a2] != b2:
                                ok = False
                                break
                        else:
                            if b2 in trial.values():
                                ok = False
                                break
                            trial[a2] = b2
                            queue.append((a2, b2))
                if not ok or not self.relations_ok(X, Y, trial):
                    continue
                vals = list(trial.values())
                if len(set(vals)) != len(vals):
                    continue
                found = extend(trial, set(vals))
                if found is not None:
                    return found
            return None

        return extend({}, set())

    def is_isomorphic(self, X: Obj, Y: Obj) -> bool:
        return self.find_iso(X, Y) is not None


@lru_cache(maxsize=None)
def _struct_map(X: Obj, key):
    """Cached dict view of a pair-list entry of Obj.structure."""
    for tag, payload in _struct_items(X):
        if tag == key:
            return dict(payload)
    raise KeyError(key)


def _struct_items(X: Obj):
    it = iter(X.structure)
    return list(zip(it, it))
