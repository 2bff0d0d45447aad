"""Finitely described infinite objects with decision procedures.

Registered kinds:

* ``ray``: graph on the naturals with edges n -> n+1 and nothing else.
* ``loop_ray``: the ray plus an isolated loop vertex 0 (edges n -> n+1 start
  at vertex 1); the constant-0 self-map is its only finitary endomorphism.
* ``cycle_family``: unary algebra given by the disjoint union of one cycle
  per prime; hom existence from a cycle is decided by divisibility.

These objects expose hom emptiness/enumeration-in-a-window and bounded
substructure enumeration instead of carriers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Mor, Obj, canon, elem_key
from .cats import GRA, UN

WINDOW_DEFAULT = 32


class WindowExhausted(Exception):
    """Raised when a decision genuinely needs data beyond the window bound."""


@dataclass(frozen=True)
class SymbolicObject:
    kind: str
    cat: str

    def __repr__(self):
        return f"Symbolic({self.kind})"


RAY = SymbolicObject("ray", "gra")
LOOP_RAY = SymbolicObject("loop_ray", "gra")
CYCLE_FAMILY = SymbolicObject("cycle_family", "un")


@dataclass(frozen=True)
class SymMor:
    """Morphism from a finite object into a symbolic object.

    Symbolic elements: ints for ray/loop_ray vertices, (prime, index) pairs
    for cycle family points.
    """

    dom: Obj
    cod: SymbolicObject
    mapping: tuple

    def __post_init__(self):
        if len(self.mapping) != len(self.dom.carrier):
            raise ValueError("mapping length mismatch")
        if not _preserves(self):
            raise ValueError("mapping does not preserve structure")

    def __call__(self, x):
        return dict(zip(self.dom.carrier, self.mapping))[x]

    def precompose(self, f: Mor) -> "SymMor":
        if f.cod != self.dom:
            raise ValueError("not composable")
        return SymMor(f.dom, self.cod, tuple(self(f(x)) for x in f.dom.carrier))

    def image_elems(self):
        return canon(self.mapping)


def _preserves(sm: SymMor) -> bool:
    look = dict(zip(sm.dom.carrier, sm.mapping))
    if sm.cod.kind in ("ray", "loop_ray"):
        for u, v in GRA.edges(sm.dom):
            a, b = look[u], look[v]
            if sm.cod.kind == "loop_ray" and a == 0:
                if b != 0:
                    return False
            elif b != a + 1:
                return False
            if sm.cod.kind == "ray" and (a < 0 or b < 0):
                return False
        return True
    if sm.cod.kind == "cycle_family":
        for x in sm.dom.carrier:
            q, i = look[x]
            if not _is_prime(q):
                return False
            q2, i2 = look[UN.op(sm.dom, x)]
            if (q2, i2) != (q, (i + 1) % q):
                return False
        return True
    raise ValueError(sm.cod.kind)


def _is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def primes_upto(n):
    return [p for p in range(2, n + 1) if _is_prime(p)]


@dataclass
class WindowedHoms:
    homs: list
    window: int
    complete: bool  # False when shifts outside the window exist


# ---------------------------------------------------------------------------
# hom enumeration into symbolic objects


def homs_into(sym: SymbolicObject, A: Obj, window: int = WINDOW_DEFAULT) -> WindowedHoms:
    if sym.kind == "ray":
        return _homs_into_ray(A, window)
    if sym.kind == "loop_ray":
        return _homs_into_loop_ray(A, window)
    if sym.kind == "cycle_family":
        return _homs_into_cycle_family(A, window)
    raise ValueError(sym.kind)


def _graph_levels(A: Obj):
    """Per weak component: (levels dict, gradable flag).  A component maps
    into the ray iff edges admit a consistent +1 level function."""
    adj = {v: [] for v in A.carrier}
    for u, v in GRA.edges(A):
        adj[u].append((v, 1))
        adj[v].append((u, -1))
    seen = set()
    components = []
    for v in A.carrier:
        if v in seen:
            continue
        levels = {v: 0}
        stack = [v]
        ok = True
        while stack:
            a = stack.pop()
            for b, d in adj[a]:
                lv = levels[a] + d
                if b in levels:
                    if levels[b] != lv:
                        ok = False
                else:
                    levels[b] = lv
                    stack.append(b)
        seen.update(levels)
        components.append((levels, ok))
    return components


def _homs_into_ray(A: Obj, window) -> WindowedHoms:
    comps = _graph_levels(A)
    if any(not ok for _, ok in comps):
        return WindowedHoms([], window, True)
    per_comp = []
    for levels, _ in comps:
        lo = min(levels.values())
        hi = max(levels.values())
        options = [{v: l + s for v, l in levels.items()} for s in range(-lo, window - hi)]
        if not options:
            return WindowedHoms([], window, False)
        per_comp.append(options)
    homs = []
    for combo in itertools.product(*per_comp):
        mapping = {}
        for part in combo:
            mapping.update(part)
        homs.append(SymMor(A, RAY, tuple(mapping[v] for v in A.carrier)))
    # shifts beyond the window always exist for nonempty graphs
    return WindowedHoms(homs, window, complete=A.size == 0)


def _homs_into_loop_ray(A: Obj, window) -> WindowedHoms:
    """Each weak component either collapses onto the loop vertex or embeds as
    a shifted grading into the ray part (vertices >= 1)."""
    per_comp = []
    for levels, gradable in _graph_levels(A):
        options = [{v: 0 for v in levels}]
        if gradable:
            lo, hi = min(levels.values()), max(levels.values())
            for s in range(1 - lo, window - hi):
                options.append({v: l + s for v, l in levels.items()})
        per_comp.append(options)
    homs = []
    for combo in itertools.product(*per_comp):
        mapping = {}
        for part in combo:
            mapping.update(part)
        homs.append(SymMor(A, LOOP_RAY, tuple(mapping[v] for v in A.carrier)))
    return WindowedHoms(homs, window, complete=A.size == 0)


def _homs_into_cycle_family(A: Obj, window) -> WindowedHoms:
    comps = _un_components(A)
    per_comp = []
    complete = True
    for elems, cycle_len in comps:
        targets = []
        for q in primes_upto(window):
            if cycle_len % q == 0:
                targets.extend((q, r) for r in range(q))
        if any(p > window for p in _prime_divisors(cycle_len)):
            complete = False
        if not targets:
            return WindowedHoms([], window, complete)
        per_comp.append((elems, targets))
    homs = []
    for combo in itertools.product(*(t for _, t in per_comp)):
        mapping = {}
        for (elems, _), (q, r) in zip(per_comp, combo):
            offsets = _offsets_to_cycle(A, elems)
            for v, off in offsets.items():
                mapping[v] = (q, (r + off) % q)
        homs.append(SymMor(A, CYCLE_FAMILY, tuple(mapping[v] for v in A.carrier)))
    return WindowedHoms(homs, window, complete)


def _prime_divisors(n):
    return [p for p in primes_upto(n) if n % p == 0]


def _un_components(A: Obj):
    """Weak components of a unary algebra with their unique cycle length."""
    parent = {x: x for x in A.carrier}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in A.carrier:
        ra, rb = find(x), find(UN.op(A, x))
        if ra != rb:
            parent[ra] = rb
    groups = {}
    for x in A.carrier:
        groups.setdefault(find(x), []).append(x)
    out = []
    for elems in groups.values():
        x = elems[0]
        seen = {}
        cur, steps = x, 0
        while cur not in seen:
            seen[cur] = steps
            cur = UN.op(A, cur)
            steps += 1
        out.append((sorted(elems, key=elem_key), steps - seen[cur]))
    return out


def _offsets_to_cycle(A: Obj, component):
    """Offsets o(v) with f(v) = rotate(f(anchor), o(v)) for any hom into a
    cycle; well defined since the target operation is invertible."""
    anchor = component[0]
    members = set(component)
    offsets = {anchor: 0}
    frontier = [anchor]
    while frontier:
        a = frontier.pop()
        b = UN.op(A, a)
        if b not in offsets:
            offsets[b] = offsets[a] + 1
            frontier.append(b)
        # backward edges
        for c in component:
            if UN.op(A, c) == a and c not in offsets:
                offsets[c] = offsets[a] - 1
                frontier.append(c)
    if set(offsets) != members:
        raise ValueError("offsets requested across components")
    return offsets


def hom_exists_into(sym: SymbolicObject, A: Obj) -> bool:
    """Exact emptiness decision (window independent)."""
    if sym.kind == "ray":
        return all(ok for _, ok in _graph_levels(A))
    if sym.kind == "loop_ray":
        return True  # every vertex can collapse onto the loop
    if sym.kind == "cycle_family":
        return all(
            _prime_divisors(cycle_len) for _, cycle_len in _un_components(A)
        )
    raise ValueError(sym.kind)


# ---------------------------------------------------------------------------
# bounded substructure enumeration


def fg_subobjects(sym: SymbolicObject, bound: int, window: int = WINDOW_DEFAULT):
    """Finitely generated substructures up to the size bound, as pairs
    (object, embedding); enumeration is windowed for translated copies."""
    out = []
    if sym.kind in ("ray", "loop_ray"):
        base = 0 if sym.kind == "ray" else 1
        empty = GRA.obj((), ())
        out.append((empty, SymMor(empty, sym, ())))
        if sym.kind == "loop_ray":
            loop = GRA.loop()
            out.append((loop, SymMor(loop, sym, (0,))))
        for length in range(0, bound):
            for start in range(base, window - length):
                seg = GRA.path(length)
                out.append(
                    (seg, SymMor(seg, sym, tuple(start + i for i in range(length + 1))))
                )
        return out
    if sym.kind == "cycle_family":
        prims = primes_upto(window)
        empty = UN.obj((), {})
        out.append((empty, SymMor(empty, sym, ())))
        for r in range(1, len(prims) + 1):
            for ps in itertools.combinations(prims, r):
                if sum(ps) > bound:
                    continue
                sub = UN.cycles_sum(ps)
                out.append((sub, SymMor(sub, sym, tuple(sub.carrier))))
        return out
    raise ValueError(sym.kind)


# ---------------------------------------------------------------------------
# symbolic endomorphisms (used by the strictness certificates)


@dataclass(frozen=True)
class SymEndo:
    """Endomorphism of a symbolic object given in closed form."""

    obj: SymbolicObject
    kind: str  # "shift" or "const0"
    offset: int = 0

    def apply(self, v):
        if self.kind == "shift":
            return v + self.offset
        if self.kind == "const0":
            return 0
        raise ValueError(self.kind)


def ray_shift(offset: int) -> SymEndo:
    if offset < 0:
        raise ValueError("ray shifts move forward")
    return SymEndo(RAY, "shift", offset)


def loop_ray_const0() -> SymEndo:
    return SymEndo(LOOP_RAY, "const0")
