"""Permutations in one-line notation and closure helpers for finite groups."""

from __future__ import annotations

import itertools
from functools import lru_cache


def identity_perm(n):
    return tuple(range(n))


def compose_perm(p, q):
    """p after q: (p*q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(q)))


def inverse_perm(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def all_perms(n):
    return [tuple(p) for p in itertools.permutations(range(n))]


def transposition(n, a, b):
    p = list(range(n))
    p[a], p[b] = p[b], p[a]
    return tuple(p)


def transpositions(n):
    return [transposition(n, a, b) for a in range(n) for b in range(a + 1, n)]


def mulclose(gens, n):
    """Subgroup generated by gens inside the symmetric group on n points."""
    els = {identity_perm(n)}
    frontier = [g for g in gens]
    els.update(frontier)
    while frontier:
        new = []
        for a in gens:
            for b in frontier:
                c = compose_perm(a, b)
                if c not in els:
                    els.add(c)
                    new.append(c)
        frontier = new
    # generated sets are inverse-closed for finite order elements
    return frozenset(els)


def is_subgroup(els, n):
    els = set(els)
    if identity_perm(n) not in els:
        return False
    for a in els:
        if inverse_perm(a) not in els:
            return False
        for b in els:
            if compose_perm(a, b) not in els:
                return False
    return True


def cycle_type(p):
    """Multiset of cycle lengths, sorted; conjugation invariant."""
    seen = set()
    lengths = []
    for i in range(len(p)):
        if i in seen:
            continue
        j, ln = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            ln += 1
        lengths.append(ln)
    return tuple(sorted(lengths))


@lru_cache(maxsize=None)
def subgroups_of_sym(n):
    """Every subgroup of the symmetric group on n points, each exactly once.

    Breadth-first growth: extend each known subgroup by one outside element
    and close; every subgroup is reachable this way via a maximal chain.
    """
    if n > 5:
        raise ValueError("subgroup enumeration supported for n <= 5 only")
    full = all_perms(n)
    start = frozenset({identity_perm(n)})
    found = {start}
    queue = [start]
    while queue:
        h = queue.pop()
        for g in full:
            if g in h:
                continue
            k = mulclose(tuple(h) + (g,), n)
            if k not in found:
                found.add(k)
                queue.append(k)
    return sorted(found, key=lambda s: (len(s), sorted(s)))
