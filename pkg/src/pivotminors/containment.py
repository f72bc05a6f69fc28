"""Exact pivot-minor containment for small graphs.

A pivot-minor of g is reached by pivoting edges and deleting vertices.
The decision procedure recurses on the reduction: h is a pivot-minor of g
with |g| > |h| exactly when, for some vertex v, h is a pivot-minor of
g - v or of g / v (pivot v with a neighbour, then delete v; any neighbour
gives a pivot-equivalent result).  At |g| == |h| the question degenerates
to pivot equivalence up to isomorphism, settled by enumerating the pivot
orbit of the target once and comparing canonical keys.

Verdicts are three-valued: resource limits surface as INCONCLUSIVE, never
as a silent false.
"""

from __future__ import annotations

import enum
import os
from collections import deque

from .canon import canonical_key
from .graphs import Graph, contract_pivot, delete_vertex, pivot
from .io import from_graph6

DEFAULT_ORBIT_LIMIT = 1 << 20


class OrbitLimitError(RuntimeError):
    """Raised when a pivot-orbit enumeration exceeds its member limit."""

    def __init__(self, limit: int):
        super().__init__(f"pivot orbit exceeded the limit of {limit} members")
        self.limit = limit


class Verdict(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    INCONCLUSIVE = "inconclusive"

    def __bool__(self) -> bool:
        if self is Verdict.INCONCLUSIVE:
            raise ValueError("inconclusive verdict has no truth value")
        return self is Verdict.TRUE

    @property
    def definite(self) -> bool:
        return self is not Verdict.INCONCLUSIVE


def pivot_orbit(g: Graph, *, limit: int = DEFAULT_ORBIT_LIMIT) -> set[Graph]:
    """All labelled graphs reachable from g by pivots (g included).

    Raises OrbitLimitError once more than `limit` members appear, rather
    than silently truncating.
    """
    seen = {g}
    queue = deque([g])
    while queue:
        cur = queue.popleft()
        for u, v in cur.edges():
            nxt = pivot(cur, u, v)
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > limit:
                    raise OrbitLimitError(limit)
                queue.append(nxt)
    return seen


class PivotMinorCache:
    """Shared memo for containment queries.

    verdicts maps (canonical g key, canonical h key) to a bool; children
    maps a canonical key to the sorted canonical keys of all one-vertex
    reductions (deletions and contract-pivots); target_orbits maps a
    canonical key to the canon-key set of its pivot orbit, or, when the
    enumeration blew the limit, to the largest limit that failed so a
    later call with a higher limit retries.  The entry cap comes from the
    PIVOTMINORS_CACHE_CAP environment variable.  Entries are only ever
    functions of their keys, so concurrent duplicate inserts agree.
    """

    def __init__(self, max_entries: int | None = None):
        if max_entries is None:
            max_entries = int(os.environ.get("PIVOTMINORS_CACHE_CAP", str(1 << 21)))
        self.max_entries = max_entries
        self.verdicts: dict[tuple[str, str], bool] = {}
        self.children: dict[str, tuple[str, ...]] = {}
        self.target_orbits: dict[str, frozenset[str] | int] = {}
        self.hits = 0
        self.misses = 0

    def _room(self) -> bool:
        return len(self.verdicts) + len(self.children) < self.max_entries

    def child_keys(self, g: Graph, key: str) -> tuple[str, ...]:
        kids = self.children.get(key)
        if kids is None:
            ks = set()
            for v in range(g.n):
                ks.add(canonical_key(delete_vertex(g, v)))
                ks.add(canonical_key(contract_pivot(g, v)))
            kids = tuple(sorted(ks))
            if self._room():
                self.children[key] = kids
        return kids

    def target_orbit_keys(self, h: Graph, key: str, limit: int) -> frozenset[str] | None:
        cached = self.target_orbits.get(key)
        if isinstance(cached, frozenset):
            return cached
        if isinstance(cached, int) and limit <= cached:
            return None
        try:
            orbit = pivot_orbit(h, limit=limit)
        except OrbitLimitError:
            self.target_orbits[key] = limit
            return None
        keys = frozenset(canonical_key(x) for x in orbit)
        self.target_orbits[key] = keys
        return keys

    def clear(self) -> None:
        self.verdicts.clear()
        self.children.clear()
        self.target_orbits.clear()
        self.hits = 0
        self.misses = 0


DEFAULT_CACHE = PivotMinorCache()


def contains_pivot_minor(
    g: Graph,
    h: Graph,
    *,
    cache: PivotMinorCache | None = None,
    orbit_limit: int = DEFAULT_ORBIT_LIMIT,
) -> Verdict:
    """Does g contain h as a pivot-minor?"""
    if cache is None:
        cache = DEFAULT_CACHE
    if h.n == 0:
        return Verdict.TRUE
    if g.n < h.n:
        return Verdict.FALSE
    kh = canonical_key(h)

    def rec(cur: Graph, key: str) -> Verdict:
        if cur.n == h.n:
            orbit_keys = cache.target_orbit_keys(h, kh, orbit_limit)
            if orbit_keys is None:
                return Verdict.INCONCLUSIVE
            return Verdict.TRUE if key in orbit_keys else Verdict.FALSE
        memo = cache.verdicts.get((key, kh))
        if memo is not None:
            cache.hits += 1
            return Verdict.TRUE if memo else Verdict.FALSE
        cache.misses += 1
        inconclusive = False
        verdict = Verdict.FALSE
        for kid in cache.child_keys(cur, key):
            memo = cache.verdicts.get((kid, kh))
            if memo is not None:
                sub = Verdict.TRUE if memo else Verdict.FALSE
            else:
                sub = rec(from_graph6(kid), kid)
            if sub is Verdict.TRUE:
                verdict = Verdict.TRUE
                break
            if sub is Verdict.INCONCLUSIVE:
                inconclusive = True
        if verdict is not Verdict.TRUE and inconclusive:
            return Verdict.INCONCLUSIVE
        if cache._room():
            cache.verdicts[(key, kh)] = verdict is Verdict.TRUE
        return verdict

    return rec(g, canonical_key(g))


def pivot_equivalent(
    g: Graph, h: Graph, *, orbit_limit: int = DEFAULT_ORBIT_LIMIT
) -> bool:
    """Is g reachable from h by pivots, up to relabelling?"""
    if g.n != h.n:
        return False
    orbit = pivot_orbit(h, limit=orbit_limit)
    kg = canonical_key(g)
    return any(canonical_key(x) == kg for x in orbit)
