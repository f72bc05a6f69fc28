"""Canonical keys, isomorphism testing, and induced-subgraph search.

The canonical key of a graph is the graph6 encoding of a distinguished
relabelling: the lexicographically smallest upper-triangle bit string over
all vertex orders that respect the (degree, sorted neighbour degrees)
partition.  Restricting to such orders is an isomorphism-invariant pruning,
so two graphs get the same key exactly when they are isomorphic.  Intended
for small graphs; the default cap is 16 vertices.
"""

from __future__ import annotations

import os

from .graphs import Graph, _bits
from .io import to_graph6

CANON_MAX_VERTICES = 16

_KEY_CACHE: dict[Graph, str] = {}
_KEY_CACHE_CAP = int(os.environ.get("PIVOTMINORS_CACHE_CAP", str(1 << 21)))


def _canonical_perm(g: Graph) -> tuple[int, ...]:
    """Vertex order realizing the minimal encoding; perm[i] is the original
    vertex placed at position i."""
    n = g.n
    rows = g.rows
    if n <= 1:
        return tuple(range(n))
    degs = [r.bit_count() for r in rows]
    sig = {
        v: (degs[v], tuple(sorted(degs[u] for u in _bits(rows[v]))))
        for v in range(n)
    }
    cells: dict[tuple, list[int]] = {}
    for v in range(n):
        cells.setdefault(sig[v], []).append(v)
    # positions are handed out cell by cell in signature order
    cell_of_level = []
    for key in sorted(cells):
        cell_of_level.extend([cells[key]] * len(cells[key]))

    best: list[int] = []  # column values of the best encoding prefix
    best_perm: list[int] = []
    placed: list[int] = []

    def dfs(level: int, used: int) -> None:
        if level == n:
            best_perm[:] = placed
            return
        cands = []
        for v in cell_of_level[level]:
            if used >> v & 1:
                continue
            rv = rows[v]
            col = 0
            for w in placed:
                col = col << 1 | (rv >> w & 1)
            cands.append((col, v))
        cands.sort()
        tried: list[tuple[int, int]] = []
        for col, v in cands:
            if level < len(best):
                if col > best[level]:
                    break
                if col < best[level]:
                    best[level] = col
                    del best[level + 1:]
            else:
                best.append(col)
            # identical subtrees: skip v when a tried candidate with the
            # same column is its interchangeable twin
            skip = False
            for c0, v0 in tried:
                if c0 == col:
                    excl = ~((1 << v) | (1 << v0))
                    if rows[v] & excl == rows[v0] & excl:
                        skip = True
                        break
            if skip:
                continue
            placed.append(v)
            dfs(level + 1, used | 1 << v)
            placed.pop()
            tried.append((col, v))

    dfs(0, 0)
    return tuple(best_perm)


def canonical_form(g: Graph) -> Graph:
    """The canonically relabelled representative of g's isomorphism class."""
    if g.n > CANON_MAX_VERTICES:
        raise ValueError(
            f"canonical form capped at {CANON_MAX_VERTICES} vertices, got {g.n}"
        )
    perm = _canonical_perm(g)
    pos = [0] * g.n
    for i, v in enumerate(perm):
        pos[v] = i
    rows = [0] * g.n
    for i, v in enumerate(perm):
        m = 0
        for w in _bits(g.rows[v]):
            m |= 1 << pos[w]
        rows[i] = m
    return Graph._make(g.n, tuple(rows))


def canonical_key(g: Graph) -> str:
    """graph6 string of the canonical form; equal keys iff isomorphic."""
    key = _KEY_CACHE.get(g)
    if key is None:
        key = to_graph6(canonical_form(g))
        if len(_KEY_CACHE) < _KEY_CACHE_CAP:
            _KEY_CACHE[g] = key
    return key


def _seed_key_cache(g: Graph, key: str) -> None:
    if len(_KEY_CACHE) < _KEY_CACHE_CAP:
        _KEY_CACHE[g] = key


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_key(g) == canonical_key(h)


def isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A bijection phi with phi[v] in h for v in g, or None.

    Composes the two canonical permutations, so correctness follows from
    the canonical forms being equal.
    """
    if not is_isomorphic(g, h):
        return None
    pg = _canonical_perm(g)
    ph = _canonical_perm(h)
    phi = [0] * g.n
    for i in range(g.n):
        phi[pg[i]] = ph[i]
    return phi


def find_induced_embedding(pattern: Graph, host: Graph) -> list[int] | None:
    """Map pattern vertices injectively into host preserving both edges and
    non-edges; returns phi with phi[p] a host vertex, or None.

    Plain backtracking with degree pruning; pattern order stays small here
    (at most 7), hosts are small too, so n^k is acceptable.
    """
    k, n = pattern.n, host.n
    if k > n or pattern.num_edges > host.num_edges:
        return None
    # order pattern vertices to place constrained ones early
    order: list[int] = []
    seen = 0
    pdeg = [pattern.degree(v) for v in range(k)]
    while len(order) < k:
        bestv, bestkey = -1, (-1, -1)
        for v in range(k):
            if seen >> v & 1:
                continue
            anchored = (pattern.rows[v] & seen).bit_count()
            key = (anchored, pdeg[v])
            if key > bestkey:
                bestv, bestkey = v, key
        order.append(bestv)
        seen |= 1 << bestv
    hdeg = [host.degree(v) for v in range(n)]
    assign = [-1] * k

    def dfs(i: int, used: int) -> bool:
        if i == k:
            return True
        p = order[i]
        rp = pattern.rows[p]
        for c in range(n):
            if used >> c & 1 or hdeg[c] < pdeg[p]:
                continue
            rc = host.rows[c]
            ok = True
            for j in range(i):
                q = order[j]
                if (rp >> q & 1) != (rc >> assign[q] & 1):
                    ok = False
                    break
            if ok:
                assign[p] = c
                if dfs(i + 1, used | 1 << c):
                    return True
                assign[p] = -1
        return False

    return assign[:] if dfs(0, 0) else None


def has_induced(pattern: Graph, host: Graph) -> bool:
    return find_induced_embedding(pattern, host) is not None
