"""Exhaustive generation of small graphs, one per isomorphism class.

Classes on n vertices are produced by extending every (n-1)-vertex class
representative with a new vertex in all 2^(n-1) ways and deduplicating by
canonical key.  Every n-vertex graph arises this way because deleting its
last vertex lands in some (n-1)-vertex class.
"""

from __future__ import annotations

from .canon import _seed_key_cache, canonical_form, canonical_key
from .graphs import Graph

GENERATE_MAX_VERTICES = 9

# number of isomorphism classes on n = 0..9 vertices
KNOWN_CLASS_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668)

_CLASSES: dict[int, tuple[Graph, ...]] = {0: (Graph(0),)}


def generate_all_graphs(n: int, *, max_vertices: int = GENERATE_MAX_VERTICES) -> tuple[Graph, ...]:
    """All isomorphism classes on n vertices as canonical representatives,
    sorted by edge count then canonical key.  Cached per n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > max_vertices:
        raise ValueError(
            f"generation capped at {max_vertices} vertices, got {n}"
        )
    for k in range(1, n + 1):
        if k in _CLASSES:
            continue
        seen: dict[str, Graph] = {}
        newbit = 1 << (k - 1)
        for parent in _CLASSES[k - 1]:
            prows = parent.rows
            for mask in range(newbit):
                rows = tuple(
                    prows[v] | newbit if mask >> v & 1 else prows[v]
                    for v in range(k - 1)
                ) + (mask,)
                child = Graph._make(k, rows)
                key = canonical_key(child)
                if key not in seen:
                    rep = canonical_form(child)
                    _seed_key_cache(rep, key)
                    seen[key] = rep
        reps = sorted(seen.values(), key=lambda g: (g.num_edges, canonical_key(g)))
        _CLASSES[k] = tuple(reps)
    return _CLASSES[n]
