"""Mining minimal forbidden induced subgraphs for pivot-minor containment.

For a fixed target h, the h-pivot-minor-free graphs form a hereditary
class, so its boundary is the set of graphs that contain h as a
pivot-minor while every one-vertex-deleted subgraph does not.  mine()
sweeps every isomorphism class up to a given order and collects exactly
those graphs.  check_bound() compares a sweep against the proved order
bounds for the four structured target families.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .canon import canonical_key
from .catalog import complete_multipartite, cycle_graph, path_graph, star_graph
from .containment import PivotMinorCache, Verdict, contains_pivot_minor
from .generate import generate_all_graphs
from .graphs import Graph, delete_vertex, disjoint_union
from .io import from_graph6, to_graph6


@dataclass
class ObstructionSet:
    """Result of a mining sweep: minimal obstructions up to an order cap."""

    target_name: str
    target_key: str
    complete_up_to: int
    members: tuple[Graph, ...]
    inconclusive: tuple[Graph, ...] = ()

    @property
    def member_keys(self) -> tuple[str, ...]:
        return tuple(canonical_key(g) for g in self.members)

    def max_member_order(self) -> int | None:
        return max((g.n for g in self.members), default=None)


def is_minimal_obstruction(
    g: Graph, h: Graph, *, cache: PivotMinorCache | None = None
) -> Verdict:
    """Does g contain h as a pivot-minor while no g - v does?"""
    top = contains_pivot_minor(g, h, cache=cache)
    if top is not Verdict.TRUE:
        return top
    saw_inconclusive = False
    for v in range(g.n):
        sub = contains_pivot_minor(delete_vertex(g, v), h, cache=cache)
        if sub is Verdict.TRUE:
            return Verdict.FALSE
        if sub is Verdict.INCONCLUSIVE:
            saw_inconclusive = True
    return Verdict.INCONCLUSIVE if saw_inconclusive else Verdict.TRUE


def mine(
    h: Graph,
    n_max: int,
    *,
    target_name: str | None = None,
    cache: PivotMinorCache | None = None,
    workers: int = 1,
) -> ObstructionSet:
    """Every minimal obstruction for h-pivot-minor-freeness with at most
    n_max vertices.

    Sweeps orders smallest first so the shared cache already holds all
    child verdicts when an order is processed.  Graphs whose verdict hit a
    resource limit are reported in `inconclusive`, never dropped.
    """
    if cache is None:
        cache = PivotMinorCache()
    if h.n == 0:
        raise ValueError("the empty target is a pivot-minor of everything")
    members: list[Graph] = []
    unresolved: list[Graph] = []

    def judge(g: Graph) -> tuple[Graph, Verdict]:
        return g, is_minimal_obstruction(g, h, cache=cache)

    for n in range(h.n, n_max + 1):
        level = generate_all_graphs(n)
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(judge, level))
        else:
            results = [judge(g) for g in level]
        for g, verdict in results:
            if verdict is Verdict.TRUE:
                members.append(g)
            elif verdict is Verdict.INCONCLUSIVE:
                unresolved.append(g)
    return ObstructionSet(
        target_name=target_name or to_graph6(h),
        target_key=canonical_key(h),
        complete_up_to=n_max,
        members=tuple(members),
        inconclusive=tuple(unresolved),
    )


# -- persistence -----------------------------------------------------------

def save_obstruction_set(obs: ObstructionSet, directory: str | Path) -> None:
    from . import __version__

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    lines = "".join(key + "\n" for key in sorted(obs.member_keys))
    (directory / "members.g6").write_text(lines)
    manifest = {
        "target_name": obs.target_name,
        "target_key": obs.target_key,
        "complete_up_to": obs.complete_up_to,
        "member_count": len(obs.members),
        "inconclusive_count": len(obs.inconclusive),
        "members_sha256": hashlib.sha256(lines.encode()).hexdigest(),
        "tool": {"name": "pivotminors", "version": __version__},
    }
    if obs.inconclusive:
        (directory / "inconclusive.g6").write_text(
            "".join(canonical_key(g) + "\n" for g in obs.inconclusive)
        )
    (directory / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")


def load_obstruction_set(directory: str | Path) -> ObstructionSet:
    directory = Path(directory)
    manifest = json.loads((directory / "manifest.json").read_text())
    lines = (directory / "members.g6").read_text()
    digest = hashlib.sha256(lines.encode()).hexdigest()
    if digest != manifest["members_sha256"]:
        raise ValueError("members.g6 does not match the manifest checksum")
    members = tuple(from_graph6(s) for s in lines.split())
    inconclusive: tuple[Graph, ...] = ()
    inc_path = directory / "inconclusive.g6"
    if inc_path.exists():
        inconclusive = tuple(from_graph6(s) for s in inc_path.read_text().split())
    return ObstructionSet(
        target_name=manifest["target_name"],
        target_key=manifest["target_key"],
        complete_up_to=manifest["complete_up_to"],
        members=members,
        inconclusive=inconclusive,
    )


def diff_obstruction_sets(a: ObstructionSet, b: ObstructionSet) -> dict:
    """Keys present in one set but not the other, plus metadata mismatches."""
    ka, kb = set(a.member_keys), set(b.member_keys)
    return {
        "target_match": a.target_key == b.target_key,
        "same_depth": a.complete_up_to == b.complete_up_to,
        "only_in_first": sorted(ka - kb),
        "only_in_second": sorted(kb - ka),
    }


# -- structured families and their proved order bounds ---------------------

BOUND_FAMILIES = ("tP1", "P2+tP1", "K1,t", "P3+tP1")


def family_target(family: str, t: int) -> Graph:
    if family == "tP1":
        if t < 1:
            raise ValueError("tP1 needs t >= 1")
        return Graph(t)
    if family == "P2+tP1":
        if t < 1:
            raise ValueError("P2+tP1 needs t >= 1")
        return disjoint_union(path_graph(2), Graph(t))
    if family == "P3+tP1":
        if t < 1:
            raise ValueError("P3+tP1 needs t >= 1")
        return disjoint_union(path_graph(3), Graph(t))
    if family == "K1,t":
        if t < 2:
            raise ValueError("the star bound is proved for t >= 2 only")
        return star_graph(t)
    raise ValueError(f"unknown family {family!r}, pick one of {BOUND_FAMILIES}")


def obstruction_order_bound(family: str, t: int) -> int:
    """Largest possible order of a minimal obstruction for the family."""
    family_target(family, t)  # validates family name and t range
    if family == "tP1":
        return 2 ** t - 1
    if family == "P2+tP1":
        return (t + 1) * (2 ** (t + 2) - t - 2)
    if family == "K1,t":
        return (t * t - 1) * (2 ** (t + 1) - t - 3) + 2 * t + 2
    return (t + 1) * (2 ** (t + 3) - t - 4) + 2


@dataclass
class BoundRecord:
    """Outcome of checking a mined sweep against a proved order bound."""

    family: str
    t: int
    bound: int
    n_max: int
    observed_max_order: int | None
    member_count: int
    covered: bool  # n_max reached the bound, so the sweep is exhaustive
    bound_respected: bool
    inconclusive_count: int
    obstructions: ObstructionSet = field(repr=False)

    def coverage_statement(self) -> str:
        if self.covered:
            return (
                f"sweep to n={self.n_max} covers the proved bound "
                f"{self.bound}; the obstruction set is complete"
            )
        return (
            f"sweep stops at n={self.n_max}, below the proved bound "
            f"{self.bound}; obstructions above n={self.n_max} may be missing"
        )


def check_bound(
    family: str,
    t: int,
    n_max: int,
    *,
    cache: PivotMinorCache | None = None,
    workers: int = 1,
) -> BoundRecord:
    """Mine the family target up to n_max and compare with the bound."""
    h = family_target(family, t)
    bound = obstruction_order_bound(family, t)
    obs = mine(h, n_max, target_name=f"{family}[t={t}]", cache=cache,
               workers=workers)
    observed = obs.max_member_order()
    return BoundRecord(
        family=family,
        t=t,
        bound=bound,
        n_max=n_max,
        observed_max_order=observed,
        member_count=len(obs.members),
        covered=n_max >= bound,
        bound_respected=observed is None or observed <= bound,
        inconclusive_count=len(obs.inconclusive),
        obstructions=obs,
    )


# -- two infinite families known to stay minimal ----------------------------

def family_k4(a: int, b: int, path_len: int) -> Graph:
    """Two odd cycles C_a and C_b joined by a path with path_len edges;
    path_len 0 means the cycles share one vertex.

    Every member is a minimal obstruction for K4-pivot-minor-freeness.
    """
    if a < 3 or a % 2 == 0 or b < 3 or b % 2 == 0:
        raise ValueError("cycle lengths must be odd and at least 3")
    if path_len < 0:
        raise ValueError("path length must be nonnegative")
    edges = [(i, (i + 1) % a) for i in range(a)]
    if path_len == 0:
        # second cycle reuses vertex a-1
        ring = [a - 1] + list(range(a, a + b - 1))
    else:
        inner = list(range(a, a + path_len - 1))
        chain = [a - 1] + inner + [a + path_len - 1]
        edges += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
        start = a + path_len - 1
        ring = [start] + list(range(start + 1, start + b))
    edges += [(ring[i], ring[(i + 1) % b]) for i in range(b)]
    return Graph(max(max(e) for e in edges) + 1, edges)


def family_c3p1(k: int) -> Graph:
    """C_k plus one isolated vertex, k odd; minimal obstructions for
    (C3+P1)-pivot-minor-freeness."""
    if k < 3 or k % 2 == 0:
        raise ValueError("k must be odd and at least 3")
    return disjoint_union(cycle_graph(k), Graph(1))


# -- constructors for the structure theorems --------------------------------

def clique_star(k: int, leaf_sizes: tuple[int, ...] | list[int] = ()) -> Graph:
    """A clique K_k joined completely to disjoint cliques of the given
    sizes, with no edges between those cliques."""
    if k < 1 or any(s < 1 for s in leaf_sizes):
        raise ValueError("clique sizes must be positive")
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    base = k
    for s in leaf_sizes:
        part = range(base, base + s)
        edges += [(i, j) for i in part for j in part if i < j]
        edges += [(i, j) for i in range(k) for j in part]
        base += s
    return Graph(base, edges)


def leaf_attached_multipartite(
    class_sizes: tuple[int, ...] | list[int],
    leaves: dict[int, int] | None = None,
) -> Graph:
    """A complete multipartite graph with pendant leaves attached to
    singleton classes; leaves maps class index -> leaf count and may only
    name classes of size one."""
    g = complete_multipartite(class_sizes)
    if not leaves:
        return g
    offsets = []
    base = 0
    for s in class_sizes:
        offsets.append(base)
        base += s
    edges = list(g.edges())
    extra = base
    for idx, count in sorted(leaves.items()):
        if class_sizes[idx] != 1:
            raise ValueError(f"class {idx} is not a singleton")
        if count < 0:
            raise ValueError("leaf counts must be nonnegative")
        for _ in range(count):
            edges.append((offsets[idx], extra))
            extra += 1
    return Graph(extra, edges)
