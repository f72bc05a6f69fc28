"""Pivot-minor sequences, search for them, and verifiable certificates.

A sequence is a list of steps applied left to right.  Vertex labels in a
step always refer to the current graph: deleting vertex v slides every
higher label down by one, and later steps use the new labels.

A certificate pins down a containment claim so that a verifier can replay
it with no search: an ordered vertex subset of the input (whose induced
subgraph, taken in that order, is the named obstruction), a step list
turning that induced subgraph into the target, and the final bijection
onto the target, checked edge by edge.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .canon import canonical_key, isomorphism
from .containment import (
    DEFAULT_ORBIT_LIMIT,
    OrbitLimitError,
    PivotMinorCache,
    Verdict,
    contains_pivot_minor,
)
from .graphs import Graph, delete_vertex, induced_subgraph, pivot
from .io import to_graph6


@dataclass(frozen=True)
class PivotEdge:
    u: int
    v: int


@dataclass(frozen=True)
class DeleteVertex:
    v: int


Step = PivotEdge | DeleteVertex


class SequenceError(ValueError):
    """An inapplicable step; carries the 0-based step index."""

    def __init__(self, index: int, reason: str):
        super().__init__(f"step {index}: {reason}")
        self.index = index
        self.reason = reason


def apply_sequence(g: Graph, steps: Iterable[Step]) -> Graph:
    """Replay steps on g, validating each one."""
    cur = g
    for i, step in enumerate(steps):
        if isinstance(step, PivotEdge):
            if not (0 <= step.u < cur.n and 0 <= step.v < cur.n):
                raise SequenceError(i, f"pivot ({step.u}, {step.v}) out of range")
            if not cur.has_edge(step.u, step.v):
                raise SequenceError(i, f"pivot ({step.u}, {step.v}) is not an edge")
            cur = pivot(cur, step.u, step.v)
        elif isinstance(step, DeleteVertex):
            if not 0 <= step.v < cur.n:
                raise SequenceError(i, f"delete {step.v} out of range")
            cur = delete_vertex(cur, step.v)
        else:
            raise SequenceError(i, f"unknown step {step!r}")
    return cur


def steps_to_json(steps: Iterable[Step]) -> list[dict]:
    out = []
    for step in steps:
        if isinstance(step, PivotEdge):
            out.append({"op": "pivot", "u": step.u, "v": step.v})
        else:
            out.append({"op": "delete", "v": step.v})
    return out


def steps_from_json(data: Sequence[dict]) -> list[Step]:
    steps: list[Step] = []
    for i, obj in enumerate(data):
        op = obj.get("op")
        if op == "pivot":
            steps.append(PivotEdge(int(obj["u"]), int(obj["v"])))
        elif op == "delete":
            steps.append(DeleteVertex(int(obj["v"])))
        else:
            raise ValueError(f"step {i}: unknown op {op!r}")
    return steps


def find_pivot_minor_sequence(
    g: Graph,
    h: Graph,
    *,
    cache: PivotMinorCache | None = None,
    orbit_limit: int = DEFAULT_ORBIT_LIMIT,
) -> tuple[list[Step], list[int]] | None:
    """A step list carrying g onto an isomorphic copy of h, plus the final
    bijection (result vertex -> h vertex).

    Returns None when h is not a pivot-minor of g; raises OrbitLimitError
    when the answer is out of reach of the orbit limit.  Replays of the
    result are validated by the caller's tests rather than trusted.
    """
    verdict = contains_pivot_minor(g, h, cache=cache, orbit_limit=orbit_limit)
    if verdict is Verdict.INCONCLUSIVE:
        raise OrbitLimitError(orbit_limit)
    if verdict is Verdict.FALSE:
        return None

    steps: list[Step] = []
    cur = g
    # peel vertices while keeping containment, preferring plain deletion
    while cur.n > h.n:
        for v in range(cur.n):
            if contains_pivot_minor(delete_vertex(cur, v), h,
                                    cache=cache, orbit_limit=orbit_limit):
                steps.append(DeleteVertex(v))
                cur = delete_vertex(cur, v)
                break
            nb = cur.rows[v]
            if nb:
                z = (nb & -nb).bit_length() - 1
                pivoted = pivot(cur, z, v)
                if contains_pivot_minor(delete_vertex(pivoted, v), h,
                                        cache=cache, orbit_limit=orbit_limit):
                    steps.append(PivotEdge(z, v))
                    steps.append(DeleteVertex(v))
                    cur = delete_vertex(pivoted, v)
                    break
        else:
            raise AssertionError("containment held but no reduction worked")

    # same order: walk the pivot orbit of cur to an isomorphic copy of h
    kh = canonical_key(h)
    parents: dict[Graph, tuple[Graph, int, int] | None] = {cur: None}
    queue = [cur]
    found: Graph | None = None
    if canonical_key(cur) == kh:
        found = cur
    qi = 0
    while qi < len(queue) and found is None:
        node = queue[qi]
        qi += 1
        for u, v in node.edges():
            nxt = pivot(node, u, v)
            if nxt in parents:
                continue
            parents[nxt] = (node, u, v)
            if len(parents) > orbit_limit:
                raise OrbitLimitError(orbit_limit)
            if canonical_key(nxt) == kh:
                found = nxt
                break
            queue.append(nxt)
    if found is None:
        raise AssertionError("containment held but the orbit missed h")
    path: list[Step] = []
    node = found
    while parents[node] is not None:
        prev, u, v = parents[node]
        path.append(PivotEdge(u, v))
        node = prev
    steps.extend(reversed(path))
    iso = isomorphism(found, h)
    assert iso is not None
    return steps, iso


@dataclass
class Certificate:
    """A replayable witness that a graph contains a target pivot-minor."""

    input_graph6: str
    vertices: tuple[int, ...]
    steps: tuple[Step, ...]
    target_map: tuple[int, ...]
    obstruction_name: str | None
    obstruction_key: str
    target_key: str

    def to_json(self) -> dict:
        from . import __version__

        return {
            "format": "pivot-minor-certificate",
            "version": 1,
            "tool": {"name": "pivotminors", "version": __version__},
            "input": {
                "graph6": self.input_graph6,
                "sha256": hashlib.sha256(self.input_graph6.encode()).hexdigest(),
            },
            "vertices": list(self.vertices),
            "steps": steps_to_json(self.steps),
            "target_map": list(self.target_map),
            "obstruction": {
                "name": self.obstruction_name,
                "canonical_graph6": self.obstruction_key,
            },
            "target": {"canonical_graph6": self.target_key},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        if data.get("format") != "pivot-minor-certificate":
            raise ValueError("not a pivot-minor certificate")
        return cls(
            input_graph6=data["input"]["graph6"],
            vertices=tuple(int(v) for v in data["vertices"]),
            steps=tuple(steps_from_json(data["steps"])),
            target_map=tuple(int(v) for v in data["target_map"]),
            obstruction_name=data.get("obstruction", {}).get("name"),
            obstruction_key=data.get("obstruction", {}).get("canonical_graph6", ""),
            target_key=data.get("target", {}).get("canonical_graph6", ""),
        )

    @classmethod
    def loads(cls, text: str) -> "Certificate":
        return cls.from_json(json.loads(text))


def build_certificate(
    g: Graph,
    vertices: Sequence[int],
    steps: Sequence[Step],
    target_map: Sequence[int],
    target: Graph,
    obstruction_name: str | None = None,
) -> Certificate:
    sub = induced_subgraph(g, vertices)
    return Certificate(
        input_graph6=to_graph6(g),
        vertices=tuple(vertices),
        steps=tuple(steps),
        target_map=tuple(target_map),
        obstruction_name=obstruction_name,
        obstruction_key=canonical_key(sub),
        target_key=canonical_key(target),
    )


@dataclass
class VerificationResult:
    ok: bool
    step: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(g: Graph, cert: Certificate, target: Graph) -> VerificationResult:
    """Replay a certificate from scratch and check every claim in it.

    Deliberately reimplements the replay loop instead of sharing the
    search's bookkeeping; only the primitive graph operations are reused.
    """
    def fail(reason: str, step: int | None = None) -> VerificationResult:
        return VerificationResult(False, step, reason)

    if cert.input_graph6 != to_graph6(g):
        return fail("certificate was issued for a different input graph")
    vs = cert.vertices
    if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
        return fail("vertex subset is not a set of input vertices")
    cur = induced_subgraph(g, vs)
    if canonical_key(cur) != cert.obstruction_key:
        return fail("induced subgraph does not match the claimed obstruction")
    for i, step in enumerate(cert.steps):
        if isinstance(step, PivotEdge):
            u, v = step.u, step.v
            if not (0 <= u < cur.n and 0 <= v < cur.n and u != v):
                return fail(f"pivot ({u}, {v}) out of range", i)
            if not cur.has_edge(u, v):
                return fail(f"pivot ({u}, {v}) is not an edge", i)
            cur = pivot(cur, u, v)
        elif isinstance(step, DeleteVertex):
            v = step.v
            if not 0 <= v < cur.n:
                return fail(f"delete {v} out of range", i)
            cur = delete_vertex(cur, v)
        else:
            return fail(f"unknown step {step!r}", i)
    if cur.n != target.n:
        return fail(f"replay ends with {cur.n} vertices, target has {target.n}")
    phi = cert.target_map
    if sorted(phi) != list(range(target.n)):
        return fail("target map is not a bijection")
    if canonical_key(target) != cert.target_key:
        return fail("certificate was issued for a different target")
    for a in range(cur.n):
        for b in range(a + 1, cur.n):
            if cur.has_edge(a, b) != target.has_edge(phi[a], phi[b]):
                return fail(f"map breaks the pair ({a}, {b})")
    return VerificationResult(True)
