"""List coloring reconfiguration instances, normalization, and witnesses.

An instance bundles a graph, one color list per vertex, and two endpoint
colorings f0 and fr.  Colorings are tuples indexed by vertex.  A recoloring
sequence is a list of (vertex, color) steps; every intermediate coloring must
stay a proper list coloring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    InfeasibleList,
    InvalidSequence,
    NotCaterpillar,
    OutOfRange,
    PartialColoring,
)
from .graph import CaterpillarStructure, Graph, recognize_caterpillar

Coloring = tuple[int, ...]
Step = tuple[int, int]


@dataclass(frozen=True)
class LcrInstance:
    graph: Graph
    lists: tuple[frozenset[int], ...]
    f0: Coloring
    fr: Coloring

    def __post_init__(self):
        n = self.graph.n
        if len(self.lists) != n:
            raise ValueError("need exactly one color list per vertex")
        if any(not lst for lst in self.lists):
            raise ValueError("color lists must be nonempty")
        if len(self.f0) != n or len(self.fr) != n:
            raise ValueError("endpoint colorings must be total")

    @property
    def num_colors(self) -> int:
        """Size of the smallest dense color universe containing every list."""
        return 1 + max((max(lst) for lst in self.lists), default=-1)


def make_instance(graph, lists, f0, fr) -> LcrInstance:
    """Convenience constructor accepting plain iterables."""
    return LcrInstance(
        graph,
        tuple(frozenset(lst) for lst in lists),
        tuple(f0),
        tuple(fr),
    )


def is_proper_list_coloring(inst: LcrInstance, f: Sequence[int]) -> bool:
    """True if f colors every vertex from its own list with no monochromatic edge."""
    if len(f) != inst.graph.n:
        raise PartialColoring(
            f"coloring assigns {len(f)} of {inst.graph.n} vertices"
        )
    if any(f[v] not in inst.lists[v] for v in range(inst.graph.n)):
        return False
    return all(f[u] != f[v] for u, v in inst.graph.edges)


@dataclass(frozen=True)
class SingletonRemoval:
    """Vertex with a one-color list was deleted; that color left the
    neighbors' lists.  ``affected`` holds the neighbors whose lists shrank."""

    vertex: int
    color: int
    affected: tuple[int, ...]


@dataclass(frozen=True)
class RichListRemoval:
    """Vertex with at least degree+2 list colors was deleted; lists unchanged."""

    vertex: int


Removal = Union[SingletonRemoval, RichListRemoval]


@dataclass(frozen=True)
class NormalizationTrace:
    """Ordered removal log plus the old-to-new map for surviving vertices."""

    removals: tuple[Removal, ...]
    id_map: dict[int, int]


def normalize(inst: LcrInstance) -> tuple[LcrInstance, NormalizationTrace]:
    """Trim the instance until every list size lies in [2, degree+1].

    One-color vertices are deleted (their forced color leaves the neighbors'
    lists) until none remain; then one vertex whose list exceeds its current
    degree plus one is deleted; the two phases repeat to a fixpoint.  The
    answer to the reconfiguration question is unchanged, and the returned
    trace lets witnesses found on the trimmed instance be lifted back.
    Raises InfeasibleList when a list empties, which certifies that f0 and fr
    could not both have been proper.
    """
    n = inst.graph.n
    alive = set(range(n))
    lists = {v: set(inst.lists[v]) for v in range(n)}
    adj = {v: set(inst.graph.neighbors(v)) for v in range(n)}
    removals: list[Removal] = []

    def remove_vertex(v: int):
        alive.discard(v)
        for u in adj[v]:
            adj[u].discard(v)
        del adj[v], lists[v]

    changed = True
    while changed:
        changed = False
        while True:
            singles = [v for v in alive if len(lists[v]) == 1]
            if not singles:
                break
            v = min(singles)
            (c,) = lists[v]
            if inst.f0[v] != c or inst.fr[v] != c:
                raise InfeasibleList(
                    f"vertex {v} is pinned to color {c} but an endpoint differs"
                )
            affected = sorted(u for u in adj[v] if c in lists[u])
            for u in affected:
                lists[u].discard(c)
                if not lists[u]:
                    raise InfeasibleList(
                        f"list of vertex {u} emptied while trimming"
                    )
            remove_vertex(v)
            removals.append(SingletonRemoval(v, c, tuple(affected)))
            changed = True
        rich = [v for v in alive if len(lists[v]) >= len(adj[v]) + 2]
        if rich:
            v = min(rich)
            remove_vertex(v)
            removals.append(RichListRemoval(v))
            changed = True

    if not removals:
        return inst, NormalizationTrace((), {v: v for v in range(n)})

    kept = sorted(alive)
    id_map = {v: i for i, v in enumerate(kept)}
    sub, _ = inst.graph.induced_subgraph(kept)
    trimmed = LcrInstance(
        sub,
        tuple(frozenset(lists[v]) for v in kept),
        tuple(inst.f0[v] for v in kept),
        tuple(inst.fr[v] for v in kept),
    )
    return trimmed, NormalizationTrace(tuple(removals), id_map)


@dataclass
class _TrimState:
    """Vertex set and lists right before one recorded removal."""

    alive: set[int]
    lists: dict[int, frozenset[int]]


def _replay_states(original: LcrInstance, trace: NormalizationTrace) -> list[_TrimState]:
    """States[j] is the instance (original ids) after the first j removals."""
    alive = set(range(original.graph.n))
    lists = {v: original.lists[v] for v in alive}
    states = [_TrimState(set(alive), dict(lists))]
    for rem in trace.removals:
        if isinstance(rem, SingletonRemoval):
            for u in rem.affected:
                lists[u] = lists[u] - {rem.color}
        alive.discard(rem.vertex)
        del lists[rem.vertex]
        states.append(_TrimState(set(alive), dict(lists)))
    return states


def trimmed_instance(original: LcrInstance, trace: NormalizationTrace) -> LcrInstance:
    """Rebuild the normalized instance by replaying the trace."""
    final = _replay_states(original, trace)[-1]
    kept = sorted(final.alive)
    sub, _ = original.graph.induced_subgraph(kept)
    return LcrInstance(
        sub,
        tuple(final.lists[v] for v in kept),
        tuple(original.f0[v] for v in kept),
        tuple(original.fr[v] for v in kept),
    )


def lift_sequence(
    trace: NormalizationTrace,
    original: LcrInstance,
    seq: Sequence[Step],
) -> list[Step]:
    """Translate a witness for the normalized instance back to the original.

    Deleted one-color vertices simply keep their forced color.  For a deleted
    rich-list vertex v, whenever the sequence is about to recolor a neighbor
    of v to v's current color, an extra step first moves v to the lowest
    color of its list at removal time that avoids that color and all current
    neighbor colors; such a color exists because the list exceeded the degree
    by two.  A final step per rich-list vertex moves it to its fr color.
    """
    states = _replay_states(original, trace)
    trimmed = trimmed_instance(original, trace)
    if not is_valid_sequence(trimmed, seq):
        raise InvalidSequence("sequence is not valid on the normalized instance")

    new_to_old = {new: old for old, new in trace.id_map.items()}
    lifted = [(new_to_old[v], c) for v, c in seq]

    for j in range(len(trace.removals), 0, -1):
        rem = trace.removals[j - 1]
        if isinstance(rem, SingletonRemoval):
            continue
        before = states[j - 1]
        v = rem.vertex
        nbrs = [u for u in original.graph.neighbors(v) if u in before.alive]
        pool = sorted(before.lists[v])
        cur = {u: original.f0[u] for u in before.alive}
        out: list[Step] = []
        for u, c in lifted:
            if u in nbrs and cur[v] == c:
                blocked = {c} | {cur[x] for x in nbrs}
                c_star = next(col for col in pool if col not in blocked)
                out.append((v, c_star))
                cur[v] = c_star
            out.append((u, c))
            cur[u] = c
        if cur[v] != original.fr[v]:
            out.append((v, original.fr[v]))
        lifted = out

    return lifted


def is_valid_sequence(inst: LcrInstance, seq: Sequence[Step]) -> bool:
    """True if seq transforms f0 into fr through proper list colorings.

    Every step must change exactly one vertex to a different color from its
    list without clashing with a neighbor.
    """
    if not is_proper_list_coloring(inst, inst.f0):
        return False
    cur = list(inst.f0)
    for v, c in seq:
        if not 0 <= v < inst.graph.n:
            return False
        if c == cur[v] or c not in inst.lists[v]:
            return False
        if any(cur[u] == c for u in inst.graph.neighbors(v)):
            return False
        cur[v] = c
    return tuple(cur) == inst.fr


def restrict(
    inst: LcrInstance,
    f: Sequence[int],
    prefix_size: int,
    structure: Optional[CaterpillarStructure] = None,
) -> dict[int, int]:
    """Restriction of f to the first prefix_size vertices of the solver ordering."""
    if structure is None:
        structure = recognize_caterpillar(inst.graph)
        if structure is None:
            raise NotCaterpillar("restriction needs a caterpillar ordering")
    if not 1 <= prefix_size <= inst.graph.n:
        raise OutOfRange(f"prefix size {prefix_size} outside 1..{inst.graph.n}")
    if len(f) != inst.graph.n:
        raise PartialColoring("restriction needs a total coloring")
    return {v: f[v] for v in structure.ordering[:prefix_size]}


def induced_instance(
    inst: LcrInstance, vertices: Iterable[int]
) -> tuple[LcrInstance, dict[int, int]]:
    """Sub-instance induced on the given vertices, with the old-to-new map."""
    sub, id_map = inst.graph.induced_subgraph(vertices)
    kept = sorted(id_map, key=id_map.get)
    return (
        LcrInstance(
            sub,
            tuple(inst.lists[v] for v in kept),
            tuple(inst.f0[v] for v in kept),
            tuple(inst.fr[v] for v in kept),
        ),
        id_map,
    )
