"""Compile shortest-path rerouting into list coloring reconfiguration.

Every interior layer i of the rerouting instance becomes one layer vertex
u_i whose color list mirrors layer i: color (i, j) stands for the j-th layer
vertex.  A proper coloring of the layer vertices therefore spells out one
candidate path; to force consecutive picks to be adjacent in the source
graph, every missing edge between consecutive interior layers gets a
forbidden vertex joined to u_i and u_{i+1} whose two-color list names
exactly that missing pair.  Layer-1 picks are always adjacent to s and
layer-(d-1) picks to t, so those gaps need no gadgets.  Rerouting sequences
and recoloring sequences translate into each other step by step.

The compiled graph is bipartite (layer vertices versus forbidden vertices)
and admits a width-2 path decomposition that walks the layers in order.
Adding a clique on the layer vertices and joining every forbidden vertex to
every layer vertex yields a threshold graph (weights 1 and 0, bound 1)
without changing the set of proper list colorings, since every added edge
joins vertices with disjoint lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DegenerateDistance,
    ImproperColoring,
    InvalidRerouting,
    InvalidSequence,
)
from .graph import Graph, PathDecomposition
from .instance import Coloring, LcrInstance, Step, is_proper_list_coloring, is_valid_sequence
from .rerouting import SPath, SprInstance, adjacent_s_paths, is_s_path


@dataclass(frozen=True)
class ForbiddenVertex:
    """Gadget vertex for the missing edge (layer, x) -- (layer+1, y)."""

    vertex: int
    layer: int
    x: int
    y: int


@dataclass(frozen=True)
class ReducedInstance:
    lcr: LcrInstance
    layer_vertices: tuple[int, ...]
    forbidden: tuple[ForbiddenVertex, ...]
    color_of: dict[tuple[int, int], int]
    pair_of: dict[int, tuple[int, int]]
    spr: SprInstance


def compile_spr(spr: SprInstance) -> ReducedInstance:
    """Build the equivalent list coloring reconfiguration instance.

    Layer vertex u_i takes id i-1; forbidden vertices follow, ordered by
    (layer, x, y).  Color ids are dense, layer by layer.  The start coloring
    paints u_i with p0's pick in layer i; each forbidden vertex then takes
    the lowest list color on neither neighbor (one of the two is always
    free, because its pair cannot sit on a path).  The target coloring comes
    from pr the same way.
    """
    d = spr.d
    if d <= 1:
        raise DegenerateDistance(f"distance {d} leaves nothing to compile")

    color_of: dict[tuple[int, int], int] = {}
    pair_of: dict[int, tuple[int, int]] = {}
    for i in range(1, d):
        for j in range(len(spr.layers[i])):
            c = len(color_of)
            color_of[(i, j)] = c
            pair_of[c] = (i, j)

    num_layer = d - 1
    index_in_layer = [
        {v: j for j, v in enumerate(layer)} for layer in spr.layers
    ]
    edges: list[tuple[int, int]] = []
    lists: list[frozenset[int]] = [
        frozenset(color_of[(i, j)] for j in range(len(spr.layers[i])))
        for i in range(1, d)
    ]
    forbidden: list[ForbiddenVertex] = []
    for i in range(1, d - 1):
        for x, vx in enumerate(spr.layers[i]):
            for y, vy in enumerate(spr.layers[i + 1]):
                if spr.graph.has_edge(vx, vy):
                    continue
                w = num_layer + len(forbidden)
                forbidden.append(ForbiddenVertex(w, i, x, y))
                edges.append((i - 1, w))
                edges.append((i, w))
                lists.append(
                    frozenset((color_of[(i, x)], color_of[(i + 1, y)]))
                )

    g = Graph(num_layer + len(forbidden), edges)

    def endpoint(path: SPath) -> Coloring:
        f = [0] * g.n
        for i in range(1, d):
            f[i - 1] = color_of[(i, index_in_layer[i][path[i]])]
        for fv in forbidden:
            a = color_of[(fv.layer, fv.x)]
            b = color_of[(fv.layer + 1, fv.y)]
            choices = [
                c for c in sorted((a, b))
                if c != f[fv.layer - 1] and c != f[fv.layer]
            ]
            f[fv.vertex] = choices[0]
        return tuple(f)

    inst = LcrInstance(g, tuple(lists), endpoint(spr.p0), endpoint(spr.pr))
    return ReducedInstance(
        inst,
        tuple(range(num_layer)),
        tuple(forbidden),
        color_of,
        pair_of,
        spr,
    )


@dataclass(frozen=True)
class ThresholdWitness:
    """Vertex weights plus bound certifying a threshold graph."""

    weights: tuple[int, ...]
    bound: int

    def verify(self, g: Graph) -> bool:
        """Edges must be exactly the pairs whose weights sum to the bound."""
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if (self.weights[u] + self.weights[v] >= self.bound) != g.has_edge(u, v):
                    return False
        return True


def to_threshold(red: ReducedInstance) -> tuple[LcrInstance, ThresholdWitness]:
    """Complete the layer vertices into a clique and join them to the rest.

    Layer vertices weigh 1, forbidden vertices 0, bound 1.  Every edge this
    adds joins vertices whose lists are disjoint, so the proper list
    colorings, and hence the reconfiguration answer, are untouched.
    """
    base = red.lcr
    edges = set(base.graph.edges)
    for a in red.layer_vertices:
        for b in red.layer_vertices:
            if a < b:
                edges.add((a, b))
        for fv in red.forbidden:
            pair = (a, fv.vertex) if a < fv.vertex else (fv.vertex, a)
            edges.add(pair)
    g = Graph(base.graph.n, sorted(edges))
    layer_set = set(red.layer_vertices)
    weights = tuple(1 if v in layer_set else 0 for v in range(g.n))
    inst = LcrInstance(g, base.lists, base.f0, base.fr)
    return inst, ThresholdWitness(weights, 1)


def emit_path_decomposition(red: ReducedInstance) -> PathDecomposition:
    """Width <= 2 path decomposition walking the layer vertices in order.

    For each consecutive layer pair we list one bag per forbidden vertex
    between them, then a two-vertex connector bag.  A distance-2 instance has
    a single layer vertex and gets the one singleton bag.
    """
    d = red.spr.d
    if d == 2:
        return PathDecomposition((frozenset({0}),))
    by_layer: dict[int, list[ForbiddenVertex]] = {}
    for fv in red.forbidden:
        by_layer.setdefault(fv.layer, []).append(fv)
    bags: list[frozenset[int]] = []
    for i in range(1, d - 1):
        u, w = i - 1, i
        for fv in by_layer.get(i, ()):
            bags.append(frozenset({u, w, fv.vertex}))
        bags.append(frozenset({u, w}))
    return PathDecomposition(tuple(bags))


def coloring_to_spath(red: ReducedInstance, f: Sequence[int]) -> SPath:
    """Read the encoded shortest path off a proper coloring."""
    if not is_proper_list_coloring(red.lcr, f):
        raise ImproperColoring("only proper colorings encode paths")
    spr = red.spr
    path = [spr.s]
    for i in range(1, spr.d):
        layer, j = red.pair_of[f[i - 1]]
        path.append(spr.layers[layer][j])
    path.append(spr.t)
    return tuple(path)


def spath_sequence_to_recoloring(
    red: ReducedInstance, seq: Sequence[SPath]
) -> list[Step]:
    """Expand a rerouting sequence into a recoloring witness.

    For each swap at layer i, forbidden neighbors of u_i sitting on the
    incoming color first dodge to their other list color; then u_i moves.
    After the last swap the forbidden vertices are recolored to match fr.
    """
    spr = red.spr
    if (
        not seq
        or tuple(seq[0]) != spr.p0
        or tuple(seq[-1]) != spr.pr
        or any(not is_s_path(spr, p) for p in seq)
        or any(
            not adjacent_s_paths(p, q) for p, q in zip(seq, seq[1:])
        )
    ):
        raise InvalidRerouting("not a rerouting sequence between p0 and pr")

    index_in_layer = [
        {v: j for j, v in enumerate(layer)} for layer in spr.layers
    ]
    nbr_forbidden: dict[int, list[ForbiddenVertex]] = {
        u: [] for u in red.layer_vertices
    }
    for fv in red.forbidden:
        nbr_forbidden[fv.layer - 1].append(fv)
        nbr_forbidden[fv.layer].append(fv)

    cur = list(red.lcr.f0)
    steps: list[Step] = []

    def recolor(v: int, c: int):
        if cur[v] != c:
            cur[v] = c
            steps.append((v, c))

    for p, q in zip(seq, seq[1:]):
        (i,) = [k for k in range(1, spr.d) if p[k] != q[k]]
        u = i - 1
        target = red.color_of[(i, index_in_layer[i][q[i]])]
        for fv in nbr_forbidden[u]:
            if cur[fv.vertex] == target:
                a = red.color_of[(fv.layer, fv.x)]
                b = red.color_of[(fv.layer + 1, fv.y)]
                recolor(fv.vertex, b if cur[fv.vertex] == a else a)
        recolor(u, target)
    for fv in red.forbidden:
        recolor(fv.vertex, red.lcr.fr[fv.vertex])
    return steps


def recoloring_to_spath_sequence(
    red: ReducedInstance, steps: Sequence[Step]
) -> list[SPath]:
    """Project a recoloring witness back onto its rerouting sequence.

    Only steps on layer vertices move the encoded path; runs of forbidden
    recolorings collapse away.
    """
    if not is_valid_sequence(red.lcr, steps):
        raise InvalidSequence("not a valid recoloring sequence for the instance")
    layer_set = set(red.layer_vertices)
    cur = list(red.lcr.f0)
    seq = [coloring_to_spath(red, cur)]
    for v, c in steps:
        cur[v] = c
        if v in layer_set:
            p = coloring_to_spath(red, cur)
            if p != seq[-1]:
                seq.append(p)
    return seq
