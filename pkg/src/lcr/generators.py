"""Seeded random instance generators.

All generators draw from ``random.Random(seed)`` so a 64-bit seed pins the
output exactly; serializers record the seed in a header comment.
"""

from __future__ import annotations

import random
from typing import Optional

from .errors import GenerationFailed
from .graph import Graph
from .instance import LcrInstance
from .rerouting import SprInstance, build_spr_instance

MAX_TRIES = 200


def _greedy_coloring(
    g: Graph, lists, rng: random.Random, order=None
) -> Optional[tuple[int, ...]]:
    """Random proper list coloring, greedily along the given vertex order."""
    if order is None:
        order = list(range(g.n))
        rng.shuffle(order)
    coloring: dict[int, int] = {}
    for v in order:
        free = sorted(
            c for c in lists[v]
            if all(coloring.get(u) != c for u in g.neighbors(v))
        )
        if not free:
            return None
        coloring[v] = rng.choice(free)
    return tuple(coloring[v] for v in range(g.n))


def gen_caterpillar(
    spine_len: int,
    leaf_prob: float = 0.5,
    colors: int = 4,
    list_range: tuple[int, int] = (2, 3),
    seed: int = 0,
    leaves_per_spine: Optional[int] = None,
) -> LcrInstance:
    """Random normalized caterpillar instance.

    Spine vertices 0..spine_len-1 form a path; each gets either exactly
    ``leaves_per_spine`` leaves or a run of leaves drawn with probability
    ``leaf_prob``.  List sizes are drawn from ``list_range`` and clamped to
    [2, degree+1], so the instance is already normalized; leaves always end
    up with two colors.  Endpoint colorings come from independent randomized
    greedy runs, which always succeed on trees.
    """
    if spine_len < 1:
        raise ValueError("spine length must be positive")
    if colors < 2:
        raise ValueError("need at least two colors")
    rng = random.Random(seed)
    lo, hi = list_range
    if not 2 <= lo <= hi:
        raise ValueError("list size range must be within [2, ...]")

    edges = [(v, v + 1) for v in range(spine_len - 1)]
    nxt = spine_len
    for v in range(spine_len):
        if leaves_per_spine is not None:
            count = leaves_per_spine
        else:
            count = 0
            while count < 4 and rng.random() < leaf_prob:
                count += 1
        for _ in range(count):
            edges.append((v, nxt))
            nxt += 1
    g = Graph(nxt, edges)

    lists = []
    for v in range(g.n):
        top = 2 if g.n == 1 else min(g.degree(v) + 1, colors)
        size = max(2, min(rng.randint(lo, hi), top))
        lists.append(frozenset(rng.sample(range(colors), size)))

    # vertex ids are parent-first here (spine path, then leaves), so greedy
    # coloring in id order sees at most one colored neighbor and cannot fail
    order = list(range(g.n))
    f0 = _greedy_coloring(g, lists, rng, order)
    fr = _greedy_coloring(g, lists, rng, order)
    if f0 is None or fr is None:
        raise GenerationFailed("could not color the caterpillar")
    return LcrInstance(g, tuple(lists), f0, fr)


def gen_random_instance(
    n: int,
    edge_prob: float = 0.35,
    colors: int = 4,
    list_range: tuple[int, int] = (1, 4),
    seed: int = 0,
) -> LcrInstance:
    """Random instance on an arbitrary graph, not necessarily normalized.

    List sizes may be 1 (forced colors) or exceed degree+1, so normalization
    has real work to do.  Regenerates until both endpoint colorings exist.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    lo, hi = list_range
    for _ in range(MAX_TRIES):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < edge_prob
        ]
        g = Graph(n, edges)
        lists = [
            frozenset(rng.sample(range(colors), min(rng.randint(lo, hi), colors)))
            for _ in range(n)
        ]
        f0 = _greedy_coloring(g, lists, rng)
        fr = _greedy_coloring(g, lists, rng)
        if f0 is not None and fr is not None:
            return LcrInstance(g, tuple(lists), f0, fr)
    raise GenerationFailed("could not find proper endpoint colorings")


def gen_layered_spr(
    depth: int,
    max_width: int = 3,
    density: float = 0.6,
    seed: int = 0,
) -> SprInstance:
    """Random layered rerouting instance, already in pruned form.

    Interior layers get 1..max_width vertices; consecutive layers are joined
    with probability ``density`` plus one forced edge each way so that every
    vertex lies on a shortest path.  The endpoint paths are independent
    random walks down the layers.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    if max_width < 1:
        raise ValueError("layer width must be positive")
    rng = random.Random(seed)

    sizes = [1] + [rng.randint(1, max_width) for _ in range(depth - 1)] + [1]
    layers: list[list[int]] = []
    nxt = 0
    for size in sizes:
        layers.append(list(range(nxt, nxt + size)))
        nxt += size
    edges: set[tuple[int, int]] = set()
    for i in range(depth):
        a, b = layers[i], layers[i + 1]
        for u in a:
            for v in b:
                if rng.random() < density:
                    edges.add((u, v))
        for u in a:
            if not any((u, v) in edges for v in b):
                edges.add((u, rng.choice(b)))
        for v in b:
            if not any((u, v) in edges for u in a):
                edges.add((rng.choice(a), v))
    g = Graph(nxt, sorted(edges))

    def random_walk() -> list[int]:
        path = [layers[0][0]]
        for i in range(depth):
            options = [v for v in g.neighbors(path[-1]) if v in set(layers[i + 1])]
            path.append(rng.choice(options))
        return path

    s, t = layers[0][0], layers[depth][0]
    inst = build_spr_instance(g, s, t, random_walk(), random_walk())
    if inst.graph.n != g.n or inst.d != depth:
        raise GenerationFailed("layered construction lost vertices")
    return inst
