"""Shared builders and independent reference checks for the test suite.

The reference implementations here deliberately take different routes than
the package (forbidden-substructure counting instead of spine walking,
itertools.product instead of pruned backtracking, a per-layer counting pass
instead of DFS enumeration) so they can act as oracles for it.
"""

from __future__ import annotations

import heapq
import itertools
import random
from typing import Iterator, Sequence

from lcr import Graph, LcrInstance
from lcr.errors import GenerationFailed
from lcr.generators import gen_caterpillar, gen_layered_spr
from lcr.oracle import state_space_size
from lcr.reduction import ReducedInstance, compile_spr
from lcr.rerouting import SprInstance


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaf_count: int) -> Graph:
    return Graph(leaf_count + 1, [(0, i) for i in range(1, leaf_count + 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def tree_from_prufer(seq: Sequence[int], n: int) -> Graph:
    """Labeled tree on n >= 2 vertices decoded from a Prufer sequence."""
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        u = heapq.heappop(leaves)
        edges.append((u, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def all_labeled_trees(n: int) -> Iterator[Graph]:
    if n == 1:
        yield Graph(1, [])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield tree_from_prufer(seq, n)


def ref_is_caterpillar(g: Graph) -> bool:
    """Forbidden-substructure reference check.

    A tree fails to be a caterpillar exactly when some vertex has three
    neighbors that are themselves non-leaves (a spider center), so the check
    never has to find the spine.
    """
    if not g.is_connected() or g.m != g.n - 1:
        return False
    return all(
        sum(1 for w in g.neighbors(v) if g.degree(w) >= 2) <= 2
        for v in range(g.n)
    )


def ref_proper_colorings(g: Graph, lists) -> set[tuple[int, ...]]:
    """Brute product-then-filter enumeration; only for tiny instances."""
    out = set()
    for combo in itertools.product(*(sorted(lst) for lst in lists)):
        if all(combo[u] != combo[v] for u, v in g.edges):
            out.add(combo)
    return out


def ref_count_s_paths(inst: SprInstance) -> int:
    """Layer-by-layer path counting, independent of the DFS enumerator."""
    counts = {inst.s: 1}
    for i in range(1, inst.d + 1):
        counts = {
            v: sum(counts.get(u, 0) for u in inst.graph.neighbors(v))
            for v in inst.layers[i]
        }
    return counts.get(inst.t, 0)


def caterpillar_corpus(
    count: int,
    base_seed: int,
    max_n: int = 12,
    spine_range: tuple[int, int] = (1, 6),
    leaf_prob: float = 0.5,
    colors: int = 4,
) -> list[LcrInstance]:
    """Deterministic stream of small normalized caterpillar instances."""
    rng = random.Random(base_seed)
    out = []
    seed = base_seed
    while len(out) < count:
        seed += 1
        spine = rng.randint(*spine_range)
        inst = gen_caterpillar(
            spine, leaf_prob=leaf_prob, colors=colors, list_range=(2, 3), seed=seed
        )
        if inst.graph.n <= max_n:
            out.append(inst)
    return out


def layered_corpus(
    count: int,
    base_seed: int,
    depth_range: tuple[int, int] = (2, 5),
    max_width: int = 3,
    density_range: tuple[float, float] = (0.25, 0.7),
    max_states: int = 60_000,
) -> list[tuple[SprInstance, ReducedInstance]]:
    """Deterministic rerouting instances paired with their compiled form.

    Filtered so the compiled instance stays within easy oracle reach.
    """
    rng = random.Random(base_seed)
    out = []
    seed = base_seed
    while len(out) < count:
        seed += 1
        depth = rng.randint(*depth_range)
        density = rng.uniform(*density_range)
        try:
            spr = gen_layered_spr(
                depth, max_width=max_width, density=density, seed=seed
            )
        except GenerationFailed:
            continue
        red = compile_spr(spr)
        if state_space_size(red.lcr.lists) <= max_states:
            out.append((spr, red))
    return out
