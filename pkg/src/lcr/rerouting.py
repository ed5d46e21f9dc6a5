"""Shortest-path rerouting on layered graphs.

A shortest s-t path is rerouted by swapping one vertex at a time while every
intermediate path stays shortest.  With d the s-t distance, layer i holds the
vertices at distance i from s and d-i from t; a shortest path picks exactly
one vertex per layer, and two shortest paths are adjacent when they differ in
exactly one pick.  Vertices outside every layer can never appear on a
shortest path, so instances are pruned down to the layered part up front.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import Disconnected, StateSpaceTooLarge
from .graph import Graph

SPath = tuple[int, ...]

DEFAULT_PATH_CAP = 100_000


def _bfs_dist(g: Graph, start: int) -> list[int]:
    dist = [-1] * g.n
    dist[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] == -1:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def compute_layers(
    g: Graph, s: int, t: int
) -> tuple[int, tuple[tuple[int, ...], ...], Graph, dict[int, int]]:
    """Distance, layers, and the graph pruned to the layered vertices.

    Layer i collects the vertices at distance i from s and d-i from t; only
    those can lie on a shortest s-t path.  Returns (d, layers, pruned graph,
    old-to-new id map) with the layers in pruned ids.
    """
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise ValueError("endpoint out of range")
    dist_s = _bfs_dist(g, s)
    if dist_s[t] == -1:
        raise Disconnected(f"no path between {s} and {t}")
    d = dist_s[t]
    dist_t = _bfs_dist(g, t)
    keep = [v for v in range(g.n) if dist_s[v] != -1 and dist_s[v] + dist_t[v] == d]
    pruned, id_map = g.induced_subgraph(keep)
    layers: list[list[int]] = [[] for _ in range(d + 1)]
    for v in keep:
        layers[dist_s[v]].append(id_map[v])
    return d, tuple(tuple(sorted(layer)) for layer in layers), pruned, id_map


@dataclass(frozen=True)
class SprInstance:
    """Pruned rerouting instance: graph, endpoints, the two paths, layers."""

    graph: Graph
    s: int
    t: int
    p0: SPath
    pr: SPath
    d: int
    layers: tuple[tuple[int, ...], ...]
    id_map: dict[int, int]


def build_spr_instance(
    g: Graph, s: int, t: int, p0: Sequence[int], pr: Sequence[int]
) -> SprInstance:
    """Prune to the layered vertices and validate the two endpoint paths."""
    d, layers, pruned, id_map = compute_layers(g, s, t)
    try:
        new_p0 = tuple(id_map[v] for v in p0)
        new_pr = tuple(id_map[v] for v in pr)
    except KeyError as exc:
        raise ValueError(f"path vertex {exc.args[0]} is on no shortest path") from exc
    inst = SprInstance(pruned, id_map[s], id_map[t], new_p0, new_pr, d, layers, id_map)
    for name, p in (("p0", new_p0), ("pr", new_pr)):
        if not is_s_path(inst, p):
            raise ValueError(f"{name} is not a shortest s-t path")
    return inst


def is_s_path(inst: SprInstance, p: Sequence[int]) -> bool:
    """True if p is a shortest s-t path (one vertex per layer, consecutive edges)."""
    if len(p) != inst.d + 1:
        return False
    if p[0] != inst.s or p[-1] != inst.t:
        return False
    if any(not 0 <= v < inst.graph.n for v in p):
        return False
    if any(p[i] not in inst.layers[i] for i in range(len(p))):
        return False
    return all(inst.graph.has_edge(u, v) for u, v in zip(p, p[1:]))


def adjacent_s_paths(p: Sequence[int], q: Sequence[int]) -> bool:
    """True if the paths differ in exactly one vertex."""
    return len(set(p) ^ set(q)) == 2


def enumerate_s_paths(inst: SprInstance, cap: int = DEFAULT_PATH_CAP) -> list[SPath]:
    """All shortest s-t paths, depth first in increasing vertex order."""
    layer_sets = [set(layer) for layer in inst.layers]
    out: list[SPath] = []
    prefix = [inst.s]

    def extend(i: int):
        if i == inst.d:
            out.append(tuple(prefix))
            if len(out) > cap:
                raise StateSpaceTooLarge(len(out), cap)
            return
        for w in inst.graph.neighbors(prefix[-1]):
            if w in layer_sets[i + 1]:
                prefix.append(w)
                extend(i + 1)
                prefix.pop()

    extend(0)
    return out


def brute_solve(
    inst: SprInstance, cap: int = DEFAULT_PATH_CAP
) -> Optional[list[SPath]]:
    """Breadth-first rerouting search over all shortest paths.

    Returns a shortest rerouting sequence p0..pr (a single-element list when
    they coincide) or None when pr is out of reach.
    """
    paths = enumerate_s_paths(inst, cap)
    index = {p: i for i, p in enumerate(paths)}
    if inst.p0 not in index or inst.pr not in index:
        raise ValueError("endpoint paths missing from the enumeration")

    # bucket paths by each single-layer wildcard to find the swap neighbors
    buckets: dict[tuple, list[int]] = {}
    for i, p in enumerate(paths):
        for j in range(1, inst.d):
            key = p[:j] + (-1,) + p[j + 1:]
            buckets.setdefault(key, []).append(i)
    adj: list[set[int]] = [set() for _ in paths]
    for group in buckets.values():
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                adj[group[a]].add(group[b])
                adj[group[b]].add(group[a])

    src, dst = index[inst.p0], index[inst.pr]
    parent = {src: -1}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            break
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                queue.append(w)
    if dst not in parent:
        return None
    chain = [dst]
    while chain[-1] != src:
        chain.append(parent[chain[-1]])
    chain.reverse()
    return [paths[i] for i in chain]
