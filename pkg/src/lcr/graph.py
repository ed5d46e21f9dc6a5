"""Simple undirected graphs plus the structural checks the solvers rely on.

Vertices are dense integers 0..n-1.  Graphs are immutable; deleting or
inducing returns a fresh graph together with an old-to-new id map so callers
can translate witnesses back.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import NotConnected


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges = frozenset(seen)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return len(self._bfs_order(0)) == self.n

    def _bfs_order(self, start: int) -> list[int]:
        seen = [False] * self.n
        seen[start] = True
        order = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if not seen[w]:
                    seen[w] = True
                    order.append(w)
                    queue.append(w)
        return order

    def connected_components(self) -> list[list[int]]:
        """Vertex sets of the components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Subgraph induced on the given vertices.

        Returns the new graph plus the old-to-new id map; new ids follow the
        sorted order of the kept old ids.
        """
        kept = sorted(set(vertices))
        id_map = {v: i for i, v in enumerate(kept)}
        edges = [
            (id_map[u], id_map[v])
            for u, v in self.edges
            if u in id_map and v in id_map
        ]
        return Graph(len(kept), edges), id_map

    def delete_vertices(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        drop = set(vertices)
        return self.induced_subgraph(v for v in range(self.n) if v not in drop)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class CaterpillarStructure:
    """Spine/leaf decomposition of a caterpillar plus its solver ordering.

    The spine induces a path whose two endpoints have degree 1 in the whole
    graph (a leaf is promoted onto each end when needed).  ``ordering`` lists
    the vertices v_1..v_n produced by the breadth-first walk that starts at
    one spine endpoint and, at each spine vertex, visits its leaves before
    the next spine vertex.  ``spine_of_prefix[i-1]`` is the latest spine
    vertex among the first i ordered vertices.
    """

    spine: tuple[int, ...]
    leaves: dict[int, int]
    ordering: tuple[int, ...]
    spine_of_prefix: tuple[int, ...]

    def is_spine(self, v: int) -> bool:
        return v not in self.leaves

    def edge_set(self) -> frozenset[tuple[int, int]]:
        """Edges implied by the decomposition; must equal the input graph's."""
        edges = set()
        for a, b in zip(self.spine, self.spine[1:]):
            edges.add((a, b) if a < b else (b, a))
        for leaf, host in self.leaves.items():
            edges.add((leaf, host) if leaf < host else (host, leaf))
        return frozenset(edges)


def recognize_caterpillar(g: Graph) -> Optional[CaterpillarStructure]:
    """Decompose a connected caterpillar; None if the graph is not one.

    A connected graph qualifies exactly when it is a tree whose non-leaf
    vertices induce a path.  A single vertex counts, with a one-vertex spine.
    Deterministic tie-breaks: the promoted endpoint leaves are the lowest-id
    candidates, the spine runs from its lower-id endpoint, and leaves of a
    spine vertex are ordered by increasing id.
    """
    if not g.is_connected():
        raise NotConnected("caterpillar recognition requires a connected graph")
    if g.n == 1:
        return CaterpillarStructure((0,), {}, (0,), (0,))
    if g.m != g.n - 1:
        return None  # has a cycle
    if g.n == 2:
        return CaterpillarStructure((0, 1), {}, (0, 1), (0, 1))

    internal = [v for v in range(g.n) if g.degree(v) >= 2]
    internal_set = set(internal)
    # In a tree the internal vertices induce a subtree; it is a path exactly
    # when no internal vertex has three internal neighbors.
    int_deg = {}
    for v in internal:
        d = sum(1 for w in g.neighbors(v) if w in internal_set)
        if d > 2:
            return None
        int_deg[v] = d

    if len(internal) == 1:
        path = [internal[0]]
    else:
        ends = sorted(v for v in internal if int_deg[v] <= 1)
        path = [ends[0]]
        prev = -1
        while True:
            nxt = [
                w for w in g.neighbors(path[-1])
                if w in internal_set and w != prev
            ]
            if not nxt:
                break
            prev = path[-1]
            path.append(nxt[0])
        if len(path) != len(internal):
            return None

    spine = list(path)
    def lowest_leaf(v: int, taken: set[int]) -> int:
        return min(
            w for w in g.neighbors(v)
            if w not in internal_set and w not in taken
        )

    if g.degree(spine[0]) >= 2:
        spine.insert(0, lowest_leaf(spine[0], set()))
    if g.degree(spine[-1]) >= 2:
        spine.append(lowest_leaf(spine[-1], {spine[0]}))
    if spine[0] > spine[-1]:
        spine.reverse()

    spine_set = set(spine)
    leaves = {
        v: g.neighbors(v)[0] for v in range(g.n) if v not in spine_set
    }
    leaves_of: dict[int, list[int]] = {}
    for leaf in sorted(leaves):
        leaves_of.setdefault(leaves[leaf], []).append(leaf)

    ordering = [spine[0]]
    for s in spine[1:]:
        ordering.append(s)
        ordering.extend(leaves_of.get(s, ()))
    spine_of_prefix = []
    latest = spine[0]
    for v in ordering:
        if v in spine_set:
            latest = v
        spine_of_prefix.append(latest)

    return CaterpillarStructure(
        tuple(spine), leaves, tuple(ordering), tuple(spine_of_prefix)
    )


@dataclass(frozen=True)
class PathDecomposition:
    """Sequence of vertex bags."""

    bags: tuple[frozenset[int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


class DecompositionCheck(NamedTuple):
    valid: bool
    width: int


def check_path_decomposition(g: Graph, pd: PathDecomposition) -> DecompositionCheck:
    """Validate a path decomposition of g; the width is reported either way.

    Checks that the bags cover every vertex, that every edge is inside some
    bag, and that each vertex occupies a contiguous run of bags.
    """
    for bag in pd.bags:
        for v in bag:
            if not 0 <= v < g.n:
                raise ValueError(f"bag vertex {v} out of range for n={g.n}")
    width = pd.width

    covered: set[int] = set()
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, bag in enumerate(pd.bags):
        for v in bag:
            covered.add(v)
            first.setdefault(v, i)
            last[v] = i
    if len(covered) != g.n:
        return DecompositionCheck(False, width)

    for u, v in g.edges:
        if not any(u in bag and v in bag for bag in pd.bags):
            return DecompositionCheck(False, width)

    for v in covered:
        span = range(first[v], last[v] + 1)
        if any(v not in pd.bags[i] for i in span):
            return DecompositionCheck(False, width)

    return DecompositionCheck(True, width)


def is_partial_two_tree(g: Graph) -> bool:
    """True if repeatedly deleting vertices of degree at most 2 empties g.

    Every partial 2-tree survives this elimination to the end, so a True
    answer is the structural sanity certificate used for compiled instances;
    the width-2 claim itself is certified by an explicit decomposition.
    """
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    queue = deque(v for v in range(g.n) if deg[v] <= 2)
    removed = 0
    while queue:
        v = queue.popleft()
        if not alive[v] or deg[v] > 2:
            continue
        alive[v] = False
        removed += 1
        for w in g.neighbors(v):
            if alive[w]:
                deg[w] -= 1
                if deg[w] <= 2:
                    queue.append(w)
    return removed == g.n


def is_bipartite(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Bipartition of g, or None if some component has an odd cycle.

    Each component is two-colored starting from its lowest vertex, which
    lands in the first part.
    """
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if side[w] == -1:
                    side[w] = side[u] ^ 1
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return (
        frozenset(v for v in range(g.n) if side[v] == 0),
        frozenset(v for v in range(g.n) if side[v] == 1),
    )
