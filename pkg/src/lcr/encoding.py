"""Labeled e-node graphs that summarize one reconfiguration component.

An encoding graph stands for the component of the current start coloring in
the reconfiguration graph of a prefix, contracted so that colorings agree on
the active spine vertex and are mutually reachable without recoloring it.
Each e-node carries the shared spine color ``col``; ``ini`` and ``tar`` name
the e-nodes whose classes contain the start and target restrictions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class EncodingGraph:
    cols: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    ini: Optional[int]
    tar: Optional[int]
    step_index: int = -1

    def __len__(self) -> int:
        return len(self.cols)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.cols]
        for x, y in self.edges:
            adj[x].append(y)
            adj[y].append(x)
        return adj

    def enode_labels(self) -> list[tuple[int, bool, bool]]:
        """(col, is_ini, is_tar) per e-node id."""
        return [
            (c, i == self.ini, i == self.tar) for i, c in enumerate(self.cols)
        ]


def validate_encoding(eg: EncodingGraph, spine_list=None) -> None:
    """Raise ValueError if the labeled graph breaks a structural invariant.

    Checks: one ini e-node, at most one tar, ids in range, no duplicate or
    reflexive edges, adjacent e-nodes carry distinct cols, the graph is
    connected, and (when given) every col belongs to spine_list.
    """
    k = len(eg.cols)
    if eg.ini is None or not 0 <= eg.ini < k:
        raise ValueError("need exactly one ini e-node")
    if eg.tar is not None and not 0 <= eg.tar < k:
        raise ValueError("tar e-node out of range")
    seen = set()
    for x, y in eg.edges:
        if not (0 <= x < k and 0 <= y < k) or x == y:
            raise ValueError(f"bad edge ({x}, {y})")
        key = (x, y) if x < y else (y, x)
        if key in seen:
            raise ValueError(f"duplicate edge {key}")
        seen.add(key)
        if eg.cols[x] == eg.cols[y]:
            raise ValueError(f"adjacent e-nodes {x}, {y} share col {eg.cols[x]}")
    if spine_list is not None:
        bad = [c for c in eg.cols if c not in spine_list]
        if bad:
            raise ValueError(f"cols {bad} outside the spine list")
    if k:
        adj = eg.adjacency()
        stack = [0]
        reached = {0}
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in reached:
                    reached.add(w)
                    stack.append(w)
        if len(reached) != k:
            raise ValueError("encoding graph is disconnected")


def label_preserving_isomorphic(a: EncodingGraph, b: EncodingGraph) -> bool:
    """True if some bijection matches edges and (col, ini, tar) labels.

    Backtracking over label-compatible candidates; meant for the small
    graphs that show up in cross-checks against the brute-force oracle.
    """
    if len(a) != len(b):
        return False
    la, lb = a.enode_labels(), b.enode_labels()
    if sorted(la) != sorted(lb):
        return False
    adj_a, adj_b = a.adjacency(), b.adjacency()
    if sorted(len(x) for x in adj_a) != sorted(len(x) for x in adj_b):
        return False
    edges_b = {(x, y) if x < y else (y, x) for x, y in b.edges}

    sig_a = [(la[i], len(adj_a[i])) for i in range(len(a))]
    sig_b = [(lb[i], len(adj_b[i])) for i in range(len(b))]
    if sorted(sig_a) != sorted(sig_b):
        return False
    candidates = [
        [j for j in range(len(b)) if sig_b[j] == sig_a[i]] for i in range(len(a))
    ]
    order = sorted(range(len(a)), key=lambda i: len(candidates[i]))
    image: dict[int, int] = {}
    used: set[int] = set()

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        i = order[pos]
        for j in candidates[i]:
            if j in used:
                continue
            ok = True
            for w in adj_a[i]:
                if w in image:
                    jw = image[w]
                    if ((j, jw) if j < jw else (jw, j)) not in edges_b:
                        ok = False
                        break
            if not ok:
                continue
            # mapped non-neighbors must stay non-neighbors
            deg_mapped = sum(1 for w in adj_a[i] if w in image)
            deg_b_mapped = sum(1 for w in adj_b[j] if w in used)
            if deg_mapped != deg_b_mapped:
                continue
            image[i] = j
            used.add(j)
            if extend(pos + 1):
                return True
            del image[i]
            used.remove(j)
        return False

    return extend(0)
