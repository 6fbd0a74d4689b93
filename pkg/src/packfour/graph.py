"""Immutable simple undirected graphs and the primitives everything else uses.

Vertices are 0..n-1.  Adjacency lists are strictly increasing tuples, so every
iteration order downstream is deterministic.  Distances are hop counts with
math.inf for unreachable pairs; the infinity sentinel makes empty-set distance
queries behave correctly (min over nothing is infinite).
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass

from .errors import DuplicateEdge, SelfLoop, VertexOutOfRange

INF = math.inf

Triangle = tuple[int, int, int]
OddCycle = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self):
        """Yield edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def vertices(self) -> range:
        return range(self.n)


def build_graph(n: int, edges) -> Graph:
    """Validate an edge list and freeze it into a Graph.

    Rejects self-loops, duplicate edges (in either orientation) and endpoints
    outside 0..n-1.
    """
    if n < 0:
        raise VertexOutOfRange(n, n)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(x, n)
        if u == v:
            raise SelfLoop(u)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(u, v)
        seen.add(key)
        nbrs[u].add(v)
        nbrs[v].add(u)
    adj = tuple(tuple(sorted(s)) for s in nbrs)
    return Graph(n=n, adj=adj, m=len(seen))


def bfs_distances(g: Graph, src: int) -> list[float]:
    """Hop distances from src; INF where unreachable."""
    dist: list[float] = [INF] * g.n
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        for v in g.adj[u]:
            if dist[v] is INF:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def _bfs_parents(g: Graph, src: int) -> tuple[list[float], list[int]]:
    # parent[src] == src; parent[v] == -1 where unreachable
    dist: list[float] = [INF] * g.n
    parent = [-1] * g.n
    dist[src] = 0
    parent[src] = src
    q = deque([src])
    while q:
        u = q.popleft()
        for v in g.adj[u]:
            if dist[v] is INF:
                dist[v] = dist[u] + 1
                parent[v] = u
                q.append(v)
    return dist, parent


def vertices_within(g: Graph, sources, radius: int) -> set[int]:
    """All vertices at hop distance <= radius from some source (sources included)."""
    dist: dict[int, int] = {}
    q = deque()
    for s in sorted(set(sources)):
        dist[s] = 0
        q.append(s)
    while q:
        u = q.popleft()
        if dist[u] == radius:
            continue
        for v in g.adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                q.append(v)
    return set(dist)


def set_distance_at_least(g: Graph, v: int, s, k: int) -> bool:
    """True iff min over u in s of dist(v, u) >= k.  True when s is empty.

    Bounded BFS: only the ball of radius k-1 around v is explored, so checks
    with small k stay cheap even on large graphs.
    """
    members = set(s)
    if not members:
        return True
    if k <= 0:
        return True
    if v in members:
        return False
    dist = {v: 0}
    q = deque([v])
    while q:
        u = q.popleft()
        if dist[u] == k - 1:
            continue
        for w in g.adj[u]:
            if w not in dist:
                if w in members:
                    return False
                dist[w] = dist[u] + 1
                q.append(w)
    return True


def list_triangles(g: Graph) -> list[Triangle]:
    """All triangles (u, v, w) with u < v < w, in lexicographic order."""
    out: list[Triangle] = []
    nbr_sets = [set(a) for a in g.adj]
    for u in range(g.n):
        above = [v for v in g.adj[u] if v > u]
        for i, v in enumerate(above):
            for w in above[i + 1:]:
                if w in nbr_sets[v]:
                    out.append((u, v, w))
    return out


def triangle_membership_counts(g: Graph) -> list[int]:
    counts = [0] * g.n
    for t in list_triangles(g):
        for v in t:
            counts[v] += 1
    return counts


def is_cubic(g: Graph) -> bool:
    return all(len(a) == 3 for a in g.adj)


def find_claw(g: Graph) -> tuple[int, tuple[int, int, int]] | None:
    """First claw: smallest center, then lexicographically smallest leaves.

    A claw is an induced K_{1,3}: three pairwise non-adjacent neighbors of a
    common center.  Returns (center, (a, b, c)) or None.
    """
    nbr_sets = [set(a) for a in g.adj]
    for c in range(g.n):
        for a, b, d in itertools.combinations(g.adj[c], 3):
            if b not in nbr_sets[a] and d not in nbr_sets[a] and d not in nbr_sets[b]:
                return (c, (a, b, d))
    return None


def induced_subgraph(g: Graph, keep) -> tuple[Graph, list[int]]:
    """Subgraph induced by `keep`, plus the increasing new->old vertex map."""
    mapping = sorted(set(keep))
    for v in mapping:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(v, g.n)
    index = {old: new for new, old in enumerate(mapping)}
    edges = []
    for new_u, old_u in enumerate(mapping):
        for old_v in g.adj[old_u]:
            if old_v in index and old_v > old_u:
                edges.append((new_u, index[old_v]))
    return build_graph(len(mapping), edges), mapping


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        q = deque([root])
        while q:
            u = q.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    q.append(v)
        out.append(sorted(comp))
    return out


def _canonical_cycle(seq: list[int]) -> OddCycle:
    # rotate so the smallest vertex leads; pick the direction with the
    # smaller successor so each cycle has exactly one printed form
    k = seq.index(min(seq))
    rot = seq[k:] + seq[:k]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def bipartition_or_odd_cycle(g: Graph):
    """2-color each component or exhibit a simple odd cycle.

    Returns (class0, class1) as sorted lists on bipartite input — component
    roots are the smallest unvisited ids and a root always gets class 0 — or
    an odd cycle tuple on the first conflict found in BFS order.
    """
    color: list[int] = [-1] * g.n
    dist: list[float] = [INF] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        dist[root] = 0
        parent[root] = root
        q = deque([root])
        while q:
            u = q.popleft()
            for v in g.adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    q.append(v)
                elif color[v] == color[u]:
                    return _odd_cycle_from_conflict(u, v, dist, parent)
    return (
        sorted(v for v in range(g.n) if color[v] == 0),
        sorted(v for v in range(g.n) if color[v] == 1),
    )


def _path_to_root(v: int, parent: list[int]) -> list[int]:
    path = [v]
    while parent[path[-1]] != path[-1]:
        path.append(parent[path[-1]])
    path.reverse()  # root first
    return path


def _odd_cycle_from_conflict(u, v, dist, parent) -> OddCycle:
    # BFS-tree paths from the root share a prefix and diverge permanently, so
    # splicing them at the last common vertex yields a simple cycle; equal
    # color parity of u and v makes its length odd.
    pu = _path_to_root(u, parent)
    pv = _path_to_root(v, parent)
    i = 0
    while i < min(len(pu), len(pv)) and pu[i] == pv[i]:
        i += 1
    cycle = pu[i - 1:] + pv[:i - 1:-1]
    return _canonical_cycle(cycle)


def shortest_odd_cycle(g: Graph) -> OddCycle | None:
    """A minimum-length odd cycle, or None if the graph is bipartite.

    BFS from every vertex; an edge joining two vertices in the same BFS layer
    closes an odd walk of length 2*layer + 1, and the minimum over all such
    walks is attained by a simple chordless cycle.  The first minimum in scan
    order (start vertex ascending, edges lexicographic) fixes the witness.
    """
    best_len: float = INF
    best = None  # (dist, parent, u, v)
    for s in range(g.n):
        dist, parent = _bfs_parents(g, s)
        for u, v in g.edges():
            if dist[u] is not INF and dist[u] == dist[v]:
                cand = 2 * dist[u] + 1
                if cand < best_len:
                    best_len = cand
                    best = (dist, parent, u, v)
        if best_len == 3:
            break
    if best is None:
        return None
    _, parent, u, v = best
    pu = _path_to_root(u, parent)
    pv = _path_to_root(v, parent)
    i = 0
    while i < min(len(pu), len(pv)) and pu[i] == pv[i]:
        i += 1
    cycle = pu[i - 1:] + pv[:i - 1:-1]
    return _canonical_cycle(cycle)
