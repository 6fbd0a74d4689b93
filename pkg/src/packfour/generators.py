"""Graph families: named fixtures, triangle inflation, necklaces, random cubic.

Everything here is deterministic for a fixed seed; adjacency construction
orders are fixed so repeated runs emit byte-identical graph6.
"""

from __future__ import annotations

import random
import re

from .errors import BadParameter, NotCubic, RetryLimit, UnknownName
from .graph import Graph, build_graph, components, is_cubic, triangle_membership_counts


def k4() -> Graph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def prism() -> Graph:
    # two triangles joined by a perfect matching
    return build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5),
                           (0, 3), (1, 4), (2, 5)])


def petersen() -> Graph:
    outer = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5, 7), (5, 8), (6, 8), (6, 9), (7, 9)]
    return build_graph(10, outer + spokes + inner)


def k33() -> Graph:
    return build_graph(6, [(i, 3 + j) for i in range(3) for j in range(3)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameter(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def diamond_necklace(k: int) -> Graph:
    """k diamonds (K4 minus an edge) joined in a ring by their degree-2 tips.

    Diamond i occupies 4i..4i+3: tips 4i and 4i+1, hub pair 4i+2, 4i+3.
    k = 1 would need a double edge between the two tips, so it is rejected.
    """
    if k < 2:
        raise BadParameter(f"diamond necklace needs k >= 2, got {k}")
    edges = []
    for i in range(k):
        a, b, c, d = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        edges += [(a, c), (a, d), (b, c), (b, d), (c, d)]
        edges.append((b, 4 * ((i + 1) % k)))
    return build_graph(4 * k, edges)


def inflate(g: Graph) -> Graph:
    """Replace every vertex of a cubic graph by a triangle.

    Vertex v becomes {3v, 3v+1, 3v+2}; v's incident edges, sorted by neighbor
    id, attach to those corners in order.  The result is claw-free cubic on
    3n vertices.
    """
    for v in range(g.n):
        if g.degree(v) != 3:
            raise NotCubic(v, g.degree(v))
    edges = []
    for v in range(g.n):
        base = 3 * v
        edges += [(base, base + 1), (base, base + 2), (base + 1, base + 2)]
    for u, v in g.edges():
        pu = g.adj[u].index(v)
        pv = g.adj[v].index(u)
        edges.append((3 * u + pu, 3 * v + pv))
    return build_graph(3 * g.n, edges)


def named_graph(name: str) -> Graph:
    """Fixture lookup: k4, prism, petersen, k33, c<n>, necklace<k>."""
    key = name.strip().lower().replace("-", "_").replace(" ", "")
    fixed = {"k4": k4, "prism": prism, "petersen": petersen, "k33": k33}
    if key in fixed:
        return fixed[key]()
    m = re.fullmatch(r"c_?(\d+)", key)
    if m:
        return cycle(int(m.group(1)))
    m = re.fullmatch(r"(?:diamond_?)?necklace_?(\d+)", key)
    if m:
        return diamond_necklace(int(m.group(1)))
    raise UnknownName(name)


def random_cubic(n: int, seed: int, connected: bool = False,
                 max_retries: int = 2000) -> Graph:
    """Seeded configuration-model cubic graph: pair stubs, reject degeneracies.

    Rejects pairings with loops or repeated edges (and disconnected results
    when `connected` is set); raises RetryLimit if no clean pairing shows up.
    """
    if n < 4 or n % 2 != 0:
        raise BadParameter(f"random cubic graph needs even n >= 4, got {n}")
    rng = random.Random(seed)
    for _ in range(max_retries):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            key = (u, v) if u < v else (v, u)
            if key in edges:
                ok = False
                break
            edges.add(key)
        if not ok:
            continue
        g = build_graph(n, sorted(edges))
        if connected and len(components(g)) != 1:
            continue
        return g
    raise RetryLimit(n, max_retries)


def vertices_on_cycle_3_or_4(g: Graph) -> list[bool]:
    """Per-vertex scan: does the vertex lie on some cycle of length 3 or 4?"""
    counts = triangle_membership_counts(g)
    nbr_sets = [set(a) for a in g.adj]
    out = []
    for v in range(g.n):
        if counts[v] > 0:
            out.append(True)
            continue
        on_c4 = False
        nbrs = g.adj[v]
        for i, x in enumerate(nbrs):
            for y in nbrs[i + 1:]:
                if (nbr_sets[x] & nbr_sets[y]) - {v}:
                    on_c4 = True
                    break
            if on_c4:
                break
        out.append(on_c4)
    return out


def problem1_family(n: int, seed: int) -> Graph:
    """A cubic graph in which every vertex lies on a 3- or 4-cycle.

    One constructive choice among many: take a seeded random cubic base on n
    vertices and substitute a gadget for each base vertex — a triangle for
    even base vertices, and for odd base vertices a 4-cycle whose two opposite
    vertices are joined by a 2-path (K_{2,3}: the three degree-2 vertices are
    the attachment ports, and every gadget vertex lies on a 4-cycle).  Base
    edges attach to ports in sorted-neighbor order.  The per-vertex short-cycle
    property is re-checked by a direct scan before returning.
    """
    base = random_cubic(n, seed)
    offsets = []
    total = 0
    for v in range(base.n):
        offsets.append(total)
        total += 3 if v % 2 == 0 else 5
    edges = []
    ports: list[tuple[int, int, int]] = []
    for v in range(base.n):
        o = offsets[v]
        if v % 2 == 0:
            edges += [(o, o + 1), (o, o + 2), (o + 1, o + 2)]
            ports.append((o, o + 1, o + 2))
        else:
            # ports o..o+2, hubs o+3 and o+4, every hub adjacent to every port
            for hub in (o + 3, o + 4):
                for p in (o, o + 1, o + 2):
                    edges.append((p, hub))
            ports.append((o, o + 1, o + 2))
    for u, v in base.edges():
        pu = base.adj[u].index(v)
        pv = base.adj[v].index(u)
        edges.append((ports[u][pu], ports[v][pv]))
    g = build_graph(total, edges)
    if not is_cubic(g):
        raise RuntimeError("gadget substitution lost 3-regularity")
    if not all(vertices_on_cycle_3_or_4(g)):
        raise RuntimeError("gadget substitution left a vertex off short cycles")
    return g
