"""Constructors for the named graphs used in tests and the CLI."""

from __future__ import annotations

from itertools import combinations

from .graphs import Graph


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, list(combinations(range(1, n + 1), 2)))


def empty(n: int) -> Graph:
    return Graph.empty(n)


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the center labeled 1."""
    return Graph.from_edges(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def complete_multipartite(*sizes: int) -> Graph:
    n = sum(sizes)
    part = []
    v = 1
    for s in sizes:
        part.append(list(range(v, v + s)))
        v += s
    edges = []
    for a in range(len(sizes)):
        for b in range(a + 1, len(sizes)):
            edges.extend((u, w) for u in part[a] for w in part[b])
    return Graph.from_edges(n, edges)


def petersen() -> Graph:
    edges = [(i, i % 5 + 1) for i in range(1, 6)]                 # outer C5
    edges += [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]      # inner pentagram
    edges += [(i, i + 5) for i in range(1, 6)]                    # spokes
    return Graph.from_edges(10, edges)


def tetrahedron() -> Graph:
    return complete(4)


def cube() -> Graph:
    # vertices 1..8 as 3-bit words 0..7, edges between words at Hamming distance 1
    edges = []
    for a in range(8):
        for b in range(a + 1, 8):
            if bin(a ^ b).count("1") == 1:
                edges.append((a + 1, b + 1))
    return Graph.from_edges(8, edges)


def octahedron() -> Graph:
    return complete_multipartite(2, 2, 2)


def dodecahedron() -> Graph:
    # generalized Petersen graph GP(10,2)
    edges = [(i, i % 10 + 1) for i in range(1, 11)]                   # outer C10
    edges += [(i, i + 10) for i in range(1, 11)]                      # spokes
    edges += [(i + 10, (i + 1) % 10 + 11) for i in range(1, 11)]      # inner step-2 pentagons
    return Graph.from_edges(20, edges)


def icosahedron() -> Graph:
    # pentagonal antiprism on 1..10 capped by apexes 11 and 12
    edges = [(i, i % 5 + 1) for i in range(1, 6)]                     # ring 1-5
    edges += [(i + 5, i % 5 + 6) for i in range(1, 6)]                # ring 6-10
    edges += [(i, i + 5) for i in range(1, 6)]                        # antiprism band
    edges += [(i, i % 5 + 6) for i in range(1, 6)]
    edges += [(11, i) for i in range(1, 6)]
    edges += [(12, i) for i in range(6, 11)]
    return Graph.from_edges(12, edges)


def kite5() -> Graph:
    """C4 on 2,3,4,5 plus the pendant vertex 1 attached at 2."""
    return Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (2, 5)])


def wide_spider9() -> Graph:
    """K_{1,4} with one extra pendant leaf hung on each original leaf."""
    edges = [(1, i) for i in range(2, 6)] + [(i, i + 4) for i in range(2, 6)]
    return Graph.from_edges(9, edges)


def ternary_spider13() -> Graph:
    """Depth-2 tree: center 1, three branch vertices, three leaves per branch."""
    edges = [(1, b) for b in (2, 3, 4)]
    leaf = 5
    for b in (2, 3, 4):
        for _ in range(3):
            edges.append((b, leaf))
            leaf += 1
    return Graph.from_edges(13, edges)


def outer_triangle_on_wheel8() -> Graph:
    """8-vertex graph: a wheel-like core 4..8 with three pendant spikes 1,2,3."""
    edges = [(1, 4), (2, 6), (3, 7), (4, 5), (5, 6), (6, 7), (7, 8), (8, 4), (4, 6), (4, 7)]
    return Graph.from_edges(8, edges)


NAMED = {
    "petersen": petersen,
    "tetrahedron": tetrahedron,
    "cube": cube,
    "octahedron": octahedron,
    "dodecahedron": dodecahedron,
    "icosahedron": icosahedron,
    "kite5": kite5,
}


def by_name(name: str) -> Graph:
    key = name.lower()
    if key in NAMED:
        return NAMED[key]()
    for prefix, fn in (("p", path), ("c", cycle), ("k", complete), ("e", empty)):
        if key.startswith(prefix) and key[len(prefix):].isdigit():
            return fn(int(key[len(prefix):]))
    if key.startswith("k1,") and key[3:].isdigit():
        return star(int(key[3:]))
    raise KeyError(f"unknown graph name {name!r}")
