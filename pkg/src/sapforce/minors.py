"""Minor containment, Hadwiger number, clique number, and vertex cover.

``has_minor`` searches the contraction space of the host graph (memoized on
canonical forms) and looks for a subgraph embedding of the pattern at each
stage; a hit is translated back into disjoint connected branch sets of the
original graph, which is the witness callers get.  Everything here is exact
and intended for graphs within the configured vertex cap.
"""

from __future__ import annotations

from .canon import canonical_form
from .graphs import Graph, _check_cap, bits, mask_of

DEFAULT_MINOR_CAP = 10

BranchSets = tuple[frozenset[int], ...]


def _embed_subgraph(host: Graph, pattern: Graph) -> list[int] | None:
    """Map pattern vertices to distinct host vertices preserving edges.

    Returns ``image`` with ``image[p]`` the host vertex for pattern vertex p,
    or None.  Ordinary subgraph embedding: host may have extra edges.
    """
    p_order = sorted(pattern.vertices(), key=pattern.degree, reverse=True)
    image = [0] * (pattern.n + 1)
    used = 0

    def place(idx: int) -> bool:
        nonlocal used
        if idx == len(p_order):
            return True
        p = p_order[idx]
        needed = [q for q in p_order[:idx] if pattern.has_edge(p, q)]
        for v in host.vertices():
            if used >> v & 1:
                continue
            if host.degree(v) < pattern.degree(p):
                continue
            if any(not host.has_edge(v, image[q]) for q in needed):
                continue
            image[p] = v
            used |= 1 << v
            if place(idx + 1):
                return True
            used &= ~(1 << v)
        return False

    return image if place(0) else None


def has_minor(
    g: Graph, h: Graph, cap: int = DEFAULT_MINOR_CAP
) -> tuple[bool, BranchSets | None]:
    """Decide whether h is a minor of g; on success return branch sets.

    The witness is one connected branch set per pattern vertex (in pattern
    vertex order), pairwise disjoint, with an original edge of g between the
    branch sets of every pattern edge.
    """
    _check_cap(g.n, cap, "host vertex count")
    if h.n > g.n or h.num_edges() > g.num_edges():
        return False, None
    if h.n == 0:
        return True, ()

    seen: set[str] = set()

    def dfs(cur: Graph, blobs: list[frozenset[int]]) -> BranchSets | None:
        if cur.n < h.n or cur.num_edges() < h.num_edges():
            return None
        key = canonical_form(cur, cap=cap).bytes
        if key in seen:
            return None
        image = _embed_subgraph(cur, h)
        if image is not None:
            return tuple(blobs[image[p] - 1] for p in h.vertices())
        seen.add(key)
        for u, v in cur.edges():
            nxt = cur.contract_edge(u, v)
            merged = blobs[u - 1] | blobs[v - 1]
            nxt_blobs = [merged if w == u else blobs[w - 1]
                         for w in cur.vertices() if w != v]
            found = dfs(nxt, nxt_blobs)
            if found is not None:
                return found
        return None

    witness = dfs(g, [frozenset({v}) for v in g.vertices()])
    return (witness is not None), witness


def clique_number(g: Graph) -> int:
    """Exact maximum clique size via branch and bound on bitsets."""
    best = 0

    def grow(clique_size: int, candidates: int) -> None:
        nonlocal best
        if clique_size + candidates.bit_count() <= best:
            return
        if not candidates:
            best = max(best, clique_size)
            return
        while candidates:
            if clique_size + candidates.bit_count() <= best:
                return
            v = (candidates & -candidates).bit_length() - 1
            candidates &= ~(1 << v)
            grow(clique_size + 1, candidates & g.adj[v])

    grow(0, g.full_mask)
    return best


def hadwiger(g: Graph, cap: int = DEFAULT_MINOR_CAP) -> int:
    """Largest p such that g has a complete minor on p vertices."""
    _check_cap(g.n, cap, "vertex count")
    if g.n == 0:
        return 0
    best = 0
    seen: set[str] = set()

    def dfs(cur: Graph) -> None:
        nonlocal best
        if cur.n <= best:
            return
        key = canonical_form(cur, cap=cap).bytes
        if key in seen:
            return
        seen.add(key)
        best = max(best, clique_number(cur))
        for u, v in cur.edges():
            dfs(cur.contract_edge(u, v))

    dfs(g)
    return best


def vertex_cover_number(g: Graph, cap: int = DEFAULT_MINOR_CAP) -> int:
    """Minimum number of vertices meeting every edge, by branch and bound."""
    _check_cap(g.n, cap, "vertex count")
    adj = g.adj
    best = g.n

    def matching_bound(active: int) -> int:
        rem = active
        size = 0
        for v in bits(active):
            if not rem >> v & 1:
                continue
            nb = adj[v] & rem & ~(1 << v)
            if nb:
                u = (nb & -nb).bit_length() - 1
                rem &= ~(1 << v) & ~(1 << u)
                size += 1
        return size

    def bb(active: int, chosen: int) -> None:
        nonlocal best
        pick, pick_deg = 0, 0
        for v in bits(active):
            d = (adj[v] & active).bit_count()
            if d > pick_deg:
                pick, pick_deg = v, d
        if pick_deg == 0:
            best = min(best, chosen)
            return
        if chosen + matching_bound(active) >= best:
            return
        # either pick is in the cover, or all of its neighbors are
        if chosen + 1 < best:
            bb(active & ~(1 << pick), chosen + 1)
        nbrs = adj[pick] & active
        if chosen + nbrs.bit_count() < best:
            bb(active & ~nbrs & ~(1 << pick), chosen + nbrs.bit_count())

    bb(g.full_mask, 0)
    return best
