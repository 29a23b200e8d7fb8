"""Resolving sets, exact metric dimension, and the test-cover conversions.

The exact solver reduces to minimum set cover over vertex pairs: a landmark
x covers the pair {u,v} iff d(x,u) != d(x,v). Twin classes (vertices with
identical distance rows off the pair itself) are preselected up front: any
resolving set must contain all but one of each class, and twins are
interchangeable, so fixing the lexicographically smallest ones loses
nothing. The remaining pairs go to the shared branch-and-bound engine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import default_caps
from .errors import DomainError, TooLargeError
from .graphs import Graph, all_distances, is_connected, is_tree, iter_bits
from .setcover import min_cover


@dataclass
class ResolvingCertificate:
    vertices: list[int]
    dimension: int
    vectors: dict[int, tuple[int, ...]]
    verified: bool

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "set": list(self.vertices),
            "dimension": self.dimension,
            "verified": self.verified,
        }


def resolving_vectors(g: Graph, s) -> dict[int, tuple[int, ...]]:
    """Distance vector of every vertex to the landmark list (sorted order)."""
    if not is_connected(g) or g.n == 0:
        raise DomainError("resolving sets are defined for connected nonempty graphs")
    landmarks = sorted(set(s))
    for x in landmarks:
        if not 0 <= x < g.n:
            raise DomainError(f"landmark {x} out of range")
    dist = all_distances(g)
    return {v: tuple(dist[x][v] for x in landmarks) for v in range(g.n)}


def is_resolving(g: Graph, s) -> bool:
    vecs = resolving_vectors(g, s)
    return len(set(vecs.values())) == g.n


def _certificate(g: Graph, s: list[int]) -> ResolvingCertificate:
    vecs = resolving_vectors(g, s)
    ok = len(set(vecs.values())) == g.n
    return ResolvingCertificate(sorted(s), len(s), vecs, ok)


def _twin_classes(dist: list[list[int]]) -> list[list[int]]:
    """Group vertices whose distance rows agree everywhere off the pair."""
    n = len(dist)
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u in range(n):
        for v in range(u + 1, n):
            if all(dist[u][x] == dist[v][x] for x in range(n) if x != u and x != v):
                parent[find(u)] = find(v)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(find(v), []).append(v)
    return [sorted(c) for c in classes.values()]


def metric_dimension_exact(g: Graph, maxn: int | None = None) -> ResolvingCertificate:
    """Minimum resolving set by reduction to set cover; deterministic output."""
    if not is_connected(g) or g.n == 0:
        raise DomainError("metric dimension needs a connected nonempty graph")
    cap = default_caps().md_n if maxn is None else maxn
    if g.n > cap:
        raise TooLargeError(f"metric_dimension_exact: n={g.n} exceeds cap {cap}")
    n = g.n
    dist = all_distances(g)

    preselected: list[int] = []
    for cls in _twin_classes(dist):
        preselected.extend(cls[:-1])  # all but the largest of each class

    def separates(x: int, u: int, v: int) -> bool:
        return dist[x][u] != dist[x][v]

    todo = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if not any(separates(x, u, v) for x in preselected)
    ]
    masks = []
    for x in range(n):
        m = 0
        for idx, (u, v) in enumerate(todo):
            if separates(x, u, v):
                m |= 1 << idx
        masks.append(m)
    chosen = min_cover(len(todo), masks)
    cert = _certificate(g, sorted(set(preselected) | set(chosen)))
    assert cert.verified
    return cert


def tree_metric_dimension(t: Graph) -> ResolvingCertificate:
    """Metric dimension of a tree by the leaf/exterior-major-vertex count.

    Paths on >= 2 vertices have dimension 1 (smaller endpoint as witness);
    the one-vertex tree has dimension 0. Otherwise the dimension is
    #leaves - #exterior major vertices, witnessed by keeping, for each
    exterior major vertex, every leg's leaf except the largest-numbered one.
    """
    if not is_tree(t):
        raise DomainError("tree_metric_dimension needs a tree")
    if t.n == 1:
        return _certificate(t, [])
    if all(t.degree(v) <= 2 for v in range(t.n)):
        endpoint = min(v for v in range(t.n) if t.degree(v) == 1)
        return _certificate(t, [endpoint])

    # walk from each leaf through degree-2 vertices to its major vertex
    legs_of: dict[int, list[int]] = {}
    for leaf in (v for v in range(t.n) if t.degree(v) == 1):
        prev, cur = -1, leaf
        while True:
            nxt = next(u for u in iter_bits(t.adj[cur]) if u != prev)
            if t.degree(nxt) >= 3:
                legs_of.setdefault(nxt, []).append(leaf)
                break
            prev, cur = cur, nxt

    witness: list[int] = []
    for major in sorted(legs_of):
        witness.extend(sorted(legs_of[major])[:-1])
    nleaves = sum(1 for v in range(t.n) if t.degree(v) == 1)
    assert len(witness) == nleaves - len(legs_of)
    cert = _certificate(t, sorted(witness))
    assert cert.verified
    return cert


# ---------------------------------------------------------------------------
# conversions between resolving sets and test covers of the ball hypergraph


def _ball_slots(g: Graph):
    """(hypergraph, mask -> slot, mask of B(v,r) on demand) helpers."""
    from .hypergraphs import distance_hypergraph

    h = distance_hypergraph(g)
    slot = {mask: i for i, mask in enumerate(h.edges)}
    return h, slot


def resolving_to_test_cover(g: Graph, s) -> list[int]:
    """Edge slots of distance_hypergraph(g) forming a test cover of size
    at most d*|s| + 1: radii 0..d-1 around each landmark, plus one full-
    diameter ball (anchored at the smallest landmark, or vertex 0)."""
    if not is_resolving(g, s):
        raise DomainError("input set is not resolving")
    landmarks = sorted(set(s))
    dist = all_distances(g)
    d = max(max(row) for row in dist)
    h, slot = _ball_slots(g)

    def ball(v: int, r: int) -> int:
        m = 0
        for u in range(g.n):
            if dist[v][u] <= r:
                m |= 1 << u
        return m

    chosen = set()
    for x in landmarks:
        for r in range(d):
            chosen.add(slot[ball(x, r)])
    anchor = landmarks[0] if landmarks else 0
    chosen.add(slot[ball(anchor, d)])

    out = sorted(chosen)
    sigs = [
        frozenset(i for i in out if h.edges[i] >> v & 1) for v in range(g.n)
    ]
    assert all(sigs) and len(set(sigs)) == g.n
    return out


def test_cover_to_resolving(g: Graph, slots) -> list[int]:
    """One center per chosen ball (its first (radius, center) representative);
    a resolving set no larger than the cover."""
    h, _ = _ball_slots(g)
    chosen = sorted(set(slots))
    for i in chosen:
        if not 0 <= i < len(h.edges):
            raise DomainError(f"edge slot {i} out of range")
    sigs = [
        frozenset(i for i in chosen if h.edges[i] >> v & 1) for v in range(g.n)
    ]
    if not (all(sigs) and len(set(sigs)) == g.n):
        raise DomainError("chosen edges are not a test cover")

    dist = all_distances(g)
    d = max(max(row) for row in dist)
    center: dict[int, int] = {}
    for r in range(d + 1):
        for v in range(g.n):
            m = 0
            for u in range(g.n):
                if dist[v][u] <= r:
                    m |= 1 << u
            if m not in center:
                center[m] = v
    out = sorted({center[h.edges[i]] for i in chosen})
    assert is_resolving(g, out)
    return out
