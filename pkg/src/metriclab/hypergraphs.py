"""Hypergraphs: traces, VC dimensions, duality, distance hypergraphs, test covers.

Edges are stored as int bitmasks over vertices 0..nverts-1, in a list whose
slots are meaningful: the dual has one vertex per edge slot and one edge per
original vertex, so dual(dual(h)) == h exactly, multiplicities included.
Deduplication is always an explicit step (``dedup``), never implicit.

Optional edge labels carry bookkeeping like ball descriptions; they are
excluded from equality, mirroring vertex labels on graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .config import default_caps
from .errors import DomainError, FormatError, TooLargeError
from .graphs import Graph, all_distances, diameter, is_connected, iter_bits
from .setcover import min_cover


@dataclass(eq=False)
class Hypergraph:
    nverts: int
    edges: list[int]
    edge_labels: list[str | None] | None = None

    def __post_init__(self):
        full = (1 << self.nverts) - 1
        for e in self.edges:
            if e & ~full:
                raise DomainError("edge mentions a vertex outside 0..nverts-1")

    def edge_vertices(self, i: int) -> list[int]:
        return list(iter_bits(self.edges[i]))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.nverts == other.nverts
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.nverts, tuple(self.edges)))

    def __repr__(self):
        return f"Hypergraph(nverts={self.nverts}, nedges={len(self.edges)})"


@dataclass
class ShatterWitness:
    """A shattered (or 2-shattered) set plus one realizing edge per subset.

    assignment maps a sorted vertex tuple (a subset of ``vertices``; only the
    pairs for the 2-shattered case) to the index of an edge whose trace on
    ``vertices`` is exactly that subset.
    """

    vertices: list[int]
    assignment: dict[tuple[int, ...], int]

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "assignment": [
                {"subset": list(k), "edge": v}
                for k, v in sorted(self.assignment.items())
            ],
        }


# ---------------------------------------------------------------------------
# text format: "p hyper NVERTS NEDGES", then one line per edge (0-based ids;
# a blank line is the empty edge)


def parse_hypergraph(text: str) -> Hypergraph:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty hypergraph input")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "p" or head[1] != "hyper":
        raise FormatError("expected header 'p hyper NVERTS NEDGES'")
    try:
        nverts, nedges = int(head[2]), int(head[3])
    except ValueError as exc:
        raise FormatError("header counts must be integers") from exc
    if nverts < 0 or nedges < 0:
        raise FormatError("header counts must be nonnegative")
    if len(lines) < 1 + nedges:
        raise FormatError(f"expected {nedges} edge lines, found {len(lines) - 1}")
    for extra in lines[1 + nedges :]:
        if extra.strip():
            raise FormatError("trailing content after the declared edges")
    edges = []
    for lineno in range(1, 1 + nedges):
        mask = 0
        for tok in lines[lineno].split():
            try:
                v = int(tok)
            except ValueError as exc:
                raise FormatError(f"line {lineno + 1}: bad vertex id {tok!r}") from exc
            if not 0 <= v < nverts:
                raise FormatError(f"line {lineno + 1}: vertex {v} out of range")
            mask |= 1 << v
        edges.append(mask)
    return Hypergraph(nverts, edges)


def format_hypergraph(h: Hypergraph) -> str:
    out = [f"p hyper {h.nverts} {len(h.edges)}"]
    for e in h.edges:
        out.append(" ".join(str(v) for v in iter_bits(e)))
    return "\n".join(out)


# ---------------------------------------------------------------------------
# basic operations


def dedup(h: Hypergraph) -> Hypergraph:
    """Drop repeated edge sets, keeping the first slot (and its label)."""
    seen = set()
    edges = []
    labels = []
    for i, e in enumerate(h.edges):
        if e in seen:
            continue
        seen.add(e)
        edges.append(e)
        labels.append(h.edge_labels[i] if h.edge_labels else None)
    return Hypergraph(h.nverts, edges, labels if any(labels) else None)


def trace(h: Hypergraph, x) -> Hypergraph:
    """Projection onto x, deduplicated, vertices relabeled to 0..|x|-1."""
    xs = sorted(set(x))
    for v in xs:
        if not 0 <= v < h.nverts:
            raise DomainError(f"trace vertex {v} outside the vertex set")
    pos = {v: i for i, v in enumerate(xs)}
    xmask = 0
    for v in xs:
        xmask |= 1 << v
    seen = set()
    edges = []
    labels = []
    for i, e in enumerate(h.edges):
        rel = 0
        for v in iter_bits(e & xmask):
            rel |= 1 << pos[v]
        if rel in seen:
            continue
        seen.add(rel)
        edges.append(rel)
        labels.append(h.edge_labels[i] if h.edge_labels else None)
    return Hypergraph(len(xs), edges, labels if any(labels) else None)


def dual(h: Hypergraph) -> Hypergraph:
    """Incidence transpose: vertex i <-> edge slot i. dual(dual(h)) == h."""
    edges = []
    for v in range(h.nverts):
        m = 0
        for i, e in enumerate(h.edges):
            if e >> v & 1:
                m |= 1 << i
        edges.append(m)
    return Hypergraph(len(h.edges), edges)


def is_twin_free(h: Hypergraph) -> bool:
    cols = [
        sum(1 << i for i, e in enumerate(h.edges) if e >> v & 1)
        for v in range(h.nverts)
    ]
    return len(set(cols)) == h.nverts


# ---------------------------------------------------------------------------
# VC dimension and 2-VC dimension, levelwise with trace-count pruning


def _shatter_assignment(h: Hypergraph, xmask: int) -> dict[int, int] | None:
    """submask -> first realizing edge slot if xmask is shattered, else None."""
    found: dict[int, int] = {}
    for i, e in enumerate(h.edges):
        t = e & xmask
        if t not in found:
            found[t] = i
    if len(found) != 1 << xmask.bit_count():
        return None
    return found


def vc_dimension(h: Hypergraph, maxn: int | None = None) -> tuple[int, ShatterWitness | None]:
    """Exact VC dimension with a shatter witness.

    An edgeless hypergraph shatters nothing (not even the empty set): (0, None).
    """
    cap = default_caps().vc_n if maxn is None else maxn
    if h.nverts > cap:
        raise TooLargeError(f"vc_dimension: nverts={h.nverts} exceeds cap {cap}")
    if not h.edges:
        return 0, None
    best_mask = 0
    level = [0]
    while True:
        nxt = []
        for xmask in level:
            lo = xmask.bit_length()
            for v in range(lo, h.nverts):
                cand = xmask | 1 << v
                if _shatter_assignment(h, cand) is not None:
                    nxt.append(cand)
        if not nxt:
            break
        level = nxt
        best_mask = level[0]
    assign = _shatter_assignment(h, best_mask)
    witness = ShatterWitness(
        list(iter_bits(best_mask)),
        {tuple(iter_bits(sub)): i for sub, i in assign.items()},
    )
    return best_mask.bit_count(), witness


def _two_shatter_assignment(h: Hypergraph, xmask: int) -> dict[int, int] | None:
    """pairmask -> realizing edge if every pair is an exact trace, else None."""
    found: dict[int, int] = {}
    verts = list(iter_bits(xmask))
    for a, b in combinations(verts, 2):
        want = (1 << a) | (1 << b)
        for i, e in enumerate(h.edges):
            if e & xmask == want:
                found[want] = i
                break
        else:
            return None
    return found


def vc2_dimension(h: Hypergraph, maxn: int | None = None) -> tuple[int, ShatterWitness]:
    """Exact 2-VC dimension. Vacuous below two vertices, so >= 1 when nverts >= 1."""
    cap = default_caps().vc_n if maxn is None else maxn
    if h.nverts > cap:
        raise TooLargeError(f"vc2_dimension: nverts={h.nverts} exceeds cap {cap}")
    if h.nverts == 0:
        return 0, ShatterWitness([], {})
    best_mask = 1
    level = [1 << v for v in range(h.nverts)]
    while True:
        nxt = []
        for xmask in level:
            lo = xmask.bit_length()
            for v in range(lo, h.nverts):
                cand = xmask | 1 << v
                if _two_shatter_assignment(h, cand) is not None:
                    nxt.append(cand)
        if not nxt:
            break
        level = nxt
        best_mask = level[0]
    assign = _two_shatter_assignment(h, best_mask)
    witness = ShatterWitness(
        list(iter_bits(best_mask)),
        {tuple(iter_bits(sub)): i for sub, i in assign.items()},
    )
    return best_mask.bit_count(), witness


# ---------------------------------------------------------------------------
# distance hypergraphs


def distance_hypergraph(g: Graph, deduplicate: bool = True) -> Hypergraph:
    """All balls B(v, r) for r = 0..diam(G), one edge per distinct ball.

    Edge order: radius outer loop, center inner; each kept edge is labeled
    by its first (center, radius) representative. deduplicate=False keeps
    every (center, radius) pair as its own slot, for debugging.
    """
    if g.n == 0 or not is_connected(g):
        raise DomainError("distance hypergraph needs a connected nonempty graph")
    dist = all_distances(g)
    d = max(max(row) for row in dist)
    edges = []
    labels = []
    seen = set()
    for r in range(d + 1):
        for v in range(g.n):
            ball = 0
            for u in range(g.n):
                if dist[v][u] <= r:
                    ball |= 1 << u
            if deduplicate:
                if ball in seen:
                    continue
                seen.add(ball)
            edges.append(ball)
            labels.append(f"B({v},{r})")
    return Hypergraph(g.n, edges, labels)


def distance_hypergraph_fixed_radius(g: Graph, radius: int) -> Hypergraph:
    """One edge per vertex: its ball of the given radius. Never deduplicated,
    so the dual equals the hypergraph itself slot for slot."""
    if g.n == 0 or not is_connected(g):
        raise DomainError("distance hypergraph needs a connected nonempty graph")
    d = diameter(g)
    if not 0 <= radius <= d:
        raise DomainError(f"radius {radius} outside 0..{d}")
    dist = all_distances(g)
    edges = []
    labels = []
    for v in range(g.n):
        ball = 0
        for u in range(g.n):
            if dist[v][u] <= radius:
                ball |= 1 << u
        edges.append(ball)
        labels.append(f"B({v},{radius})")
    return Hypergraph(g.n, edges, labels)


def dual_distance_vc(g: Graph, maxn: int | None = None) -> int:
    """vc of the dual of the (deduplicated) ball hypergraph of g."""
    cap = default_caps().vc_n if maxn is None else maxn
    if g.n > cap:
        raise TooLargeError(f"dual_distance_vc: n={g.n} exceeds cap {cap}")
    d = dual(distance_hypergraph(g))
    return vc_dimension(d, maxn=d.nverts)[0]


def dual_distance_2vc(g: Graph, maxn: int | None = None) -> int:
    cap = default_caps().vc_n if maxn is None else maxn
    if g.n > cap:
        raise TooLargeError(f"dual_distance_2vc: n={g.n} exceeds cap {cap}")
    d = dual(distance_hypergraph(g))
    return vc2_dimension(d, maxn=d.nverts)[0]


# ---------------------------------------------------------------------------
# test covers


def min_test_cover(h: Hypergraph, maxn: int | None = None) -> list[int]:
    """Fewest edges covering every vertex and separating every vertex pair.

    Same branch-and-bound engine as the resolving-set solver; the universe
    is the vertices (coverage bits) plus the vertex pairs (separation bits).
    Returns sorted edge slots.
    """
    cap = default_caps().md_n if maxn is None else maxn
    if h.nverts > cap:
        raise TooLargeError(f"min_test_cover: nverts={h.nverts} exceeds cap {cap}")
    if not is_twin_free(h):
        raise DomainError("hypergraph has twin vertices; no test cover exists")
    n = h.nverts
    union = 0
    for e in h.edges:
        union |= e
    if union != (1 << n) - 1:
        missing = next(v for v in range(n) if not union >> v & 1)
        raise DomainError(f"vertex {missing} lies in no edge; no test cover exists")
    pairs = list(combinations(range(n), 2))
    masks = []
    for e in h.edges:
        m = e
        for idx, (a, b) in enumerate(pairs):
            if (e >> a & 1) != (e >> b & 1):
                m |= 1 << (n + idx)
        masks.append(m)
    return min_cover(n + len(pairs), masks)


def prop9_witness(h: Hypergraph, maxn: int | None = None) -> Hypergraph:
    """Trace exhibiting a dual-shattered family as a small test cover.

    For a dual-shattered family A of size k = vc(dual(h)) with realizing
    vertices x_S (one per subset S of A), drop the all-outside vertex
    x_{empty} and trace h onto the remaining 2^k - 1 vertices. The images
    of A, labeled "A0".."A{k-1}" in the result, form a test cover of size k;
    all of that is verified before returning.
    """
    dcap = len(h.edges) if maxn is None else maxn
    k, wit = vc_dimension(dual(h), maxn=dcap)
    if k == 0 or wit is None:
        raise DomainError("dual VC dimension is 0: no shattered family of edges")
    family = wit.vertices  # edge slots of h
    x_of = {frozenset(sub): v for sub, v in wit.assignment.items()}
    x0 = x_of[frozenset()]
    keep = sorted(v for sub, v in x_of.items() if sub)
    assert len(keep) == (1 << k) - 1 and x0 not in keep
    pos = {v: i for i, v in enumerate(keep)}
    keepmask = 0
    for v in keep:
        keepmask |= 1 << v

    result = trace(h, keep)
    if result.edge_labels is None:
        result.edge_labels = [None] * len(result.edges)
    cover_slots = []
    for j, a in enumerate(family):
        img = 0
        for v in iter_bits(h.edges[a] & keepmask):
            img |= 1 << pos[v]
        slot = result.edges.index(img)
        result.edge_labels[slot] = f"A{j}"
        cover_slots.append(slot)
    # the k images must be pairwise distinct edges...
    assert len(set(cover_slots)) == k
    # ...and a test cover of the trace: every vertex covered, every pair split
    sigs = [
        frozenset(s for s in cover_slots if result.edges[s] >> v & 1)
        for v in range(result.nverts)
    ]
    assert all(sigs) and len(set(sigs)) == result.nverts
    return result
