"""Graph representation, I/O, distances, and structural predicates.

Graphs are simple and undirected, with vertices 0..n-1 and adjacency stored
as one int bitmask per vertex. That keeps the hot loops (BFS over masks,
subset tests in the solvers) allocation-free without any dependency.

Optional string labels annotate vertices (the extremal generators use them
to mark roots, centers and designated resolving vertices); labels never
participate in equality or isomorphism.
"""

from __future__ import annotations

from .config import default_caps
from .errors import DomainError, FormatError, TooLargeError


def iter_bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("n", "adj", "labels")

    def __init__(self, n: int = 0):
        if n < 0:
            raise DomainError("vertex count must be nonnegative")
        self.n = n
        self.adj: list[int] = [0] * n
        self.labels: dict[int, str] = {}

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def add_vertex(self, label: str | None = None) -> int:
        self.adj.append(0)
        v = self.n
        self.n += 1
        if label is not None:
            self.labels[v] = label
        return v

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise DomainError(f"self-loop at {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise DomainError(f"edge ({u},{v}) out of range for n={self.n}")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int):
        return iter_bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self):
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in iter_bits(rest):
                yield (u, v)

    def copy(self) -> "Graph":
        g = Graph(self.n)
        g.adj = list(self.adj)
        g.labels = dict(self.labels)
        return g

    def induced(self, vertices) -> "Graph":
        """Induced subgraph on the given vertices, renumbered in sorted order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        g = Graph(len(vs))
        for v in vs:
            for u in iter_bits(self.adj[v]):
                if u < v and u in pos:
                    g.add_edge(pos[u], pos[v])
        for v in vs:
            if v in self.labels:
                g.labels[pos[v]] = self.labels[v]
        return g

    def relabeled(self, perm: list[int]) -> "Graph":
        """Image under vertex map old -> perm[old] (a permutation)."""
        g = Graph(self.n)
        for u, v in self.edges():
            g.add_edge(perm[u], perm[v])
        g.labels = {perm[v]: s for v, s in self.labels.items()}
        return g

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((a.bit_count() for a in self.adj), reverse=True))

    def __eq__(self, other) -> bool:
        # structural equality; labels are annotations only
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, tuple(self.adj)))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# constructors used all over tests and generators


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycle needs at least 3 vertices")
    g = path_graph(n)
    g.add_edge(n - 1, 0)
    return g


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def grid_graph(rows: int, cols: int) -> Graph:
    """rows x cols grid; vertex (r,c) is r*cols + c."""
    g = Graph(rows * cols)
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                g.add_edge(v, v + 1)
            if r + 1 < rows:
                g.add_edge(v, v + cols)
    return g


# ---------------------------------------------------------------------------
# distances


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from source; -1 where unreachable."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        seen |= nxt
        for v in iter_bits(nxt):
            dist[v] = d
        frontier = nxt
    return dist

def all_distances(g: Graph) -> list[list[int]]:
    return [bfs_distances(g, v) for v in range(g.n)]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return -1 not in bfs_distances(g, 0)


def connected_components(g: Graph) -> list[list[int]]:
    comps = []
    unseen = (1 << g.n) - 1
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        dist = bfs_distances(g, start)
        comp = [v for v in range(g.n) if dist[v] >= 0 and (unseen >> v & 1)]
        comps.append(comp)
        for v in comp:
            unseen &= ~(1 << v)
    return comps


def eccentricities(g: Graph) -> list[int]:
    if not is_connected(g):
        raise DomainError("eccentricities need a connected graph")
    return [max(bfs_distances(g, v)) for v in range(g.n)]


def diameter(g: Graph) -> int:
    if g.n == 0:
        raise DomainError("diameter of the empty graph is undefined")
    return max(eccentricities(g))


def is_tree(g: Graph) -> bool:
    return g.n > 0 and g.m == g.n - 1 and is_connected(g)


def leaves(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == 1]


# ---------------------------------------------------------------------------
# chordality: maximum cardinality search + perfect elimination check


def mcs_order(g: Graph) -> list[int]:
    """A maximum-cardinality search order (reversed it is a PEO iff chordal)."""
    weight = [0] * g.n
    visited = 0
    order = []
    for _ in range(g.n):
        best = max(
            (v for v in range(g.n) if not visited >> v & 1),
            key=lambda v: (weight[v], -v),
        )
        order.append(best)
        visited |= 1 << best
        for u in iter_bits(g.adj[best] & ~visited):
            weight[u] += 1
    return order


def is_chordal(g: Graph) -> bool:
    order = mcs_order(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    # Eliminate in reverse MCS order: earlier-MCS neighbors of v must form a
    # clique once v's earliest such neighbor absorbs them.
    for v in order:
        earlier = [u for u in iter_bits(g.adj[v]) if pos[u] < pos[v]]
        if not earlier:
            continue
        w = max(earlier, key=lambda u: pos[u])
        others = 0
        for u in earlier:
            if u != w:
                others |= 1 << u
        if others & ~g.adj[w]:
            return False
    return True


# ---------------------------------------------------------------------------
# biconnected components (blocks), iterative Hopcroft-Tarjan


def biconnected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the blocks. Isolated vertices form singleton blocks."""
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[list[int]] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0

    for root in range(g.n):
        if disc[root] != -1:
            continue
        if g.adj[root] == 0:
            blocks.append([root])
            continue
        # explicit DFS stack: (vertex, parent, neighbor iterator)
        stack = [(root, -1, iter_bits(g.adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    edge_stack.append((v, u))
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, v, iter_bits(g.adj[u])))
                    advanced = True
                    break
                if u != parent and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if stack:
                pv = stack[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] >= disc[pv]:
                    # everything above and including tree edge (pv,v) is one block
                    verts = set()
                    while True:
                        a, b = edge_stack.pop()
                        verts.add(a)
                        verts.add(b)
                        if (a, b) == (pv, v):
                            break
                    blocks.append(sorted(verts))
    return blocks


# ---------------------------------------------------------------------------
# graph6 codec (formats for n <= 62 and the '~'-prefixed form to 258047)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    else:
        raise TooLargeError("graph6 encoding beyond 258047 vertices not supported")
    bits = []
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            bits.append(col >> i & 1)
    body = []
    for k in range(0, len(bits), 6):
        chunk = bits[k : k + 6] + [0] * (6 - len(bits[k : k + 6]))
        val = 0
        for b in chunk:
            val = val << 1 | b
        body.append(chr(val + 63))
    return head + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise FormatError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(v < 0 or v > 63 for v in data):
        raise FormatError("graph6 characters must be in chr(63)..chr(126)")
    if data[0] == 63:  # '~'
        if len(data) >= 2 and data[1] == 63:
            raise TooLargeError("graph6 '~~' form (n >= 258048) not supported")
        if len(data) < 4:
            raise FormatError("truncated graph6 header")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise FormatError(
            f"graph6 body has {len(body)} characters, expected {(nbits + 5) // 6} for n={n}"
        )
    g = Graph(n)
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                g.add_edge(i, j)
            k += 1
    return g


# ---------------------------------------------------------------------------
# edge-list text: one "u v" pair per line, 0-indexed, n inferred as max+1.
# K_1 and trailing isolated vertices are not representable here; use graph6.


def parse_edge_list(text: str) -> Graph:
    pairs = []
    top = -1
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"line {lineno}: vertex ids must be integers") from exc
        if u < 0 or v < 0:
            raise FormatError(f"line {lineno}: vertex ids must be nonnegative")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop {u}")
        pairs.append((u, v))
        top = max(top, u, v)
    if top < 0:
        raise FormatError("edge list has no edges; use graph6 for edgeless graphs")
    return Graph.from_edges(top + 1, pairs)


def format_edge_list(g: Graph) -> str:
    return "\n".join(f"{u} {v}" for u, v in g.edges())


# ---------------------------------------------------------------------------
# isomorphism: 1-dimensional color refinement, then backtracking


def _refined_colors(g: Graph) -> tuple[int, ...]:
    colors = [0] * g.n
    while True:
        sigs = []
        for v in range(g.n):
            neigh = sorted(colors[u] for u in iter_bits(g.adj[v]))
            sigs.append((colors[v], tuple(neigh)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if new == colors:
            return tuple(colors)
        colors = new


def iso_invariant(g: Graph) -> tuple:
    """Cheap isomorphism-invariant key for bucketing before exact checks."""
    triangles = sum(
        (g.adj[u] & g.adj[v]).bit_count() for u, v in g.edges()
    ) // 3
    return (g.n, g.m, g.degree_sequence(), tuple(sorted(_refined_colors(g))), triangles)


def isomorphic(g: Graph, h: Graph, maxn: int | None = None) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if g.n == 0:
        return True
    if g.degree_sequence() != h.degree_sequence():
        return False
    cg, ch = _refined_colors(g), _refined_colors(h)
    if sorted(cg) != sorted(ch):
        return False
    cap = default_caps().iso_n if maxn is None else maxn
    if g.n > cap:
        raise TooLargeError(f"isomorphism: n={g.n} exceeds cap {cap}")

    by_color: dict[int, list[int]] = {}
    for w, c in enumerate(ch):
        by_color.setdefault(c, []).append(w)
    # assign rare colors first; within a color, higher degree first
    order = sorted(range(g.n), key=lambda v: (len(by_color[cg[v]]), -g.degree(v), v))
    image = [-1] * g.n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == g.n:
            return True
        v = order[k]
        for w in by_color[cg[v]]:
            if used >> w & 1:
                continue
            ok = True
            for u in order[:k]:
                if g.has_edge(u, v) != h.has_edge(image[u], w):
                    ok = False
                    break
            if ok:
                image[v] = w
                used |= 1 << w
                if extend(k + 1):
                    return True
                used &= ~(1 << w)
                image[v] = -1
        return False

    return extend(0)
