"""Independent reference implementations used as test oracles.

Deliberately naive: each function recomputes a quantity straight from its
definition, sharing as little code as possible with the library, so that
agreement between the two is meaningful evidence.
"""

import itertools

from metriclab.graphs import Graph, iter_bits

INF = float("inf")


# ---------------------------------------------------------------------------
# distances: Floyd-Warshall


def fw_distances(g):
    n = g.n
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik is INF:
                continue
            row = d[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < row[j]:
                    row[j] = alt
    return [[-1 if x is INF else x for x in row] for row in d]


# ---------------------------------------------------------------------------
# graph6: independent bit-level encoder


def graph6_encode(g):
    n = g.n
    if n <= 62:
        chars = [n + 63]
    else:
        chars = [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    acc = 0
    nb = 0
    body = []
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (1 if g.has_edge(i, j) else 0)
            nb += 1
            if nb == 6:
                body.append(acc + 63)
                acc = 0
                nb = 0
    if nb:
        body.append((acc << (6 - nb)) + 63)
    return "".join(map(chr, chars + body))


# ---------------------------------------------------------------------------
# isomorphism by permutation search (tiny n only)


def perm_isomorphic(g, h):
    if g.n != h.n:
        return False
    target = {frozenset(e) for e in h.edges()}
    ge = list(g.edges())
    for perm in itertools.permutations(range(g.n)):
        if {frozenset((perm[u], perm[v])) for u, v in ge} == target:
            return True
    return False


# ---------------------------------------------------------------------------
# chordality: search for an induced cycle of length >= 4


def chordal_by_definition(g):
    from metriclab.graphs import is_connected

    for size in range(4, g.n + 1):
        for sub in itertools.combinations(range(g.n), size):
            ind = g.induced(sub)
            if all(ind.degree(v) == 2 for v in range(ind.n)) and is_connected(ind):
                return False
    return True


# ---------------------------------------------------------------------------
# set cover / metric dimension / test cover by ascending subset search


def naive_min_cover_size(universe_size, masks):
    full = (1 << universe_size) - 1
    for r in range(len(masks) + 1):
        for combo in itertools.combinations(range(len(masks)), r):
            cov = 0
            for i in combo:
                cov |= masks[i]
            if cov == full:
                return r
    return None


def naive_metric_dimension(g):
    dm = fw_distances(g)
    for r in range(g.n + 1):
        for s in itertools.combinations(range(g.n), r):
            vecs = {tuple(dm[v][x] for x in s) for v in range(g.n)}
            if len(vecs) == g.n:
                return r, list(s)
    raise AssertionError("unreachable: V always resolves")


def naive_test_cover_size(h):
    """Min number of edges covering every vertex and separating every pair."""
    n = h.nverts
    for r in range(len(h.edges) + 1):
        for combo in itertools.combinations(range(len(h.edges)), r):
            sigs = [
                frozenset(i for i in combo if h.edges[i] >> v & 1) for v in range(n)
            ]
            if all(sigs) and len(set(sigs)) == n:
                return r
    return None


# ---------------------------------------------------------------------------
# VC dimension by brute shattering


def _submasks(mask):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def brute_vc(h):
    best = -1
    for size in range(h.nverts + 1):
        found = False
        for xs in itertools.combinations(range(h.nverts), size):
            xmask = 0
            for x in xs:
                xmask |= 1 << x
            traces = {e & xmask for e in h.edges}
            if all(sub in traces for sub in _submasks(xmask)):
                found = True
                break
        if found:
            best = size
        else:
            break
    # an edgeless hypergraph shatters nothing, not even the empty set
    return max(best, 0)


def brute_vc2(h):
    def two_shattered(xs):
        for a, b in itertools.combinations(xs, 2):
            xmask = 0
            for x in xs:
                xmask |= 1 << x
            want = (1 << a) | (1 << b)
            if not any(e & xmask == want for e in h.edges):
                return False
        return True

    best = 0
    for size in range(h.nverts, 0, -1):
        for xs in itertools.combinations(range(h.nverts), size):
            if two_shattered(xs):
                return size
    return best


# ---------------------------------------------------------------------------
# treewidth via all elimination orders (n <= 7 practical)


def brute_treewidth(g):
    best = g.n - 1
    for order in itertools.permutations(range(g.n)):
        adj = [set(iter_bits(a)) for a in g.adj]
        gone = set()
        width = 0
        for v in order:
            neigh = adj[v] - gone
            width = max(width, len(neigh))
            if width >= best:
                break
            for a in neigh:
                adj[a] |= neigh
                adj[a].discard(a)
            gone.add(v)
        best = min(best, width)
    return best


def brute_max_clique(g):
    for size in range(g.n, 0, -1):
        for sub in itertools.combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)):
                return size
    return 0


# ---------------------------------------------------------------------------
# minors by the operational definition: deletions and contractions


def _contract(g, u, v):
    """Contract edge (u,v) into u, dropping v."""
    keep = [w for w in range(g.n) if w != v]
    pos = {w: i for i, w in enumerate(keep)}
    h = Graph(g.n - 1)
    for a, b in g.edges():
        a2 = u if a == v else a
        b2 = u if b == v else b
        if a2 != b2:
            ha, hb = pos[a2], pos[b2]
            if not h.has_edge(ha, hb):
                h.add_edge(ha, hb)
    return h


def _delete_vertex(g, v):
    return g.induced([w for w in range(g.n) if w != v])


def _delete_edge(g, u, v):
    h = g.copy()
    h.adj[u] &= ~(1 << v)
    h.adj[v] &= ~(1 << u)
    return h


def has_minor_brute(g, target, _memo=None):
    """True iff target is a minor of g, by exhausting single operations."""
    if _memo is None:
        _memo = {}
    key = graph6_encode(g)
    if key in _memo:
        return _memo[key]
    result = False
    if g.n >= target.n and g.m >= target.m:
        if perm_isomorphic(g, target):
            result = True
        else:
            for v in range(g.n):
                if has_minor_brute(_delete_vertex(g, v), target, _memo):
                    result = True
                    break
            if not result:
                for u, v in g.edges():
                    if has_minor_brute(_delete_edge(g, u, v), target, _memo) or \
                       has_minor_brute(_contract(g, u, v), target, _memo):
                        result = True
                        break
    _memo[key] = result
    return result


# ---------------------------------------------------------------------------
# labelled trees from Pruefer sequences; AHU canonical form for free trees


def tree_from_pruefer(seq, n):
    assert len(seq) == n - 2
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    g = Graph(n)
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for s in seq:
        g.add_edge(leaf, s)
        degree[s] -= 1
        if degree[s] == 1 and s < ptr:
            leaf = s
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    g.add_edge(leaf, n - 1)
    return g


def free_tree_canonical(g):
    """AHU string of the tree rooted at its center (min over two centers)."""
    n = g.n
    if n == 1:
        return "()"
    deg = [g.degree(v) for v in range(n)]
    alive = [True] * n
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        nxt = []
        for v in layer:
            alive[v] = False
            remaining -= 1
            for u in iter_bits(g.adj[v]):
                if alive[u]:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    centers = [v for v in range(n) if alive[v]]

    def enc(v, parent):
        subs = sorted(enc(u, v) for u in iter_bits(g.adj[v]) if u != parent)
        return "(" + "".join(subs) + ")"

    return min(enc(c, -1) for c in centers)


# ---------------------------------------------------------------------------
# seeded random instances


def random_graph(rng, n, p):
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def random_connected_graph(rng, n, p):
    """Random tree skeleton plus density-p extras; always connected."""
    g = random_tree(rng, n)
    for u in range(n):
        for v in range(u + 1, n):
            if not g.has_edge(u, v) and rng.random() < p:
                g.add_edge(u, v)
    return g


def random_tree(rng, n):
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return tree_from_pruefer(seq, n)


def random_hypergraph(rng, nverts, nedges):
    from metriclab.hypergraphs import Hypergraph

    return Hypergraph(nverts, [rng.getrandbits(nverts) for _ in range(nedges)])
