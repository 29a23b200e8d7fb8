"""Generation of all small trees and connected graphs up to isomorphism.

Free trees come from the rooted level-sequence successor of Beyer and
Hedetniemi, filtered down to center-rooted canonical sequences so that each
free tree is emitted exactly once. Connected graphs are built level by
level: every connected graph on n >= 2 vertices has a non-cut vertex, so
attaching one new vertex to every nonempty neighborhood of every
(n-1)-vertex representative reaches all of them, and an invariant-bucketed
isomorphism scan removes the duplicates.

Both streams are deterministic run to run and cached per order, because the
check suites replay them many times in one process.
"""

from __future__ import annotations

from typing import Iterator

from .config import default_caps
from .errors import DomainError, TooLargeError
from .graphs import Graph, is_tree, iso_invariant, isomorphic, to_graph6

# Level sequences are 0-based depth lists in preorder: L[0] = 0 and the
# parent of position i is the nearest j < i with L[j] == L[i] - 1.


def _successor(seq: list[int]) -> list[int] | None:
    """Next rooted level sequence in decreasing lexicographic order."""
    p = -1
    for i in range(len(seq) - 1, 0, -1):
        if seq[i] >= 2:
            p = i
            break
    if p < 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    nxt = seq[:p]
    for i in range(p, len(seq)):
        nxt.append(nxt[i - (p - q)])
    return nxt


def _rooted_level_sequences(n: int) -> Iterator[list[int]]:
    """All rooted trees on n vertices, one canonical sequence each."""
    seq: list[int] | None = list(range(n))
    while seq is not None:
        yield seq
        seq = _successor(seq)


def _adjacency_from_sequence(seq: list[int]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in seq]
    stack: list[int] = []
    for i, depth in enumerate(seq):
        del stack[depth:]
        if stack:
            adj[stack[-1]].append(i)
            adj[i].append(stack[-1])
        stack.append(i)
    return adj


def _centers(adj: list[list[int]]) -> list[int]:
    # classic leaf stripping; one or two vertices survive
    n = len(adj)
    if n == 1:
        return [0]
    deg = [len(nb) for nb in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    alive = n
    while alive > 2:
        alive -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for u in adj[v]:
                if deg[u] > 1:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return sorted(layer)


def _canonical_from(adj: list[list[int]], root: int) -> tuple[int, ...]:
    """Lexicographically greatest level sequence of the tree rooted here."""

    def sub(v: int, parent: int, depth: int) -> tuple[int, ...]:
        branches = sorted(
            (sub(u, v, depth + 1) for u in adj[v] if u != parent),
            reverse=True,
        )
        out = (depth,)
        for b in branches:
            out += b
        return out

    return sub(root, -1, 0)


def _free_canonical(adj: list[list[int]]) -> tuple[int, ...]:
    return max(_canonical_from(adj, c) for c in _centers(adj))


def free_tree_key(g: Graph) -> tuple[int, ...]:
    """Canonical form of a free tree; equal keys mean isomorphic trees."""
    if not is_tree(g):
        raise DomainError("free_tree_key needs a tree")
    adj = [sorted(g.neighbors(v)) for v in range(g.n)]
    return _free_canonical(adj)


def _graph_from_sequence(seq: list[int]) -> Graph:
    g = Graph(len(seq))
    stack: list[int] = []
    for i, depth in enumerate(seq):
        del stack[depth:]
        if stack:
            g.add_edge(stack[-1], i)
        stack.append(i)
    return g


_tree_cache: dict[int, list[Graph]] = {}


def _free_trees_exact(n: int) -> list[Graph]:
    if n not in _tree_cache:
        out = []
        for seq in _rooted_level_sequences(n):
            # keep the sequence only when it is the free-tree canonical
            # form, i.e. the greatest sequence over center rootings
            if tuple(seq) == _free_canonical(_adjacency_from_sequence(seq)):
                out.append(_graph_from_sequence(seq))
        _tree_cache[n] = out
    return _tree_cache[n]


def enumerate_trees(n_max: int, maxn: int | None = None) -> Iterator[Graph]:
    """Every free tree with 1..n_max vertices, one per isomorphism class.

    Deterministic order: by vertex count, then by decreasing canonical
    level sequence. Counts per order follow the known sequence
    1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, ...
    """
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    cap = default_caps().tree_enum_n if maxn is None else maxn
    if n_max > cap:
        raise TooLargeError(f"tree enumeration: n_max={n_max} exceeds cap {cap}")

    def stream() -> Iterator[Graph]:
        for n in range(1, n_max + 1):
            yield from _free_trees_exact(n)

    return stream()


_conn_cache: dict[int, list[Graph]] = {}


def _connected_exact(n: int) -> list[Graph]:
    if n in _conn_cache:
        return _conn_cache[n]
    if n == 1:
        level = [Graph(1)]
    else:
        buckets: dict[tuple, list[Graph]] = {}
        order: list[Graph] = []
        for base in _connected_exact(n - 1):
            for mask in range(1, 1 << (n - 1)):
                g = Graph(n)
                g.adj[: n - 1] = base.adj
                g.adj[n - 1] = mask
                for v in range(n - 1):
                    if mask >> v & 1:
                        g.adj[v] |= 1 << (n - 1)
                bucket = buckets.setdefault(iso_invariant(g), [])
                # cap n (not the config default) so env overrides cannot
                # break the internal dedup; the scan is exhaustive anyway
                if not any(isomorphic(g, h, maxn=n) for h in bucket):
                    bucket.append(g)
                    order.append(g)
        level = sorted(order, key=to_graph6)
    _conn_cache[n] = level
    return level


def enumerate_connected_graphs(n_max: int, maxn: int | None = None) -> Iterator[Graph]:
    """Every connected graph with 1..n_max vertices, one per class.

    Deterministic order: by vertex count, then by graph6 string. Counts
    per order are 1, 1, 2, 6, 21, 112, 853 for n = 1..7. Orders past the
    cap are meant to come from ingested graph6 corpora, not from this
    generator.
    """
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    cap = default_caps().graph_enum_n if maxn is None else maxn
    if n_max > cap:
        raise TooLargeError(
            f"connected-graph enumeration: n_max={n_max} exceeds cap {cap}; "
            "ingest a graph6 corpus for larger orders"
        )

    def stream() -> Iterator[Graph]:
        for n in range(1, n_max + 1):
            yield from _connected_exact(n)

    return stream()
