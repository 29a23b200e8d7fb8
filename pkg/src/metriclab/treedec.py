"""Tree decompositions: validation, width/length, reduction, clique trees,
exact treewidth, and the internal-bags-are-cutsets self-test.

A decomposition keeps a reference to its host graph; bag distances (length)
are host distances, not induced ones. Validation reports violations as data
so callers can show them; the other operations refuse invalid input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .config import default_caps
from .errors import DomainError, FormatError, TooLargeError
from .graphs import Graph, all_distances, is_chordal, is_connected, iter_bits, mcs_order


@dataclass(frozen=True)
class TreeDecomposition:
    host: Graph
    bags: tuple
    tree_edges: tuple

    def __init__(self, host: Graph, bags: Iterable, tree_edges: Iterable):
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in bags))
        norm = sorted(tuple(sorted(e)) for e in tree_edges)
        object.__setattr__(self, "tree_edges", tuple(norm))


def validate(td: TreeDecomposition) -> list[str]:
    """Violation report; empty list means valid."""
    out = []
    nb = len(td.bags)
    n = td.host.n
    for i, bag in enumerate(td.bags):
        for v in sorted(bag):
            if not 0 <= v < n:
                out.append(f"bag {i}: vertex {v} outside host range")
    tree_ok = True
    seen_edges = set()
    adj = [[] for _ in range(nb)]
    for i, j in td.tree_edges:
        if not (0 <= i < nb and 0 <= j < nb):
            out.append(f"tree: edge ({i}, {j}) has a bag index out of range")
            tree_ok = False
            continue
        if i == j:
            out.append(f"tree: self-loop at bag {i}")
            tree_ok = False
            continue
        if (i, j) in seen_edges:
            out.append(f"tree: duplicate edge ({i}, {j})")
            tree_ok = False
            continue
        seen_edges.add((i, j))
        adj[i].append(j)
        adj[j].append(i)
    if tree_ok and nb > 0:
        if len(seen_edges) != nb - 1:
            out.append(f"tree: expected {nb - 1} edges, found {len(seen_edges)}")
            tree_ok = False
        else:
            seen = {0}
            stack = [0]
            while stack:
                for j in adj[stack.pop()]:
                    if j not in seen:
                        seen.add(j)
                        stack.append(j)
            if len(seen) != nb:
                out.append("tree: bag nodes are not connected")
                tree_ok = False
    covered = set().union(*td.bags) if td.bags else set()
    for v in range(n):
        if v not in covered:
            out.append(f"P1: vertex {v} appears in no bag")
    for u, v in td.host.edges():
        if not any(u in bag and v in bag for bag in td.bags):
            out.append(f"P2: edge ({u}, {v}) contained in no bag")
    if tree_ok:
        for v in range(n):
            holders = [i for i, bag in enumerate(td.bags) if v in bag]
            if len(holders) <= 1:
                continue
            hset = set(holders)
            seen = {holders[0]}
            stack = [holders[0]]
            while stack:
                for j in adj[stack.pop()]:
                    if j in hset and j not in seen:
                        seen.add(j)
                        stack.append(j)
            if len(seen) != len(holders):
                out.append(f"P3: bags containing vertex {v} do not form a subtree")
    return out


def _require_valid(td: TreeDecomposition) -> None:
    bad = validate(td)
    if bad:
        raise DomainError("invalid decomposition: " + bad[0])


def width(td: TreeDecomposition) -> int:
    _require_valid(td)
    return max((len(b) for b in td.bags), default=0) - 1


def length(td: TreeDecomposition) -> int:
    _require_valid(td)
    if not is_connected(td.host):
        raise DomainError("length needs a connected host graph")
    dist = all_distances(td.host)
    best = 0
    for bag in td.bags:
        vs = sorted(bag)
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                best = max(best, dist[vs[a]][vs[b]])
    return best


def is_reduced(td: TreeDecomposition) -> bool:
    for i, j in td.tree_edges:
        if td.bags[i] <= td.bags[j] or td.bags[j] <= td.bags[i]:
            return False
    return True


def reduce(td: TreeDecomposition) -> TreeDecomposition:
    """Absorb any bag contained in a tree neighbor; width/length unchanged."""
    _require_valid(td)
    bags = {i: set(b) for i, b in enumerate(td.bags)}
    adj = {i: set() for i in bags}
    for i, j in td.tree_edges:
        adj[i].add(j)
        adj[j].add(i)
    while True:
        victim = absorber = None
        for i in sorted(bags):
            for j in sorted(adj[i]):
                if bags[i] <= bags[j]:
                    victim, absorber = i, j
                    break
            if victim is not None:
                break
        if victim is None:
            break
        for k in adj[victim]:
            adj[k].discard(victim)
            if k != absorber:
                adj[k].add(absorber)
                adj[absorber].add(k)
        del bags[victim], adj[victim]
    keep = sorted(bags)
    pos = {i: t for t, i in enumerate(keep)}
    new_edges = {(min(pos[i], pos[j]), max(pos[i], pos[j]))
                 for i in keep for j in adj[i]}
    return TreeDecomposition(td.host, [bags[i] for i in keep], sorted(new_edges))


def _max_weight_spanning_tree(nodes: int, weight) -> list[tuple[int, int]]:
    """Kruskal on the complete graph over `nodes` indices (ties by index)."""
    edges = sorted(
        ((i, j) for i in range(nodes) for j in range(i + 1, nodes)),
        key=lambda e: (-weight(*e), e),
    )
    parent = list(range(nodes))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    out = []
    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            out.append((i, j))
    return out


def clique_tree(g: Graph) -> TreeDecomposition:
    """Maximal cliques as bags, joined by a maximum-weight spanning tree on
    pairwise intersection sizes. Needs a chordal host."""
    if not is_chordal(g):
        raise DomainError("clique_tree needs a chordal graph")
    if g.n == 0:
        return TreeDecomposition(g, [], [])
    order = list(reversed(mcs_order(g)))  # perfect elimination order
    pos = {v: i for i, v in enumerate(order)}
    cands = []
    for v in order:
        later = {u for u in g.neighbors(v) if pos[u] > pos[v]}
        cands.append(frozenset(later | {v}))
    cliques = sorted(
        {c for c in cands if not any(c < other for other in cands)},
        key=sorted,
    )
    edges = _max_weight_spanning_tree(
        len(cliques), lambda i, j: len(cliques[i] & cliques[j])
    )
    return TreeDecomposition(g, cliques, edges)


def _is_clique(g: Graph, mask: int) -> bool:
    for v in iter_bits(mask):
        if mask & ~g.adj[v] & ~(1 << v):
            return False
    return True


def _strip_simplicial(g: Graph):
    """Peel vertices whose neighborhood is a clique; exact for treewidth."""
    cur = g
    names = list(range(g.n))
    stack = []  # (original vertex, original neighbor set at peel time)
    peeled_deg = -1
    progress = True
    while progress:
        progress = False
        for v in range(cur.n):
            if _is_clique(cur, cur.adj[v]):
                nbs = {names[u] for u in cur.neighbors(v)}
                stack.append((names[v], nbs))
                peeled_deg = max(peeled_deg, len(nbs))
                keep = [u for u in range(cur.n) if u != v]
                names = [names[u] for u in keep]
                cur = cur.induced(keep)
                progress = True
                break
    return cur, names, stack, peeled_deg


def _degeneracy(g: Graph) -> int:
    adj = list(g.adj)
    alive = (1 << g.n) - 1
    best = 0
    while alive:
        v = min(iter_bits(alive), key=lambda u: (adj[u] & alive).bit_count())
        best = max(best, (adj[v] & alive).bit_count())
        alive &= ~(1 << v)
    return best


def _min_fill_order(g: Graph) -> tuple[list[int], int]:
    adj = list(g.adj)
    alive = (1 << g.n) - 1
    order = []
    wid = -1
    for _ in range(g.n):
        best_v = best_fill = None
        for v in iter_bits(alive):
            nb = adj[v] & alive & ~(1 << v)
            fill = 0
            for u in iter_bits(nb):
                fill += (nb & ~adj[u] & ~(1 << u)).bit_count()
            fill //= 2
            if best_fill is None or fill < best_fill:
                best_v, best_fill = v, fill
        v = best_v
        nb = adj[v] & alive & ~(1 << v)
        wid = max(wid, nb.bit_count())
        for u in iter_bits(nb):
            adj[u] |= nb & ~(1 << u)
        alive &= ~(1 << v)
        order.append(v)
    return order, wid


def _elim_degree(adj: list[int], mask: int, v: int) -> int:
    """Degree of v once the vertices in mask are eliminated (contracted away)."""
    out = adj[v] & ~mask
    frontier = adj[v] & mask
    seen = frontier
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        out |= nxt & ~mask
        nxt = nxt & mask & ~seen
        seen |= nxt
        frontier = nxt
    return (out & ~(1 << v)).bit_count()


def _treewidth_core(g: Graph) -> tuple[int, list[int]]:
    """Exact treewidth of a peel-free core, with a realizing elimination order.

    Layered subset search over elimination prefixes, keeping the minimal
    prefix-maximum per subset; the min-fill bound prunes, the degeneracy
    bound can close the gap outright.
    """
    order_ub, ub = _min_fill_order(g)
    if _degeneracy(g) >= ub:
        return ub, order_ub
    n = g.n
    adj = list(g.adj)
    full = (1 << n) - 1
    seen = {0: -1}
    layer = {0: -1}
    for _ in range(n):
        nxt = {}
        for mask, m in layer.items():
            free = full & ~mask
            for low in iter_bits(free):
                d = _elim_degree(adj, mask, low)
                nm = m if m > d else d
                if nm >= ub:
                    continue
                key = mask | (1 << low)
                if nxt.get(key, n) > nm:
                    nxt[key] = nm
        layer = nxt
        seen.update(nxt)
        if not layer:
            break
    if full not in seen:
        return ub, order_ub
    val = seen[full]
    rev = []
    mask = full
    while mask:
        for v in iter_bits(mask):
            pm = mask & ~(1 << v)
            if pm in seen and seen[pm] <= val and _elim_degree(adj, pm, v) <= val:
                rev.append(v)
                mask = pm
                break
        else:
            raise AssertionError("broken reconstruction chain")
    return val, rev[::-1]


def _decomp_from_order(g: Graph, order: list[int]):
    """Bags and tree edges realizing the elimination order (fill-in bags)."""
    adj = list(g.adj)
    pos = {v: i for i, v in enumerate(order)}
    bags = []
    alive = (1 << g.n) - 1
    for v in order:
        nb = adj[v] & alive & ~(1 << v)
        bags.append(frozenset({v} | set(iter_bits(nb))))
        for u in iter_bits(nb):
            adj[u] |= nb & ~(1 << u)
        alive &= ~(1 << v)
    edges = []
    roots = []
    for i, v in enumerate(order):
        later = [u for u in bags[i] if u != v]
        if later:
            parent = min(later, key=lambda u: pos[u])
            edges.append((i, pos[parent]))
        else:
            roots.append(i)
    for a, b in zip(roots, roots[1:]):
        edges.append((a, b))
    return bags, edges


def treewidth_exact(g: Graph, maxn: int | None = None) -> tuple[int, TreeDecomposition]:
    """Exact treewidth plus a realizing decomposition.

    The size cap applies to the core left after simplicial peeling, so long
    paths, trees and chordal graphs pass at any size.
    """
    core, names, stack, peeled_deg = _strip_simplicial(g)
    cap = default_caps().treewidth_n if maxn is None else maxn
    if core.n > cap:
        raise TooLargeError(
            f"treewidth_exact: core has {core.n} vertices, cap {cap}"
        )
    if core.n:
        core_tw, order = _treewidth_core(core)
        raw_bags, raw_edges = _decomp_from_order(core, order)
        bags = [frozenset(names[v] for v in b) for b in raw_bags]
        edges = list(raw_edges)
    else:
        core_tw = -1
        bags, edges = [], []
    for v, nbs in reversed(stack):
        bag = frozenset({v} | nbs)
        if not bags:
            bags.append(bag)
            continue
        home = next(i for i, b in enumerate(bags) if nbs <= b)
        bags.append(bag)
        edges.append((home, len(bags) - 1))
    tw = max(core_tw, peeled_deg)
    td = TreeDecomposition(g, bags, edges)
    assert not validate(td) and width(td) == tw
    return tw, td


def nonleaf_bags_are_cutsets(td: TreeDecomposition) -> tuple[bool, int | None]:
    """Does removing each internal bag disconnect the host? Returns the first
    counterexample bag index if any. Needs a valid reduced decomposition of a
    connected host."""
    _require_valid(td)
    if not is_reduced(td):
        raise DomainError("decomposition is not reduced")
    if not is_connected(td.host):
        raise DomainError("host graph is disconnected")
    deg = [0] * len(td.bags)
    for i, j in td.tree_edges:
        deg[i] += 1
        deg[j] += 1
    for i, bag in enumerate(td.bags):
        if deg[i] < 2:
            continue
        rest = [v for v in range(td.host.n) if v not in bag]
        sub = td.host.induced(rest)
        if sub.n and is_connected(sub):
            return False, i
    return True, None


def hanging_subtrees(td: TreeDecomposition, i: int) -> list[frozenset]:
    """Vertex sets of the subtrees of T - bag i, each minus bag i itself,
    ordered by the neighbor bag index they hang from."""
    _require_valid(td)
    adj = [[] for _ in td.bags]
    for a, b in td.tree_edges:
        adj[a].append(b)
        adj[b].append(a)
    out = []
    for start in sorted(adj[i]):
        comp = {start}
        stack = [start]
        while stack:
            for j in adj[stack.pop()]:
                if j != i and j not in comp:
                    comp.add(j)
                    stack.append(j)
        verts = set()
        for j in comp:
            verts |= td.bags[j]
        out.append(frozenset(verts - td.bags[i]))
    return out


def format_pace(td: TreeDecomposition) -> str:
    """PACE-style text: solution line, bag lines, then tree edges (1-based)."""
    maxbag = max((len(b) for b in td.bags), default=0)
    lines = [f"s td {len(td.bags)} {maxbag} {td.host.n}"]
    for i, bag in enumerate(td.bags):
        lines.append(" ".join(["b", str(i + 1)] + [str(v + 1) for v in sorted(bag)]))
    for i, j in td.tree_edges:
        lines.append(f"{i + 1} {j + 1}")
    return "\n".join(lines) + "\n"


def parse_pace(text: str, host: Graph) -> TreeDecomposition:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("c")]
    if not lines or not lines[0].startswith("s td"):
        raise FormatError("missing 's td' solution line")
    head = lines[0].split()
    if len(head) != 5:
        raise FormatError(f"bad solution line: {lines[0]!r}")
    try:
        nbags, maxbag, nverts = int(head[2]), int(head[3]), int(head[4])
    except ValueError:
        raise FormatError(f"bad solution line: {lines[0]!r}") from None
    if nverts != host.n:
        raise FormatError(f"decomposition is over {nverts} vertices, host has {host.n}")
    bags: dict[int, frozenset] = {}
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "b":
            try:
                idx = int(parts[1])
                verts = [int(p) for p in parts[2:]]
            except (ValueError, IndexError):
                raise FormatError(f"bad bag line: {ln!r}") from None
            if not 1 <= idx <= nbags or idx in bags:
                raise FormatError(f"bad bag index on line: {ln!r}")
            if any(not 1 <= v <= nverts for v in verts):
                raise FormatError(f"vertex out of range on line: {ln!r}")
            bags[idx] = frozenset(v - 1 for v in verts)
        else:
            try:
                i, j = (int(p) for p in parts)
            except ValueError:
                raise FormatError(f"bad tree edge line: {ln!r}") from None
            if not (1 <= i <= nbags and 1 <= j <= nbags):
                raise FormatError(f"bag index out of range on line: {ln!r}")
            edges.append((i - 1, j - 1))
    if len(bags) != nbags:
        raise FormatError(f"expected {nbags} bags, found {len(bags)}")
    got = max((len(b) for b in bags.values()), default=0)
    if got != maxbag:
        raise FormatError(f"header says max bag {maxbag}, found {got}")
    return TreeDecomposition(host, [bags[i] for i in range(1, nbags + 1)], edges)
