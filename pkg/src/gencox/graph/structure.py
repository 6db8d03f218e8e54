"""Products, irreducibility and colour-permuting isomorphism."""
from __future__ import annotations

from collections import Counter, deque
from itertools import combinations, permutations

from ..errors import RelabelRequiredError
from .core import FullyColouredGraph, induced_subgraph, residue


def product(G1: FullyColouredGraph, G2: FullyColouredGraph) -> FullyColouredGraph:
    """Cartesian product; vertex ``(v1, v2)`` is numbered ``v1 * |V2| + v2``."""
    clash = set(G1.colours) & set(G2.colours)
    if clash:
        raise RelabelRequiredError(f"colour labels shared by both factors: {sorted(clash)}")
    n2 = G2.vertex_count
    k1, k2 = G1.rank, G2.rank
    action, m = [], []
    for v1 in range(G1.vertex_count):
        for v2 in range(n2):
            action.append([G1.action[v1][s] * n2 + v2 for s in range(k1)]
                          + [v1 * n2 + G2.action[v2][s] for s in range(k2)])
            block = []
            for s in range(k1 + k2):
                row = []
                for t in range(k1 + k2):
                    if s < k1 and t < k1:
                        row.append(G1.m[v1][s][t])
                    elif s >= k1 and t >= k1:
                        row.append(G2.m[v2][s - k1][t - k1])
                    else:
                        row.append(2)
                block.append(row)
            m.append(block)
    return FullyColouredGraph.from_tables(
        G1.colours + G2.colours, action, m, G1.base * n2 + G2.base)


def _extend(G1, G2, cmap, v0, w0):
    """Extend ``v0 -> w0`` along colour actions; vertex map or None."""
    f = [-1] * G1.vertex_count
    used = [False] * G2.vertex_count
    f[v0] = w0
    used[w0] = True
    queue = deque([v0])
    k = G1.rank
    while queue:
        v = queue.popleft()
        w = f[v]
        mv, mw = G1.m[v], G2.m[w]
        for s in range(k):
            row_v, row_w = mv[s], mw[cmap[s]]
            for t in range(k):
                if row_v[t] != row_w[cmap[t]]:
                    return None
        for s in range(k):
            x = G1.action[v][s]
            y = G2.action[w][cmap[s]]
            if f[x] < 0:
                if used[y]:
                    return None
                f[x] = y
                used[y] = True
                queue.append(x)
            elif f[x] != y:
                return None
    if min(f) < 0:
        return None
    return f


def _m_histogram(G, cmap=None):
    k = G.rank
    cmap = cmap or list(range(k))
    hist = Counter()
    for v in range(G.vertex_count):
        for s in range(k):
            for t in range(k):
                hist[(cmap[s], cmap[t], G.m[v][s][t])] += 1
    return hist


def _residue_sizes(G):
    """``sizes[subset][v]``: size of the residue through ``v`` for colour pairs and triples."""
    k = G.rank
    sizes = {}
    for size in (2, 3):
        if size >= k:
            break
        for sub in combinations(range(k), size):
            col = [0] * G.vertex_count
            for v in range(G.vertex_count):
                if col[v]:
                    continue
                R = residue(G, v, sub).vertices
                for w in R:
                    col[w] = len(R)
            sizes[frozenset(sub)] = col
    return sizes


def isomorphic(G1: FullyColouredGraph, G2: FullyColouredGraph,
               allow_colour_permutation: bool = False, base_to_base: bool = False):
    """Find ``(colour map, vertex map)`` or return None.

    The colour map sends colour labels of ``G1`` to labels of ``G2``; the
    vertex map is a list indexed by vertices of ``G1``.  Both graphs must
    be connected.  With ``base_to_base`` only pointed isomorphisms are tried.
    Without colour permutation, colours are matched by label.
    """
    if G1.vertex_count != G2.vertex_count or G1.rank != G2.rank:
        return None
    if G1.vertex_count == 0:
        return {}, []
    k = G1.rank
    if allow_colour_permutation:
        candidates = permutations(range(k))
    else:
        if set(G1.colours) != set(G2.colours):
            return None
        candidates = [tuple(G2.colours.index(c) for c in G1.colours)]
    h2 = _m_histogram(G2)
    v0 = G1.base
    sizes1 = sizes2 = None
    for cmap in candidates:
        if _m_histogram(G1, cmap) != h2:
            continue
        if base_to_base:
            targets = [G2.base]
        else:
            if sizes1 is None:
                sizes1, sizes2 = _residue_sizes(G1), _residue_sizes(G2)
            # residue sizes around v0 must match those around the target
            targets = [
                w for w in range(G2.vertex_count)
                if all(sizes2[frozenset(cmap[i] for i in sub)][w] == col[v0]
                       for sub, col in sizes1.items())
            ]
        for w0 in targets:
            f = _extend(G1, G2, cmap, v0, w0)
            if f is not None:
                return {G1.colours[s]: G2.colours[cmap[s]] for s in range(k)}, f
    return None


def is_irreducible(G: FullyColouredGraph) -> bool:
    """True iff ``G`` does not split as a product along a colour bipartition."""
    k = G.rank
    if k < 2:
        return True
    for size in range(1, k // 2 + 1):
        for A in combinations(range(k), size):
            if size * 2 == k and 0 not in A:
                continue
            B = tuple(s for s in range(k) if s not in A)
            if any(G.m[v][a][b] != 2 for v in range(G.vertex_count) for a in A for b in B):
                continue
            RA = induced_subgraph(G, residue(G, G.base, A))
            RB = induced_subgraph(G, residue(G, G.base, B))
            if RA.vertex_count * RB.vertex_count != G.vertex_count:
                continue
            if isomorphic(product(RA, RB), G) is not None:
                return False
    return True
