"""Reference graphs built directly from groups, independent of shapes and frames.

Coxeter graphs come from Cayley graphs of permutation groups: the vertex
set is the group, colour ``s`` acts by right multiplication, and ``m`` is
the order of ``st``.
"""
from __future__ import annotations

from collections import deque
from typing import Callable, Hashable, Sequence

from .graph.core import FullyColouredGraph


def _order(x, mul, identity) -> int:
    k, y = 1, x
    while y != identity:
        y = mul(y, x)
        k += 1
    return k


def cayley_graph(generators: Sequence[Hashable], mul: Callable, identity: Hashable,
                 labels: Sequence[str] | None = None) -> FullyColouredGraph:
    """Cayley graph of the group generated by involutions ``generators``."""
    k = len(generators)
    labels = list(labels) if labels is not None else [f"s{i}" for i in range(k)]
    index = {identity: 0}
    elems = [identity]
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in generators:
            h = mul(g, s)
            if h not in index:
                index[h] = len(elems)
                elems.append(h)
                queue.append(h)
    action = [[index[mul(g, s)] for s in generators] for g in elems]
    orders = [[1 if i == j else _order(mul(generators[i], generators[j]), mul, identity)
               for j in range(k)] for i in range(k)]
    return FullyColouredGraph.from_tables(labels, action, [orders] * len(elems), 0)


def _compose(p, q):
    return tuple(p[i] for i in q)


def _transposition(n, i):
    p = list(range(n))
    p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)


def symmetric_group_graph(letters: int) -> FullyColouredGraph:
    """Coxeter graph of type A_{letters-1}: adjacent transpositions."""
    gens = [_transposition(letters, i) for i in range(letters - 1)]
    return cayley_graph(gens, _compose, tuple(range(letters)))


def type_d_graph(n: int) -> FullyColouredGraph:
    """Coxeter graph of type D_n as even signed permutations of ``1..n``."""
    def mul(p, q):
        return tuple(p[abs(x) - 1] * (1 if x > 0 else -1) for x in q)
    ident = tuple(range(1, n + 1))
    gens = []
    for i in range(n - 1):
        p = list(ident)
        p[i], p[i + 1] = p[i + 1], p[i]
        gens.append(tuple(p))
    p = list(ident)
    p[n - 2], p[n - 1] = -ident[n - 1], -ident[n - 2]
    gens.append(tuple(p))
    return cayley_graph(gens, mul, ident)


def rank1_graph(label: str = "s") -> FullyColouredGraph:
    return FullyColouredGraph.from_tables([label], [[1], [0]], [[[1]], [[1]]])


def hexagon_graph() -> FullyColouredGraph:
    """Rank 2, m = 3 (Coxeter type A_2)."""
    G = symmetric_group_graph(3)
    return FullyColouredGraph(("s", "t"), G.action, G.m, 0)


def square_graph() -> FullyColouredGraph:
    from .graph.structure import product
    return product(rank1_graph("s"), rank1_graph("t"))


def affine_a2_quotient(k: int = 3) -> FullyColouredGraph:
    """Finite quotient of the affine A_2 Coxeter graph by translations mod ``k``.

    Elements are affine maps ``x -> perm(x) + c`` on ``(Z/k)^3``.  The quotient
    has all m-values 3 but is not universal, so it is only a fixture for the
    local realisability criterion.
    """
    def mul(a, b):
        # (a*b)(x) = a(b(x)); maps stored as (perm, shift), applied as x_perm + shift
        pa, ca = a
        pb, cb = b
        perm = tuple(pb[pa[i]] for i in range(3))
        shift = tuple((cb[pa[i]] + ca[i]) % k for i in range(3))
        return perm, shift

    zero = (0, 0, 0)
    s1 = ((1, 0, 2), zero)
    s2 = ((0, 2, 1), zero)
    s0 = ((2, 1, 0), (1 % k, 0, (-1) % k))
    return cayley_graph([s0, s1, s2], mul, ((0, 1, 2), zero), ["s0", "s1", "s2"])


def short_residue_cube(m_st: int = 4) -> FullyColouredGraph:
    """(Z/2)^3 with colours the unit vectors and one {s,t}-residue of order ``m_st``."""
    verts = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    index = {v: i for i, v in enumerate(verts)}
    units = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    action = [[index[tuple((x + y) % 2 for x, y in zip(v, u))] for u in units] for v in verts]
    m = []
    for v in verts:
        block = [[1 if i == j else 2 for j in range(3)] for i in range(3)]
        if v[0] == 0:
            block[1][2] = block[2][1] = m_st
        m.append(block)
    return FullyColouredGraph.from_tables(["r", "s", "t"], action, m, 0)


def schreier_graph(colours: Sequence[str], involutions) -> FullyColouredGraph:
    """Graph of fixed-point-free involutions on ``0..N-1``.

    ``m(v; s, t)`` is half the size of the ``{s, t}``-orbit of ``v``, which makes
    every residue a single alternating cycle and the axioms hold by construction.
    """
    k = len(colours)
    n = len(involutions[0])
    action = [[involutions[s][v] for s in range(k)] for v in range(n)]
    m = []
    for v in range(n):
        block = [[1] * k for _ in range(k)]
        for s in range(k):
            for t in range(s + 1, k):
                size, w = 0, v
                while True:
                    w = action[action[w][s]][t]
                    size += 2
                    if w == v:
                        break
                block[s][t] = block[t][s] = size // 2
        m.append(block)
    return FullyColouredGraph.from_tables(colours, action, m, 0)


# r, s, t columns of a 14-vertex graph found by random search over involutions
_MIXED_HEXAGON_ACTION = (
    (4, 1, 7), (11, 0, 2), (3, 7, 1), (2, 10, 12), (0, 11, 13), (12, 9, 11), (9, 12, 10),
    (13, 2, 0), (10, 13, 9), (6, 5, 8), (8, 3, 6), (1, 4, 5), (5, 6, 3), (7, 8, 4),
)


def mixed_hexagon_graph() -> FullyColouredGraph:
    """Valid rank-3 graph whose ``{s,t}``-hexagon has neighbours of orders 2, 2, 3, 2, 2, 3.

    Its structure sequences are ``(0,0,1,0,0,1)`` and ``(0,0,1,1)``; the latter
    breaks the square condition, so the graph is not realisable.
    """
    cols = list(zip(*_MIXED_HEXAGON_ACTION))
    return schreier_graph(["r", "s", "t"], cols)


def lopsided_hexagon_graph() -> FullyColouredGraph:
    """Six-vertex rank-3 graph whose ``{s,t}``-hexagon has sequence ``(1,0,0,0,0,0)``.

    ``r`` agrees with ``t`` on the edge ``{3, 4}``; that two-vertex
    ``{r,t}``-residue is given ``m = 3`` (allowed, since 2 divides 6) while every
    other residue off the hexagon has ``m = 2``.
    """
    action = [[1, 1, 5], [0, 0, 2], [5, 3, 1], [4, 2, 4], [3, 5, 3], [2, 4, 0]]
    plain = [[1, 2, 2], [2, 1, 3], [2, 3, 1]]
    bent = [[1, 2, 3], [2, 1, 3], [3, 3, 1]]
    m = [plain, plain, plain, bent, bent, plain]
    return FullyColouredGraph.from_tables(["r", "s", "t"], action, m, 0)
