"""Fully coloured graphs stored as dense tables.

A graph on vertices ``0..N-1`` with colours ``c_0..c_{k-1}`` is given by an
action table ``action[v][i]`` (the vertex ``v c_i``) and an order table
``m[v][i][j]``.  Infinite orders are stored as :data:`INF`.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from ..errors import DomainError, MalformedInputError, NoPathError

INF = math.inf


@dataclass(frozen=True)
class FullyColouredGraph:
    colours: tuple[str, ...]
    action: tuple[tuple[int, ...], ...]
    m: tuple[tuple[tuple[float, ...], ...], ...]
    base: int = 0

    def __post_init__(self):
        k = len(self.colours)
        if len(set(self.colours)) != k:
            raise MalformedInputError(f"duplicate colour labels in {self.colours}")
        n = len(self.action)
        if len(self.m) != n:
            raise MalformedInputError(
                f"action has {n} rows but m has {len(self.m)}")
        for v in range(n):
            row = self.action[v]
            if len(row) != k:
                raise MalformedInputError(f"action row {v} has length {len(row)}, expected {k}")
            for w in row:
                if not (isinstance(w, int) and 0 <= w < n):
                    raise MalformedInputError(f"action row {v} refers to vertex {w!r}")
            if len(self.m[v]) != k or any(len(r) != k for r in self.m[v]):
                raise MalformedInputError(f"m block of vertex {v} is not {k}x{k}")
        if n and not 0 <= self.base < n:
            raise MalformedInputError(f"base vertex {self.base} out of range")

    @classmethod
    def from_tables(cls, colours: Iterable[str], action, m, base: int = 0):
        return cls(
            tuple(str(c) for c in colours),
            tuple(tuple(int(w) for w in row) for row in action),
            tuple(tuple(tuple(x for x in r) for r in block) for block in m),
            base,
        )

    @property
    def vertex_count(self) -> int:
        return len(self.action)

    @property
    def rank(self) -> int:
        return len(self.colours)

    def index(self, colour) -> int:
        """Colour index for a label or an index."""
        if isinstance(colour, int):
            if not 0 <= colour < self.rank:
                raise DomainError(f"colour index {colour} out of range")
            return colour
        try:
            return self.colours.index(colour)
        except ValueError:
            raise DomainError(f"unknown colour {colour!r}") from None

    def act(self, v: int, s: int) -> int:
        return self.action[v][s]

    def walk(self, v: int, colours: Iterable[int]) -> int:
        for s in colours:
            v = self.action[v][s]
        return v

    def edges(self):
        """Unordered edges ``(v, w, s)`` with ``v <= w``, in scan order."""
        for v in range(self.vertex_count):
            for s, w in enumerate(self.action[v]):
                if v <= w:
                    yield v, w, s


class Violation(NamedTuple):
    axiom: str
    witness: tuple
    detail: str


@dataclass(frozen=True)
class Residue:
    colours: frozenset
    vertices: frozenset
    through: int = field(default=0)


def _alternating(G: FullyColouredGraph, v: int, s: int, t: int, k: int) -> int:
    for _ in range(k):
        v = G.action[G.action[v][s]][t]
    return v


def validate_graph(G: FullyColouredGraph) -> list[Violation]:
    """Check the fully coloured graph axioms; an empty list means valid.

    Universality is not checked (no finite test exists); it is a standing
    assumption of every downstream operation.
    """
    out: list[Violation] = []
    k = G.rank
    for v in range(G.vertex_count):
        for s in range(k):
            if G.action[G.action[v][s]][s] != v:
                out.append(Violation("involution", (v, s), f"(v s) s != v"))
    for v in range(G.vertex_count):
        for s in range(k):
            for t in range(k):
                val = G.m[v][s][t]
                if not (val == INF or (isinstance(val, int) and val >= 1)):
                    out.append(Violation("m-range", (v, s, t), f"m = {val!r}"))
                    continue
                if (val == 1) != (s == t):
                    out.append(Violation("m-diagonal", (v, s, t), f"m = {val}"))
                if val != G.m[v][t][s]:
                    out.append(Violation("m-symmetric", (v, s, t),
                                         f"{val} != {G.m[v][t][s]}"))
                if val != G.m[G.action[v][s]][s][t]:
                    out.append(Violation("m-residue-constant", (v, s, t),
                                         f"m(v)={val}, m(vs)={G.m[G.action[v][s]][s][t]}"))
                if s < t and val != INF and isinstance(val, int) and val >= 1:
                    if _alternating(G, v, s, t, val) != v:
                        out.append(Violation("alternating-word", (v, s, t),
                                             f"(st)^{val} does not fix v"))
    seen = set()
    for s in range(k):
        for t in range(s + 1, k):
            for v in range(G.vertex_count):
                if (v, s, t) in seen:
                    continue
                R = residue(G, v, (s, t))
                for w in R.vertices:
                    seen.add((w, s, t))
                val = G.m[v][s][t]
                if val != INF and isinstance(val, int) and (2 * val) % len(R.vertices):
                    out.append(Violation("residue-divides", (v, s, t),
                                         f"#R={len(R.vertices)} does not divide 2m={2 * val}"))
    return out


def residue(G: FullyColouredGraph, v: int, colours: Iterable) -> Residue:
    """Orbit of ``v`` under words in the given colours (breadth first)."""
    if not 0 <= v < G.vertex_count:
        raise DomainError(f"vertex {v} out of range")
    idx = sorted({G.index(c) for c in colours})
    seen = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for s in idx:
            y = G.action[x][s]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return Residue(frozenset(idx), frozenset(seen), v)


def bfs_distances(G: FullyColouredGraph, source: int) -> list[int]:
    """Distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * G.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in G.action[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(G: FullyColouredGraph, v: int, w: int) -> int:
    d = bfs_distances(G, v)[w]
    if d < 0:
        raise NoPathError(f"no path from {v} to {w}")
    return d


def is_connected(G: FullyColouredGraph) -> bool:
    return G.vertex_count == 0 or min(bfs_distances(G, 0)) >= 0


def induced_subgraph(G: FullyColouredGraph, R: Residue) -> FullyColouredGraph:
    """A residue viewed as a fully coloured graph on its own colours."""
    verts = sorted(R.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    cols = sorted(R.colours)
    action = [[pos[G.action[v][s]] for s in cols] for v in verts]
    m = [[[G.m[v][s][t] for t in cols] for s in cols] for v in verts]
    return FullyColouredGraph.from_tables(
        [G.colours[s] for s in cols], action, m, pos[R.through])


def coxeter_m_table(action: Sequence[Sequence[int]], orders: Sequence[Sequence[float]]):
    """Constant m-table for a Coxeter-like graph with order matrix ``orders``."""
    block = tuple(tuple(row) for row in orders)
    return [block] * len(action)
