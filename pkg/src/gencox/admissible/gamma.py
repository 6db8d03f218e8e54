"""Admissible graphs built by breadth-first search over (shape, frame) states.

A vertex of an admissible graph is stored as its current shape together with
the integer matrix whose columns are the chamber generators of the standard
realisation, written in the frame of the base vertex.  Two walks reach the
same vertex exactly when they reach the same (shape, matrix) pair: equal
vertices carry equal frames because the standard realisation is well
defined, and distinct vertices carry distinct frames because their open
chambers are disjoint.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..errors import DomainError, InconclusiveError, IntegrityError
from ..graph.core import FullyColouredGraph
from ..relations import Generator, build_qn, generators
from .shapes import Shape, nabla

M_VALUE_CAP = 4
DEFAULT_RADIUS_CAP = 64

_N = {2: 0, 3: 1}


@dataclass(frozen=True)
class GammaState:
    object: Shape
    matrix: tuple[tuple[int, ...], ...]  # columns, one per colour


@dataclass(frozen=True)
class MValue:
    m: int
    p: int
    relation: tuple


def m_value(u: Shape, s, t) -> MValue:
    """Order of ``st`` at a vertex whose shape is ``u``.

    ``p`` is half the length of the relation word through ``u(s)`` and
    ``[u nabla s](t)``; the result is the least multiple ``p q`` such that the
    alternating move ``(s t)^{p q}`` returns to ``u``.
    """
    i, j = u.index(s), u.index(t)
    if i == j:
        raise DomainError("m_value needs two distinct colours")
    Q = build_qn(u.n)
    a = u.assignment[i]
    b = Q._star1(u.assignment[j], a)
    p, g = Q.relation_through(a, b)
    x = u
    for q in range(1, M_VALUE_CAP + 1):
        for _ in range(p):
            x = nabla(nabla(x, i), j)
        if x == u:
            m = p * q
            if m not in (2, 3):
                raise IntegrityError(f"m({u}; {s},{t}) = {m} is outside {{2, 3}}")
            return MValue(m, p, g)
    raise IntegrityError(f"alternating moves at {u} on ({s},{t}) did not close "
                         f"within {M_VALUE_CAP * p} steps")


def m_block(u: Shape) -> tuple[tuple[int, ...], ...]:
    k = u.rank
    rows = [[1] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            rows[i][j] = rows[j][i] = m_value(u, i, j).m
    return tuple(tuple(r) for r in rows)


def identity_matrix(k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(i == j) for i in range(k)) for j in range(k))


def cross_wall(columns, s: int, mrow) -> tuple[tuple[int, ...], ...]:
    """New frame after crossing the wall of colour ``s``.

    ``q(vs, s) = -q(v, s) + sum_{t != s} N(m(v; s, t)) q(v, t)``; other
    columns are unchanged.
    """
    new = [-x for x in columns[s]]
    for t, col in enumerate(columns):
        if t == s:
            continue
        c = _N[mrow[t]] if mrow[t] in _N else _n_general(mrow[t])
        if c:
            for r in range(len(new)):
                new[r] += c * col[r]
    return columns[:s] + (tuple(new),) + columns[s + 1:]


def _n_general(m):
    from ..graph.sequences import n_value
    return n_value(m)


class _MCache(dict):
    def __missing__(self, u):
        block = m_block(u)
        self[u] = block
        return block


@dataclass
class AdmissibleGraph:
    shape: Shape
    states: list[GammaState]
    action: list[list[int]]  # -1 where the radius cap cut the search
    m: list[tuple]
    complete: bool
    spheres: list[int] = field(default_factory=list)
    graph: FullyColouredGraph | None = None

    @property
    def vertex_count(self) -> int:
        return len(self.states)

    def index_of(self, state: GammaState) -> int:
        return self._index[state]


def step(state: GammaState, s: int, mcache=None) -> GammaState:
    mcache = mcache if mcache is not None else _MCache()
    block = mcache[state.object]
    return GammaState(nabla(state.object, s), cross_wall(state.matrix, s, block[s]))


def build_gamma(u: Shape, radius_cap: int = DEFAULT_RADIUS_CAP) -> AdmissibleGraph:
    if radius_cap < 1:
        raise DomainError("radius_cap must be at least 1")
    k = u.rank
    mcache = _MCache()
    start = GammaState(u, identity_matrix(k))
    index = {start: 0}
    states = [start]
    depth = [0]
    action: list[list[int]] = [[-1] * k]
    queue = deque([0])
    complete = True
    while queue:
        v = queue.popleft()
        x = states[v]
        if depth[v] >= radius_cap:
            # beyond the cap only edges back into the ball are recorded
            for s in range(k):
                y = step(x, s, mcache)
                w = index.get(y)
                if w is None:
                    complete = False
                else:
                    action[v][s] = w
            continue
        for s in range(k):
            y = step(x, s, mcache)
            w = index.get(y)
            if w is None:
                w = len(states)
                index[y] = w
                states.append(y)
                depth.append(depth[v] + 1)
                action.append([-1] * k)
                queue.append(w)
            action[v][s] = w
    m = [mcache[x.object] for x in states]
    spheres = [0] * (max(depth) + 1)
    for d in depth:
        spheres[d] += 1
    G = FullyColouredGraph(u.colours, tuple(tuple(r) for r in action), tuple(m), 0) if complete else None
    out = AdmissibleGraph(u, states, action, m, complete, spheres, G)
    out._index = index
    return out


def bijective_shape(n: int) -> Shape:
    """Colour ``g<i>`` assigned to the i-th generator of ``T_n`` in lexicographic order."""
    T = generators(n)
    return Shape(n, tuple(f"g{i}" for i in range(len(T))), tuple(T))


def apply_letters(state: GammaState, word, mcache=None) -> GammaState | None:
    """Let each generator act as the colour currently carrying it.

    Returns None when some letter is not in the image of the current shape.
    """
    mcache = mcache if mcache is not None else _MCache()
    for g in word:
        g = Generator(*g)
        try:
            s = state.object.assignment.index(g)
        except ValueError:
            return None
        state = step(state, s, mcache)
    return state


def kn_apply(n: int, word, radius_cap: int = DEFAULT_RADIUS_CAP) -> GammaState:
    """State reached from the base by ``word`` under the K_n action."""
    word = [Generator(*g) for g in word]
    Q = build_qn(n)
    for g in word:
        Q.check_generator(g)
    if len(word) > radius_cap:
        raise InconclusiveError(f"word of length {len(word)} exceeds the cap {radius_cap}")
    u = bijective_shape(n)
    return apply_letters(GammaState(u, identity_matrix(u.rank)), word)


def kn_equal(n: int, w1, w2, radius_cap: int = DEFAULT_RADIUS_CAP) -> bool:
    return kn_apply(n, w1, radius_cap) == kn_apply(n, w2, radius_cap)
