"""Standard realisations of (2,3,inf)-graphs and the chamber checks run on them.

Frames are integer matrices stored column by column: ``frames[v][s]`` is the
chamber generator ``q(v, s)`` in the coordinates of the base frame.
"""
from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from ..admissible.gamma import cross_wall, identity_matrix
from ..errors import DomainError, IntegrityError, MalformedInputError, NotRealisableError
from ..graph.core import INF, FullyColouredGraph, bfs_distances, is_connected, residue
from ..graph.io import graph_from_dict, graph_to_dict
from .fm import fm_feasible
from .linalg import determinant, integer_inverse, matmul, transpose

EXHAUSTIVE_LIMIT = 24


@dataclass(frozen=True)
class Realisation:
    graph: FullyColouredGraph
    base: int
    frames: tuple  # frames[v] = tuple of columns

    def rows(self, v):
        return transpose(self.frames[v])


def realise(G: FullyColouredGraph) -> Realisation:
    """Transport frames along a spanning tree, then close every other edge."""
    if not is_connected(G):
        raise DomainError("graph is not connected")
    for v in range(G.vertex_count):
        for s in range(G.rank):
            for t in range(G.rank):
                if s != t and G.m[v][s][t] not in (2, 3, INF):
                    raise DomainError(f"m({v};{s},{t}) = {G.m[v][s][t]} is not in {{2, 3, inf}}")
    k = G.rank
    frames = [None] * G.vertex_count
    parent = [None] * G.vertex_count
    frames[G.base] = identity_matrix(k)
    queue = deque([G.base])
    while queue:
        v = queue.popleft()
        for s in range(k):
            w = G.action[v][s]
            if frames[w] is None:
                frames[w] = cross_wall(frames[v], s, G.m[v][s])
                parent[w] = (v, s)
                queue.append(w)
    for v, w, s in G.edges():
        if cross_wall(frames[v], s, G.m[v][s]) != frames[w]:
            cycle = _tree_path(parent, v)[::-1] + _tree_path(parent, w)
            raise NotRealisableError(
                f"frames do not close across the {G.colours[s]}-edge {v}--{w}", cycle)
    return Realisation(G, G.base, tuple(frames))


def _tree_path(parent, v):
    path = [v]
    while parent[v] is not None:
        v = parent[v][0]
        path.append(v)
    return path


class _Inverses(dict):
    def __init__(self, R):
        super().__init__()
        self.R = R

    def __missing__(self, v):
        inv = integer_inverse(self.R.rows(v))
        self[v] = inv
        return inv


def relative_matrix(R: Realisation, v: int, w: int, inverses=None):
    """Coordinates of the generators of ``C(w)`` in the frame of ``v`` (rows)."""
    inv = inverses[v] if inverses is not None else integer_inverse(R.rows(v))
    return matmul(inv, R.rows(w))


def chambers_meet(R: Realisation, v: int, w: int, method: str = "auto", inverses=None) -> bool:
    """Whether the open chambers of ``v`` and ``w`` intersect."""
    if method == "auto":
        B = relative_matrix(R, v, w, inverses)
        # a row with no positive entry is a wall of C(v) with C(w) on its far side
        if any(all(x <= 0 for x in row) for row in B):
            return False
    elif method != "fm":
        raise DomainError(f"unknown method {method!r}")
    k = R.graph.rank
    Mv, Mw = R.rows(v), R.rows(w)
    system = []
    for i in range(k):
        # sum_s a_s q(v,s) - sum_s b_s q(w,s) = 0 in coordinate i
        system.append((list(Mv[i]) + [-x for x in Mw[i]], "="))
    for j in range(2 * k):
        system.append(([int(i == j) for i in range(2 * k)], ">"))
    return fm_feasible(system)


def verify_chamber_disjointness(R: Realisation, method: str = "auto") -> bool:
    inverses = _Inverses(R)
    n = R.graph.vertex_count
    return not any(chambers_meet(R, v, w, method, inverses)
                   for v in range(n) for w in range(v + 1, n))


def _angle_key(p):
    x, y = p
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _angle_cmp(p, q):
    hp, hq = _angle_key(p), _angle_key(q)
    if hp != hq:
        return hp - hq
    cross = p[0] * q[1] - p[1] * q[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def _direction(p):
    from math import gcd
    g = gcd(abs(p[0]), abs(p[1]))
    return (p[0] // g, p[1] // g)


def rays_in_closed_halfplane(rays) -> bool:
    """Whether all 2D rays lie in one closed half-plane through the origin."""
    for r in rays:
        crosses = [r[0] * q[1] - r[1] * q[0] for q in rays]
        if all(c >= 0 for c in crosses) or all(c <= 0 for c in crosses):
            return True
    return False


def _check_residue_planar(R, inverses, Rv, s, t, mval):
    v0 = min(Rv)
    cones = []
    for x in sorted(Rv):
        B = relative_matrix(R, v0, x, inverses)
        for r in range(R.graph.rank):
            if r in (s, t):
                continue
            col_r = [B[i][r] for i in range(len(B))]
            if col_r != [int(i == r) for i in range(len(B))]:
                return False
        a = _direction((B[s][s], B[t][s]))
        b = _direction((B[s][t], B[t][t]))
        cones.append((a, b))
    if mval == INF:
        return rays_in_closed_halfplane([r for c in cones for r in c])
    if len(Rv) != 2 * mval:
        return False
    rays = sorted({r for c in cones for r in c}, key=cmp_to_key(_angle_cmp))
    lines = {r if _angle_key(r) == 0 else (-r[0], -r[1]) for r in rays}
    if len(rays) != 2 * mval or len(lines) != mval:
        return False
    # consecutive rays around the circle must bound exactly one chamber each
    sectors = {frozenset((rays[i], rays[(i + 1) % len(rays)])) for i in range(len(rays))}
    return sorted(map(frozenset, cones), key=sorted) == sorted(sectors, key=sorted) \
        and len(set(map(frozenset, cones))) == len(cones)


def verify_residue_walls(R: Realisation) -> bool:
    """Every finite 2-residue has ``2m`` chambers cut out by ``m`` wall lines."""
    G = R.graph
    inverses = _Inverses(R)
    for s in range(G.rank):
        for t in range(s + 1, G.rank):
            seen = set()
            for v in range(G.vertex_count):
                if v in seen:
                    continue
                Rv = residue(G, v, (s, t)).vertices
                seen |= Rv
                if not _check_residue_planar(R, inverses, Rv, s, t, G.m[v][s][t]):
                    return False
    return True


def semi_geodesic_triples(R: Realisation):
    """All ``(v', s, w)`` with ``d(v's, w) = 1 + d(v', w)``, in scan order."""
    G = R.graph
    dist = [bfs_distances(G, v) for v in range(G.vertex_count)]
    for vp in range(G.vertex_count):
        for s in range(G.rank):
            v = G.action[vp][s]
            for w in range(G.vertex_count):
                if dist[v][w] == dist[vp][w] + 1:
                    yield vp, s, w


def halfspace_check(R: Realisation, samples: int | None = None, seed: int = 0) -> bool:
    """Chambers beyond the wall ``(v', v's)`` lie in the half-space ``H(v', s)``.

    Exhaustive when ``samples`` is None or the graph has at most 24 vertices;
    otherwise a seeded sample of that many triples.
    """
    triples = list(semi_geodesic_triples(R))
    if samples is not None and R.graph.vertex_count > EXHAUSTIVE_LIMIT and samples < len(triples):
        triples = random.Random(seed).sample(triples, samples)
    inverses = _Inverses(R)
    for vp, s, w in triples:
        row = inverses[vp][s]
        for col in R.frames[w]:
            if sum(a * b for a, b in zip(row, col)) < 0:
                return False
    return True


def frame_properties(R: Realisation) -> bool:
    """Determinants are +-1 and crossing any wall twice restores the frame."""
    G = R.graph
    for v in range(G.vertex_count):
        if abs(determinant(R.rows(v))) != 1:
            return False
        for s in range(G.rank):
            w = G.action[v][s]
            back = cross_wall(cross_wall(R.frames[v], s, G.m[v][s]), s, G.m[w][s])
            if back != R.frames[v]:
                return False
    return True


def _point_in_some_chamber(p, R, inverses):
    for u in range(R.graph.vertex_count):
        inv = inverses[u]
        if all(sum(a * b for a, b in zip(row, p)) >= 0 for row in inv):
            return True
    return False


def convexity_spot_check(R: Realisation, samples: int = 20, steps: int = 8, seed: int = 0) -> str:
    """``"pass"``, ``"fail"`` or ``"skipped"`` (chambers do not fill the space)."""
    inverses = _Inverses(R)
    G = R.graph
    interior = [[sum(col[i] for col in R.frames[v]) for i in range(G.rank)]
                for v in range(G.vertex_count)]
    if not _point_in_some_chamber([-x for x in interior[R.base]], R, inverses):
        return "skipped"
    rng = random.Random(seed)
    for _ in range(samples):
        v, w = rng.randrange(G.vertex_count), rng.randrange(G.vertex_count)
        for i in range(steps + 1):
            lam = Fraction(i, steps)
            p = [lam * a + (1 - lam) * b for a, b in zip(interior[v], interior[w])]
            if not _point_in_some_chamber(p, R, inverses):
                return "fail"
    return "pass"


def coxeter_ball(orders, radius: int) -> list[int]:
    """Sphere sizes of a Coxeter graph, found by walking standard-realisation frames.

    ``orders`` is the Coxeter matrix with entries in {1, 2, 3, inf}.  Distinct
    group elements have distinct frames, so the walk needs no group
    presentation and works for infinite groups.
    """
    k = len(orders)
    start = identity_matrix(k)
    seen = {start}
    frontier = [start]
    spheres = [1]
    for _ in range(radius):
        nxt = []
        for x in frontier:
            for s in range(k):
                y = cross_wall(x, s, orders[s])
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        spheres.append(len(nxt))
        frontier = nxt
    return spheres


def realisation_to_dict(R: Realisation) -> dict:
    return {
        "graph": graph_to_dict(R.graph),
        "base": R.base,
        "frames": [[list(col) for col in f] for f in R.frames],
    }


def realisation_from_dict(data: dict) -> Realisation:
    try:
        G = graph_from_dict(data["graph"])
        frames = tuple(tuple(tuple(int(x) for x in col) for col in f) for f in data["frames"])
        base = int(data.get("base", G.base))
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"bad realisation JSON: {exc}") from None
    if len(frames) != G.vertex_count or any(
            len(f) != G.rank or any(len(c) != G.rank for c in f) for f in frames):
        raise MalformedInputError("frames do not match the graph's vertex count and rank")
    return Realisation(G, base, frames)


def dumps_realisation(R: Realisation) -> str:
    return json.dumps(realisation_to_dict(R), separators=(",", ":"))


def check_unimodular(R: Realisation):
    for v in range(R.graph.vertex_count):
        if abs(determinant(R.rows(v))) != 1:
            raise IntegrityError(f"frame of vertex {v} is not unimodular")
