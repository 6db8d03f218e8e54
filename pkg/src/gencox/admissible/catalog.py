"""Rank-3 shape classification, the cyclic-permutation experiment and the rank-4 catalog."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..errors import DomainError
from ..graph.core import validate_graph
from ..graph.sequences import check_realisable_233
from ..graph.structure import is_irreducible, isomorphic
from ..relations import Generator, build_qn, generators
from .gamma import DEFAULT_RADIUS_CAP, AdmissibleGraph, apply_letters, build_gamma
from .shapes import Shape, canonical_shape, cyclic_permute, is_reducible_shape, orbit_closure

RANK3_REPRESENTATIVES = {
    "L1": ((0, 2), (1, 3), (2, 4)),
    "L2": ((0, 2), (1, 3), (1, 4)),
    "L3": ((0, 2), (0, 3), (1, 4)),
    "L4": ((0, 3), (1, 4), (2, 5)),
    "L5": ((0, 2), (1, 4), (3, 5)),
    "L6": ((0, 3), (1, 5), (2, 4)),
}

U13 = ((0, 2), (0, 3), (0, 4), (1, 5))
U15 = ((0, 2), (0, 4), (1, 5), (3, 6))


@dataclass
class ShapeClass:
    label: str
    representatives: set = field(default_factory=set)


@dataclass
class Rank3Classification:
    n: int
    classes: list[ShapeClass]       # one per sim_s class
    merged: list[ShapeClass]        # classes of the join with groupoid isomorphism


def _sim_s_key(chords, n):
    return canonical_shape(Shape.make(n, chords), "sim_s")


def classify_shapes_rank3(n: int = 6) -> Rank3Classification:
    """Irreducible three-colour shapes up to ``sim_s``, then merged along ``nabla`` orbits."""
    if n < 5:
        raise DomainError("six-point supports need n >= 5")
    known = {_sim_s_key(ch, n): label for label, ch in RANK3_REPRESENTATIVES.items()}
    found: dict[tuple, Shape] = {}
    for chords in combinations(generators(n), 3):
        u = Shape.make(n, chords)
        if is_reducible_shape(u):
            continue
        key = canonical_shape(u, "sim_s")
        if key not in found:
            found[key] = Shape.make(n, key)
    keys = sorted(found, key=lambda k: (known.get(k, "~"), k))
    label_of = {k: known.get(k, f"X{i}") for i, k in enumerate(keys)}
    classes = [ShapeClass(label_of[k], {k}) for k in keys]

    parent = {k: k for k in keys}

    def root(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for k in keys:
        for v in orbit_closure(found[k]):
            other = canonical_shape(v, "sim_s")
            if other in parent:
                a, b = root(k), root(other)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    groups: dict[tuple, set] = {}
    for k in keys:
        groups.setdefault(root(k), set()).add(k)
    merged = []
    for members in groups.values():
        labels = sorted(label_of[k] for k in members)
        merged.append(ShapeClass("+".join(labels), set(members)))
    merged.sort(key=lambda c: (len(c.representatives), c.label))
    return Rank3Classification(n, classes, merged)


@dataclass
class ProbeEntry:
    shift: int
    shape: Shape
    vertices: int | None
    complete: bool
    isomorphic: bool | None  # None when either build hit the radius cap


def probe_cyclic_conjecture(u: Shape, radius_cap: int = DEFAULT_RADIUS_CAP) -> list[ProbeEntry]:
    """Compare the admissible graph of ``u`` with those of its cyclic permutations."""
    ref = build_gamma(u, radius_cap)
    out = []
    for j in range(len(u.support())):
        v = cyclic_permute(u, j)
        A = build_gamma(v, radius_cap)
        if ref.complete and A.complete:
            iso = isomorphic(ref.graph, A.graph, allow_colour_permutation=True) is not None
        else:
            iso = None
        out.append(ProbeEntry(j, v, A.vertex_count, A.complete, iso))
    return out


def relation_loops_close(A: AdmissibleGraph) -> bool:
    """Every relation word that applies at a vertex walks back to that vertex."""
    Q = build_qn(A.shape.n)
    for x in A.states:
        available = set(x.object.assignment)
        for w in Q.words:
            if w[0] not in available:
                continue
            end = apply_letters(x, w)
            if end is not None and end != x:
                return False
    return True


def admissible_report(A: AdmissibleGraph) -> dict:
    """Verification summary for one admissible graph."""
    report = {
        "shape": str(A.shape),
        "vertices": A.vertex_count,
        "complete": A.complete,
        "spheres": A.spheres,
    }
    if A.complete:
        G = A.graph
        report.update(
            valid=not validate_graph(G),
            realisable=check_realisable_233(G).realisable,
            irreducible=is_irreducible(G),
            m_values=sorted({x for block in A.m for row in block for x in row if x != 1}),
        )
    return report


def rank4_catalog(radius_cap: int = DEFAULT_RADIUS_CAP, with_duals: bool = True) -> dict:
    """Build the two admissible rank-4 graphs and compare them with Coxeter fixtures."""
    from ..fixtures import symmetric_group_graph, type_d_graph
    from ..geometry.arrangement import A413, A415, dual_graph

    fixtures = {"A4": symmetric_group_graph(5), "D4": type_d_graph(4)}
    entries = {}
    for name, chords, forms in (("A(4,13)", U13, A413), ("A(4,15)", U15, A415)):
        u = Shape.make(6, chords)
        A = build_gamma(u, radius_cap)
        rep = admissible_report(A)
        if A.complete:
            for fname, F in fixtures.items():
                rep[f"isomorphic_{fname}"] = isomorphic(A.graph, F, True) is not None
            if with_duals:
                rep["isomorphic_dual"] = isomorphic(A.graph, dual_graph(forms), True) is not None
        entries[name] = rep
    return {
        "fixtures": {k: G.vertex_count for k, G in fixtures.items()},
        "admissible": entries,
    }
