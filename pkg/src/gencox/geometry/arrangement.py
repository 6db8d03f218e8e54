"""Central hyperplane arrangements: chambers, rays, dual graphs, Poincare polynomials."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, product

from ..errors import (
    ColouringConflictError,
    DomainError,
    MalformedInputError,
    ScanBoundError,
    UnsupportedArrangementError,
)
from ..graph.core import FullyColouredGraph
from .fm import fm_feasible
from .linalg import nullspace, primitive, rank, rref

# the arrangements named in the rank-3 and rank-4 classifications
A37 = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1))

A413 = (
    (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
    (1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (0, 1, 0, 1), (0, 1, 1, 1),
    (1, 1, 1, 0), (1, 1, 0, 1), (1, 1, 1, 1), (1, 2, 1, 1),
)

A415 = (
    (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
    (1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (0, 1, 0, 1),
    (1, 1, 1, 0), (1, 1, 0, 1), (0, 1, 1, 1), (1, 2, 1, 0),
    (1, 1, 1, 1), (1, 2, 1, 1), (1, 2, 2, 1),
)


def parse_forms(text: str) -> tuple[tuple[int, ...], ...]:
    """One form per line, integer coefficients separated by spaces; ``#`` starts a comment."""
    forms = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            forms.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            bad = next(t for t in line.split() if not t.lstrip("+-").isdigit())
            raise MalformedInputError(f"line {lineno}: bad coefficient {bad!r}") from None
    _check_forms(forms)
    return tuple(forms)


def format_forms(forms) -> str:
    return "".join(" ".join(str(x) for x in f) + "\n" for f in forms)


def _check_forms(forms):
    if not forms:
        raise MalformedInputError("no forms given")
    d = len(forms[0])
    for f in forms:
        if len(f) != d:
            raise MalformedInputError(f"form {f} has {len(f)} coefficients, expected {d}")
        if not any(f):
            raise DomainError("zero form does not define a hyperplane")
    directions = [primitive(f) for f in forms]
    if len(set(directions)) != len(directions):
        raise DomainError("two forms define the same hyperplane")
    return d


def _sign(x):
    return (x > 0) - (x < 0)


def _evaluate(f, x):
    return sum(a * b for a, b in zip(f, x))


def seed_point(forms, bound: int | None = None):
    """First integer point, by max-norm shell then lexicographically, off every hyperplane.

    The default bound ``ceil(N/2)`` for ``N`` forms always suffices: the
    product of the forms is a nonzero polynomial of degree ``N`` and cannot
    vanish on a grid with more than ``N`` points per side.
    """
    d = _check_forms(forms)
    if bound is None:
        bound = (len(forms) + 1) // 2
    for r in range(1, bound + 1):
        for x in product(range(-r, r + 1), repeat=d):
            if max(abs(c) for c in x) != r:
                continue
            if all(_evaluate(f, x) != 0 for f in forms):
                return x
    raise ScanBoundError(f"no point off all hyperplanes with max-norm <= {bound}")


def _adjacent(forms, sigma, i) -> bool:
    system = [(list(f), "=") if j == i else ([sigma[j] * c for c in f], ">")
              for j, f in enumerate(forms)]
    return fm_feasible(system)


def arrangement_chambers(forms, bound: int | None = None) -> list[tuple[int, ...]]:
    """Sign vectors of all chambers, in breadth-first order from the seed chamber."""
    forms = [tuple(f) for f in forms]
    x = seed_point(forms, bound)
    start = tuple(_sign(_evaluate(f, x)) for f in forms)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        sigma = queue.popleft()
        for i in range(len(forms)):
            tau = sigma[:i] + (-sigma[i],) + sigma[i + 1:]
            if tau in seen:
                continue
            if _adjacent(forms, sigma, i):
                seen.add(tau)
                order.append(tau)
                queue.append(tau)
    return order


def arrangement_rays(forms) -> list[tuple[int, ...]]:
    """Primitive directions of all one-dimensional cells, both orientations."""
    d = _check_forms(forms)
    if rank(forms) != d:
        raise UnsupportedArrangementError("arrangement is not essential")
    rays = set()
    for sub in combinations(forms, d - 1):
        if rank(sub) != d - 1:
            continue
        (v,) = nullspace([list(f) for f in sub], d)
        r = primitive(v)
        rays.add(r)
        rays.add(tuple(-c for c in r))
    return sorted(rays)


def _ray_in_chamber(forms, r, sigma) -> bool:
    for f, s in zip(forms, sigma):
        v = _sign(_evaluate(f, r))
        if v and v != s:
            return False
    return True


@dataclass(frozen=True)
class DualGraph:
    graph: FullyColouredGraph
    chambers: tuple
    rays: tuple
    chamber_rays: tuple  # per chamber: tuple of ray indices ordered by colour


def dual_graph_data(forms) -> DualGraph:
    forms = [tuple(f) for f in forms]
    d = _check_forms(forms)
    chambers = arrangement_chambers(forms)
    rays = arrangement_rays(forms)
    incid = []
    for sigma in chambers:
        rs = frozenset(i for i, r in enumerate(rays) if _ray_in_chamber(forms, r, sigma))
        if len(rs) != d or rank([rays[i] for i in rs]) != d:
            raise UnsupportedArrangementError(f"chamber {sigma} is not simplicial")
        incid.append(rs)
    facets: dict[frozenset, list[int]] = {}
    for c, rs in enumerate(incid):
        for sub in combinations(sorted(rs), d - 1):
            facets.setdefault(frozenset(sub), []).append(c)
    for key, cs in facets.items():
        if len(cs) != 2:
            raise UnsupportedArrangementError(f"a facet lies in {len(cs)} chambers")

    colour: dict[int, int] = {}
    for i, r in enumerate(sorted(incid[0])):
        colour[r] = i
    queue = deque([0])
    visited = {0}
    while queue:
        c = queue.popleft()
        for r in incid[c]:
            facet = incid[c] - {r}
            (other,) = [x for x in facets[facet] if x != c]
            (r2,) = incid[other] - facet
            if colour.setdefault(r2, colour[r]) != colour[r]:
                raise ColouringConflictError(
                    f"ray {rays[r2]} would receive colours {colour[r2]} and {colour[r]}")
            if other not in visited:
                visited.add(other)
                queue.append(other)
    by_colour = []
    for c, rs in enumerate(incid):
        cols = sorted(rs, key=lambda r: colour[r])
        if [colour[r] for r in cols] != list(range(d)):
            raise ColouringConflictError(f"chamber {chambers[c]} does not see every colour once")
        by_colour.append(tuple(cols))

    ray_chambers = [set() for _ in rays]
    for c, rs in enumerate(incid):
        for r in rs:
            ray_chambers[r].add(c)
    all_chambers = set(range(len(chambers)))
    action, m = [], []
    for c, cols in enumerate(by_colour):
        row = []
        for s in range(d):
            facet = frozenset(cols[:s] + cols[s + 1:])
            (other,) = [x for x in facets[facet] if x != c]
            row.append(other)
        action.append(row)
        block = [[1] * d for _ in range(d)]
        for s, t in combinations(range(d), 2):
            face = [cols[i] for i in range(d) if i not in (s, t)]
            containing = set(all_chambers)
            for r in face:
                containing &= ray_chambers[r]
            block[s][t] = block[t][s] = len(containing) // 2
        m.append(block)
    G = FullyColouredGraph.from_tables([f"c{i}" for i in range(d)], action, m, 0)
    return DualGraph(G, tuple(chambers), tuple(rays), tuple(by_colour))


def dual_graph(forms) -> FullyColouredGraph:
    return dual_graph_data(forms).graph


@dataclass(frozen=True)
class IntersectionLattice:
    flats: tuple  # frozensets of indices of forms vanishing on the flat
    ranks: tuple
    moebius: tuple


def _in_span(R, pivots, vec):
    v = list(vec)
    for row, p in zip(R, pivots):
        if v[p]:
            f = v[p]
            v = [a - f * b for a, b in zip(v, row)]
    return not any(v)


def intersection_lattice(forms) -> IntersectionLattice:
    _check_forms(forms)
    forms = [tuple(f) for f in forms]
    flats = {frozenset(): 0}
    level = [frozenset()]
    while level:
        nxt = set()
        for F in level:
            for i in range(len(forms)):
                if i in F:
                    continue
                rows = [forms[j] for j in sorted(F)] + [forms[i]]
                R, pivots = rref(rows)
                closed = frozenset(j for j, f in enumerate(forms) if _in_span(R, pivots, f))
                if closed not in flats:
                    flats[closed] = len(pivots)
                    nxt.add(closed)
        level = sorted(nxt, key=sorted)
    ordered = sorted(flats, key=lambda F: (flats[F], sorted(F)))
    mu = {}
    for F in ordered:
        if not F:
            mu[F] = 1
        else:
            mu[F] = -sum(mu[G] for G in ordered if flats[G] < flats[F] and G < F)
    return IntersectionLattice(tuple(ordered), tuple(flats[F] for F in ordered),
                               tuple(mu[F] for F in ordered))


def intersection_poincare(forms) -> list[int]:
    """Ascending coefficients of ``sum_X mu(X) (-t)^codim X``."""
    L = intersection_lattice(forms)
    coeffs = [0] * (max(L.ranks) + 1)
    for r, mu in zip(L.ranks, L.moebius):
        coeffs[r] += mu * (-1) ** r
    return coeffs


def expand_factors(factors) -> list[int]:
    """Coefficients of ``prod (1 + n t)`` for ``n`` in ``factors``."""
    coeffs = [1]
    for n in factors:
        coeffs = [a + n * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return coeffs


def poincare_matches(forms, factors) -> bool:
    return intersection_poincare(forms) == expand_factors(factors)
