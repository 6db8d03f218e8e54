"""Shapes (injective colour -> generator maps) and the wall-crossing move on them.

The move across colour ``s`` uses the closed form

    [u nabla s](s) = u(s),    [u nabla s](t) = u(t) * u(s)  for t != s,

which is the recursive definition specialised to ``v = u nabla t``; the
test suite checks the recursive clause against it.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from ..errors import DomainError, MalformedInputError
from ..relations import Generator, build_qn, parse_generator


@dataclass(frozen=True, order=True)
class Shape:
    n: int
    colours: tuple[str, ...]
    assignment: tuple[Generator, ...]

    def __post_init__(self):
        if len(self.colours) != len(self.assignment):
            raise MalformedInputError("colours and assignment differ in length")
        if len(set(self.colours)) != len(self.colours):
            raise MalformedInputError(f"duplicate colours in {self.colours}")
        if len(set(self.assignment)) != len(self.assignment):
            raise DomainError(f"shape is not injective: {self.assignment}")
        for g in self.assignment:
            if not 0 <= g.a < g.b <= self.n:
                raise DomainError(f"t({g.a},{g.b}) is not in T_{self.n}")

    @classmethod
    def make(cls, n: int, mapping) -> "Shape":
        """From ``{colour: (a, b)}`` or a list of ``(a, b)`` (colours r, s, t, ...)."""
        if isinstance(mapping, dict):
            items = list(mapping.items())
        else:
            items = list(zip(default_colours(len(mapping)), mapping))
        return cls(n, tuple(str(c) for c, _ in items),
                   tuple(Generator(*g) for _, g in items))

    def __getitem__(self, colour) -> Generator:
        return self.assignment[self.index(colour)]

    def index(self, colour) -> int:
        if isinstance(colour, int):
            return colour
        try:
            return self.colours.index(colour)
        except ValueError:
            raise DomainError(f"unknown colour {colour!r}") from None

    @property
    def rank(self) -> int:
        return len(self.colours)

    def with_assignment(self, assignment) -> "Shape":
        return Shape(self.n, self.colours, tuple(assignment))

    def support(self) -> tuple[int, ...]:
        return tuple(sorted({x for g in self.assignment for x in g}))

    def __str__(self):
        return format_shape(self)


def default_colours(k: int) -> list[str]:
    base = "rstuvwxyz"
    if k <= len(base):
        return list(base[:k])
    return [f"c{i}" for i in range(k)]


def parse_shape(text: str, n: int) -> Shape:
    """Parse ``"r=0,2;s=1,3;t=2,4"``."""
    mapping = {}
    for entry in text.split(";"):
        entry = entry.strip()
        if not entry:
            continue
        if "=" not in entry:
            raise MalformedInputError(f"bad shape entry {entry!r}; expected colour=a,b")
        colour, token = entry.split("=", 1)
        colour = colour.strip()
        if not colour or colour in mapping:
            raise MalformedInputError(f"bad or repeated colour in shape entry {entry!r}")
        mapping[colour] = parse_generator(token)
    if not mapping:
        raise MalformedInputError(f"empty shape {text!r}")
    return Shape.make(n, mapping)


def format_shape(u: Shape) -> str:
    return ";".join(f"{c}={g.a},{g.b}" for c, g in zip(u.colours, u.assignment))


def nabla(u: Shape, s) -> Shape:
    i = u.index(s)
    Q = build_qn(u.n)
    b = u.assignment[i]
    return u.with_assignment(g if j == i else Q._star1(g, b)
                             for j, g in enumerate(u.assignment))


def nabla_word(u: Shape, colours) -> Shape:
    for s in colours:
        u = nabla(u, s)
    return u


def orbit_closure(u: Shape) -> set[Shape]:
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for s in range(x.rank):
            y = nabla(x, s)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _relabel(u: Shape, decreasing: bool):
    supp = u.support()
    k = len(supp)
    pos = {x: (k - 1 - i if decreasing else i) for i, x in enumerate(supp)}
    return tuple(Generator(*sorted((pos[g.a], pos[g.b]))) for g in u.assignment)


def canonical_shape(u: Shape, quotient: str = "sim") -> tuple:
    """Canonical encoding of the class of ``u`` under ``sim`` or ``sim_s``.

    ``sim``: the assignment (in colour order) after relabelling the support
    to ``0..k-1`` increasingly or decreasingly, whichever is smaller.
    ``sim_s``: the same with colours forgotten (sorted chord tuple).
    """
    if quotient not in ("sim", "sim_s"):
        raise DomainError(f"unknown quotient {quotient!r}")
    options = [_relabel(u, dec) for dec in (False, True)]
    if quotient == "sim_s":
        options = [tuple(sorted(o)) for o in options]
    return min(options)


def canonical_shape_object(u: Shape) -> Shape:
    """The ``sim`` representative of ``u`` as a shape on the same ``n``."""
    return u.with_assignment(canonical_shape(u, "sim"))


def cyclic_permute(u: Shape, j: int) -> Shape:
    supp = u.support()
    k = len(supp)
    f = {x: supp[(i + j) % k] for i, x in enumerate(supp)}
    return u.with_assignment(Generator(*sorted((f[g.a], f[g.b]))) for g in u.assignment)


def is_reducible_shape(u: Shape) -> bool:
    """Some bipartition of the colours has only length-4 relations across it."""
    Q = build_qn(u.n)
    k = u.rank
    commuting = [[i == j or Q.relation_through(u.assignment[i], u.assignment[j])[0] == 2
                  for j in range(k)] for i in range(k)]
    for size in range(1, k // 2 + 1):
        for A in combinations(range(k), size):
            if 2 * size == k and 0 not in A:
                continue
            B = [j for j in range(k) if j not in A]
            if all(commuting[a][b] for a in A for b in B):
                return True
    return False
