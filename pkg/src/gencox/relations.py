"""The interval-reversal alphabet T_n, its relation words Q_n and the star operation.

A generator ``t(a, b)`` with ``0 <= a < b <= n`` is a plain ``(a, b)`` tuple.
Words are tuples of generators.  ``Q_n`` is materialised with every cyclic
shift stored, and indexed by its first two letters.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple

from .errors import DomainError, IntegrityError, MalformedInputError


class Generator(NamedTuple):
    a: int
    b: int

    def __str__(self):
        return f"{self.a},{self.b}"


def gen(a: int, b: int) -> Generator:
    if not 0 <= a < b:
        raise DomainError(f"t({a},{b}) needs 0 <= a < b")
    return Generator(a, b)


def generators(n: int) -> list[Generator]:
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    return [Generator(a, b) for a in range(n + 1) for b in range(a + 1, n + 1)]


def _family_words(n: int):
    T = Generator
    # disjoint or abutting intervals commute
    for a in range(n + 1):
        for b in range(a + 1, n + 1):
            for c in range(b, n + 1):
                for d in range(c + 1, n + 1):
                    yield (T(a, b), T(c, d), T(a, b), T(c, d))
    # nested intervals
    for a in range(n + 1):
        for b in range(a + 2, n + 1):
            for x in range(b - a):
                for y in range(b - a - x):
                    if a < a + x + y < b:
                        yield (T(a, b), T(a + x, b - y), T(a, b), T(a + y, b - x))
    # crossing intervals
    for a in range(n + 1):
        for b in range(a + 3, n + 1):
            for x in range(1, b - a):
                for y in range(1, b - a - x):
                    z = b - a - x - y
                    if z > 0:
                        yield (T(a, b - z), T(a + y, b), T(a, b - x),
                               T(a + z, b), T(a, b - y), T(a + x, b))


class RelationSet:
    """All words of Q_n, closed under cyclic shifts, with a prefix index."""

    def __init__(self, n: int):
        if n < 0:
            raise DomainError(f"n must be non-negative, got {n}")
        self.n = n
        words = set()
        for w in _family_words(n):
            for i in range(len(w)):
                words.add(w[i:] + w[:i])
        self.words = frozenset(words)
        index: dict[tuple, list] = {}
        for w in words:
            index.setdefault(w[:2], []).append(w)
        self._index = {k: tuple(sorted(v)) for k, v in index.items()}

    def __len__(self):
        return len(self.words)

    def __contains__(self, word):
        return tuple(word) in self.words

    def __iter__(self):
        return iter(sorted(self.words))

    def with_prefix(self, a, b) -> tuple:
        return self._index.get((a, b), ())

    def check_generator(self, g) -> Generator:
        g = Generator(*g)
        if not 0 <= g.a < g.b <= self.n:
            raise DomainError(f"t({g.a},{g.b}) is not in T_{self.n}")
        return g

    def relation_through(self, a, b) -> tuple[int, tuple]:
        """The unique relation word starting ``a b`` and half its length."""
        a, b = self.check_generator(a), self.check_generator(b)
        if a == b:
            raise DomainError("relation_through needs distinct generators")
        found = self.with_prefix(a, b)
        if len(found) != 1:
            raise IntegrityError(f"{len(found)} relation words start with {a} {b}")
        word = found[0]
        return len(word) // 2, word

    def star(self, a, w: Iterable = ()) -> Generator:
        """``a * w``, folding the letters of ``w`` from left to right."""
        a = self.check_generator(a)
        for b in w:
            a = self._star1(a, self.check_generator(b))
        return a

    def _star1(self, a, b):
        if a == b:
            return a
        return self.relation_through(a, b)[1][2]


@lru_cache(maxsize=None)
def build_qn(n: int) -> RelationSet:
    return RelationSet(n)


def relation_through(a, b, n: int | None = None):
    """Module-level convenience; ``n`` defaults to the larger right endpoint."""
    if n is None:
        n = max(Generator(*a).b, Generator(*b).b)
    return build_qn(n).relation_through(a, b)


def star(a, w, n: int | None = None) -> Generator:
    w = [Generator(*x) for x in w]
    if n is None:
        n = max([Generator(*a).b] + [x.b for x in w])
    return build_qn(n).star(a, w)


def perm_action(n: int, g, x: int) -> int:
    """Image of ``x`` in ``1..n`` under the reversal of positions ``a+1..b``."""
    a, b = g
    if not 1 <= x <= n:
        raise DomainError(f"x = {x} is outside 1..{n}")
    if not 0 <= a < b <= n:
        raise DomainError(f"t({a},{b}) is not in T_{n}")
    return a + b + 1 - x if a + 1 <= x <= b else x


def apply_word_perm(n: int, word, x: int) -> int:
    for g in word:
        x = perm_action(n, g, x)
    return x


def parse_generator(token: str) -> Generator:
    parts = token.strip().split(",")
    if len(parts) != 2:
        raise MalformedInputError(f"bad generator token {token!r}; expected \"a,b\"")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise MalformedInputError(f"bad generator token {token!r}; expected \"a,b\"") from None
    if not 0 <= a < b:
        raise MalformedInputError(f"bad generator token {token!r}; need 0 <= a < b")
    return Generator(a, b)


def parse_word(text: str) -> tuple[Generator, ...]:
    return tuple(parse_generator(tok) for tok in text.split())


def format_word(word) -> str:
    return " ".join(f"{a},{b}" for a, b in word)
