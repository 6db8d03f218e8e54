"""Structure sequences and the local realisability criterion for (2,3,inf)-graphs."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian

from ..errors import DomainError
from .core import INF, FullyColouredGraph, Residue, residue

# N(2)=0, N(3)=1, N(inf)=2
N_VALUE = {2: 0, 3: 1, INF: 2}


def n_value(m) -> int:
    try:
        return N_VALUE[m]
    except KeyError:
        raise DomainError(f"m-value {m!r} is not in {{2, 3, inf}}") from None


def canonical_cyclic(seq) -> tuple:
    """Lexicographic minimum over all rotations of ``seq`` and of its reversal."""
    seq = tuple(seq)
    if not seq:
        return seq
    rev = seq[::-1]
    return min(min(s[i:] + s[:i] for i in range(len(s))) for s in (seq, rev))


@dataclass(frozen=True)
class StructureSequence:
    residue: Residue
    pair: tuple[int, int]
    extra: int
    entries: tuple[int, ...]


@dataclass(frozen=True)
class RealisabilityVerdict:
    realisable: bool
    violations: tuple = ()


def _check_m_range(G: FullyColouredGraph):
    for v in range(G.vertex_count):
        for s in range(G.rank):
            for t in range(G.rank):
                if s != t and G.m[v][s][t] not in N_VALUE:
                    raise DomainError(
                        f"m({v};{G.colours[s]},{G.colours[t]}) = {G.m[v][s][t]} "
                        "is not in {2, 3, inf}")


def structure_sequences(G: FullyColouredGraph) -> list[StructureSequence]:
    """One canonical sequence per finite 2-residue and third colour."""
    _check_m_range(G)
    out = []
    k = G.rank
    for s in range(k):
        for t in range(s + 1, k):
            seen = set()
            for v in range(G.vertex_count):
                if v in seen:
                    continue
                R = residue(G, v, (s, t))
                seen |= R.vertices
                mval = G.m[v][s][t]
                if mval == INF:
                    continue
                walk = [v]
                for i in range(2 * mval - 1):
                    walk.append(G.action[walk[-1]][s if i % 2 == 0 else t])
                for r in range(k):
                    if r in (s, t):
                        continue
                    entries = [
                        n_value(G.m[x][r][s if i % 2 == 0 else t])
                        for i, x in enumerate(walk)
                    ]
                    out.append(StructureSequence(R, (s, t), r, canonical_cyclic(entries)))
    return out


def hexagon_condition(seq) -> bool:
    """(-1)^i (n_i - n_{i+3}) is independent of i."""
    vals = {(-1) ** i * (seq[i] - seq[(i + 3) % 6]) for i in range(6)}
    return len(vals) == 1


def square_condition(seq) -> bool:
    return seq[0] == seq[2] and seq[1] == seq[3]


def check_realisable_233(G: FullyColouredGraph) -> RealisabilityVerdict:
    violations = []
    for seq in structure_sequences(G):
        e = seq.entries
        if len(e) == 4 and not square_condition(e):
            violations.append((seq, "length-4 sequence is not of the form (a,b,a,b)"))
        elif len(e) == 6 and not hexagon_condition(e):
            violations.append((seq, "length-6 sequence fails the alternating-difference condition"))
    return RealisabilityVerdict(not violations, tuple(violations))


def enumerate_valid_hexagons() -> set[tuple[int, ...]]:
    return {canonical_cyclic(seq) for seq in cartesian(range(3), repeat=6)
            if hexagon_condition(seq)}
