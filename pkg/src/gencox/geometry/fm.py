"""Exact Fourier-Motzkin feasibility for mixed strict/non-strict linear systems."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from ..errors import MalformedInputError

_RELATIONS = {">": ">", ">=": ">=", "≥": ">=", "=": "=", "==": "="}


def _normalise(coeffs, const):
    """Scale by a positive rational so the coefficients are coprime integers."""
    den = 1
    for x in coeffs:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in coeffs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return None, const
    return tuple(x // g for x in ints), Fraction(const) * den / g


def fm_feasible(system, dimension: int | None = None) -> bool:
    """Whether ``coeffs . x + const  REL  0`` holds simultaneously for some rational x.

    Each entry is ``(coeffs, rel)`` or ``(coeffs, rel, const)`` with ``rel`` one
    of ``">"``, ``">="``, ``"="``.
    """
    rows = []
    for entry in system:
        if len(entry) == 2:
            coeffs, rel = entry
            const = 0
        elif len(entry) == 3:
            coeffs, rel, const = entry
        else:
            raise MalformedInputError(f"bad constraint {entry!r}")
        if rel not in _RELATIONS:
            raise MalformedInputError(f"unknown relation {rel!r}")
        coeffs = [Fraction(x) for x in coeffs]
        if dimension is None:
            dimension = len(coeffs)
        elif len(coeffs) != dimension:
            raise MalformedInputError(
                f"constraint has {len(coeffs)} coefficients, expected {dimension}")
        rows.append((coeffs, _RELATIONS[rel], Fraction(const)))
    if dimension is None:
        return True

    eqs = [(c, k) for c, r, k in rows if r == "="]
    ineqs = [(c, k, r == ">") for c, r, k in rows if r != "="]

    # substitute equalities away
    while eqs:
        c, k = eqs.pop()
        j = next((i for i, x in enumerate(c) if x != 0), None)
        if j is None:
            if k != 0:
                return False
            continue
        piv = c[j]
        # x_j = -(k + sum_{i != j} c_i x_i) / piv

        def sub(c2, k2):
            f = c2[j] / piv
            if f == 0:
                return c2, k2
            return [a - f * b for a, b in zip(c2, c)], k2 - f * k

        eqs = [sub(c2, k2) for c2, k2 in eqs]
        ineqs = [sub(c2, k2) + (s,) for c2, k2, s in ineqs]

    return _eliminate(ineqs, dimension)


def _reduce(ineqs):
    """Drop constant constraints (or report infeasibility) and merge parallel ones."""
    best = {}
    for c, k, strict in ineqs:
        key, k = _normalise(c, k)
        if key is None:
            if k < 0 or (strict and k == 0):
                return None
            continue
        old = best.get(key)
        if old is None or k < old[0] or (k == old[0] and strict and not old[1]):
            best[key] = (k, strict)
    return [(list(key), k, s) for key, (k, s) in best.items()]


def _eliminate(ineqs, dimension):
    ineqs = _reduce(ineqs)
    if ineqs is None:
        return False
    remaining = set(range(dimension))
    while ineqs and remaining:
        # eliminate the variable that creates the fewest new constraints
        def cost(j):
            p = sum(1 for c, _, _ in ineqs if c[j] > 0)
            n = sum(1 for c, _, _ in ineqs if c[j] < 0)
            return p * n - p - n
        j = min(sorted(remaining), key=cost)
        remaining.discard(j)
        pos = [r for r in ineqs if r[0][j] > 0]
        neg = [r for r in ineqs if r[0][j] < 0]
        new = [r for r in ineqs if r[0][j] == 0]
        for cp, kp, sp in pos:
            for cn, kn, sn in neg:
                a, b = -cn[j], cp[j]
                new.append(([a * x + b * y for x, y in zip(cp, cn)], a * kp + b * kn, sp or sn))
        ineqs = _reduce(new)
        if ineqs is None:
            return False
    return True
