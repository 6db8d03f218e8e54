"""Independent reference computations used by the tests.

Nothing here imports the package; each oracle recomputes its answer from
elementary group or geometry facts.
"""
from __future__ import annotations

import json
from fractions import Fraction
from itertools import permutations
from pathlib import Path

DATA = Path(__file__).parent / "data"


def _affine_a2_reflections():
    # plane x + y + z = 0; walls of the fundamental alcove x > y > z, x - z < 1
    def s1(p):
        return (p[1], p[0], p[2])

    def s2(p):
        return (p[0], p[2], p[1])

    def s0(p):
        return (p[2] + 1, p[1], p[0] - 1)

    return s0, s1, s2


def affine_a2_spheres(radius: int) -> list[int]:
    """Sphere sizes of the affine A_2 Coxeter group, by walking alcoves in the plane.

    A generic interior point has trivial stabiliser, so group elements are
    identified with its images; left multiplication keeps every step a plain
    reflection of the current image.
    """
    p = (Fraction(2, 5), Fraction(1, 10), Fraction(-1, 2))
    reflections = _affine_a2_reflections()
    seen = {p}
    frontier = [p]
    sizes = [1]
    for _ in range(radius):
        nxt = []
        for q in frontier:
            for r in reflections:
                x = r(q)
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        sizes.append(len(nxt))
        frontier = nxt
    return sizes


def symmetric_group_order(letters: int) -> int:
    return sum(1 for _ in permutations(range(letters)))


def write_golden(radius: int = 10) -> Path:
    path = DATA / "affine_a2_spheres.json"
    path.write_text(json.dumps({"radius": radius, "spheres": affine_a2_spheres(radius)}) + "\n")
    return path


if __name__ == "__main__":
    print(write_golden())
