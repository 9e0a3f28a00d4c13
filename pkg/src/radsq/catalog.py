"""The small algebras used throughout the tests and scripts."""

from __future__ import annotations

from .quivalg import Algebra, parse_quiver, random_algebra

# k[x,y]/(x,y)^2: one vertex, two loops
EXAMPLE1 = """\
field 2
vertices 1
arrow x 1 1
arrow y 1 1
"""

# two arrows 1 -> 2 and one arrow 2 -> 1
EXAMPLE2 = """\
field 2
vertices 2
arrow a1 1 2
arrow a2 1 2
arrow b 2 1
"""

KRONECKER = """\
field 2
vertices 2
arrow a1 2 1
arrow a2 2 1
"""

# seeds of random_algebra(3, 4, 2, seed, 3) that give connected quivers
# with small universes at bound 4
RANDOM_SEEDS = (0, 20)


def example1(p: int = 2) -> Algebra:
    return Algebra(parse_quiver(EXAMPLE1).quiver, p)


def example2(p: int = 2) -> Algebra:
    return Algebra(parse_quiver(EXAMPLE2).quiver, p)


def kronecker(p: int = 2) -> Algebra:
    return Algebra(parse_quiver(KRONECKER).quiver, p)


def random3(seed: int) -> Algebra:
    return random_algebra(3, 4, 2, seed, 3)
