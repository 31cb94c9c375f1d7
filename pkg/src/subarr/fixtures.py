"""Worked examples and random arrangement generators."""

import random
from fractions import Fraction
from importlib import resources
from typing import List, Sequence

from .arrangement import (Arrangement, Subspace, SubspaceFamily, ambient_space, contains,
                          subspace_from_equations)
from .io import loads_arrangement

__all__ = [
    "example_path",
    "example1",
    "example2",
    "coordinate_subspace",
    "boolean_arrangement",
    "random_arrangement",
    "random_hyperplane_arrangement",
    "random_corpus",
    "geometric_separator_corpus",
]


def example_path(name: str):
    return resources.files("subarr") / "data" / f"{name}.json"


def _load(name: str) -> Arrangement:
    return loads_arrangement(example_path(name).read_text())


def example1() -> Arrangement:
    """h0: z1=z5=0, h1: z1=z2=z3=0, h2: z3=z4=z5=0 in C^5."""
    return _load("example1")


def example2() -> Arrangement:
    """The three coordinate axes of C^3."""
    return _load("example2")


def coordinate_subspace(l: int, coords: Sequence[int], name: str = "") -> Subspace:
    """``z_c = 0`` for every (0-based) ``c`` in ``coords``."""
    rows = [[1 if j == c else 0 for j in range(l)] for c in coords]
    return subspace_from_equations(rows, l, name)


def boolean_arrangement(l: int) -> Arrangement:
    return Arrangement(tuple(coordinate_subspace(l, [c], f"z{c + 1}") for c in range(l)),
                       ambient_space(l))


def _fits(s: Subspace, members: List[Subspace]) -> bool:
    if s.codim == 0:
        return False
    return all(s != m and not contains(s, m) and not contains(m, s) for m in members)


_COEFFS = tuple(Fraction(c) for c in (-2, -1, "-1/2", "1/2", 1, 2))


def _random_subspace(rng: random.Random, l: int) -> Subspace:
    # the origin contains nothing else and blocks every later member, keep it rare
    c = l if rng.random() < 0.05 else rng.randint(1, max(1, l - 1))
    if rng.random() < 0.5:
        return coordinate_subspace(l, rng.sample(range(l), c))
    rows = []
    for _ in range(c):
        support = rng.sample(range(l), rng.randint(1, min(l, 3)))
        rows.append([rng.choice(_COEFFS) if j in support else 0 for j in range(l)])
    return subspace_from_equations(rows, l)


def random_arrangement(rng: random.Random, n_max: int = 7, l_max: int = 7,
                       n_min: int = 1, l_min: int = 2) -> Arrangement:
    """Random arrangement mixing coordinate subspaces and sparse small-integer ones.

    Coordinate subspaces make coincident intersections (and so nontrivial
    lattices) common.  Fewer than the drawn number of members may be
    returned if candidates keep colliding.
    """
    l = rng.randint(l_min, l_max)
    n = rng.randint(n_min, n_max)
    members: List[Subspace] = []
    attempts = 0
    while len(members) < n and attempts < 50 * n:
        attempts += 1
        s = _random_subspace(rng, l)
        if _fits(s, members):
            members.append(s)
    named = tuple(m.renamed(f"x{k}") for k, m in enumerate(members))
    return Arrangement(named, ambient_space(l))


def random_hyperplane_arrangement(rng: random.Random, n_max: int = 6, l_max: int = 4,
                                  n_min: int = 1, l_min: int = 2) -> Arrangement:
    l = rng.randint(l_min, l_max)
    n = rng.randint(n_min, n_max)
    members: List[Subspace] = []
    attempts = 0
    while len(members) < n and attempts < 50 * n:
        attempts += 1
        row = [rng.randint(-2, 2) for _ in range(l)]
        if not any(row):
            continue
        s = subspace_from_equations([row], l)
        if s not in members:
            members.append(s)
    named = tuple(m.renamed(f"H{k}") for k, m in enumerate(members))
    return Arrangement(named, ambient_space(l))


def random_corpus(count: int, seed: int = 0, **kw) -> List[Arrangement]:
    """``count`` nonempty random arrangements, reproducible from ``seed``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        arr = random_arrangement(rng, **kw)
        if len(arr):
            out.append(arr)
    return out


def geometric_separator_corpus() -> List[SubspaceFamily]:
    """Hand-built arrangements with geometric lattices and separator pivots."""
    out: List[SubspaceFamily] = [boolean_arrangement(l) for l in (2, 3, 4)]
    # blocks of disjoint coordinates: lattice is Boolean, every pivot separates
    out.append(Arrangement((coordinate_subspace(5, [0, 1], "a"), coordinate_subspace(5, [2], "b"),
                            coordinate_subspace(5, [3, 4], "c")), ambient_space(5)))
    # two lines in C^3 spanning a plane: theta lowers degrees by 2
    out.append(Arrangement((coordinate_subspace(3, [1, 2], "L0"),
                            coordinate_subspace(3, [0, 2], "L1")), ambient_space(3)))
    # two generic planes in C^4
    out.append(Arrangement((coordinate_subspace(4, [0, 1], "P0"),
                            coordinate_subspace(4, [2, 3], "P1")), ambient_space(4)))
    # a hyperplane transverse to a pair of lines in a plane of C^4
    out.append(Arrangement((coordinate_subspace(4, [3], "H"),
                            coordinate_subspace(4, [1, 2], "L0"),
                            coordinate_subspace(4, [0, 2], "L1")), ambient_space(4)))
    return out
