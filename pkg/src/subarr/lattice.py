"""Intersection lattices ordered by reverse inclusion."""

from dataclasses import dataclass
from typing import Dict, List

from .arrangement import Subspace, SubspaceFamily, contains, intersect

__all__ = ["IntersectionLattice", "build_lattice", "is_geometric"]


@dataclass
class IntersectionLattice:
    """All intersections of a family's members, bottom (the ambient) first.

    ``x <= y`` in the lattice means ``y`` is contained in ``x``.  ``join`` is
    intersection of subspaces and ``meet`` the smallest element containing
    both arguments.
    """

    family: SubspaceFamily
    elements: List[Subspace]
    leq: List[List[bool]]
    join_table: List[List[int]]
    meet_table: List[List[int]]
    member_index: List[int]
    atoms: List[int]
    covers: List[List[int]]
    rank: List[int]
    graded: bool

    def __len__(self):
        return len(self.elements)

    @property
    def bottom(self) -> int:
        return 0

    def index(self, s: Subspace) -> int:
        return self.elements.index(s)

    def codim(self, k: int) -> int:
        return self.family.relative_codim(self.elements[k])

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq[x][y]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def open_interval(self, x: int, y: int) -> List[int]:
        return [z for z in range(len(self)) if self.lt(x, z) and self.lt(z, y)]


def build_lattice(fam: SubspaceFamily) -> IntersectionLattice:
    found = [fam.ambient]
    frontier = [fam.ambient]
    while frontier:
        nxt = []
        for s in frontier:
            for m in fam.members:
                t = intersect(s, m)
                if t not in found:
                    found.append(t)
                    nxt.append(t)
        frontier = nxt
    # deterministic order: bottom, then by codimension, then by equations
    rest = sorted(found[1:], key=lambda s: (s.codim, s.equations))
    elements = [fam.ambient] + rest
    lookup: Dict[Subspace, int] = {s: k for k, s in enumerate(elements)}
    n = len(elements)
    leq = [[contains(elements[x], elements[y]) for y in range(n)] for x in range(n)]
    join_table = [[lookup[intersect(elements[x], elements[y])] for y in range(n)]
                  for x in range(n)]
    meet_table = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            uppers = [z for z in range(n) if leq[z][x] and leq[z][y]]
            # the meet is the upper bound lying above every other one
            best = next(z for z in uppers if all(leq[w][z] for w in uppers))
            meet_table[x][y] = meet_table[y][x] = best
    member_index = [lookup[m] for m in fam.members]
    covers: List[List[int]] = [[] for _ in range(n)]
    for y in range(n):
        below = [x for x in range(n) if x != y and leq[x][y]]
        for x in below:
            if not any(z != x and leq[x][z] for z in below):
                covers[y].append(x)
    atoms = [y for y in range(1, n) if covers[y] == [0]]
    # rank = length of the longest chain from the bottom; elements are sorted
    # by codimension so every cover comes earlier in the list
    rank = [0] * n
    graded = True
    for y in range(1, n):
        lengths = {rank[x] + 1 for x in covers[y]}
        rank[y] = max(lengths)
        if len(lengths) > 1:
            graded = False
    return IntersectionLattice(fam, elements, leq, join_table, meet_table,
                               member_index, atoms, covers, rank, graded)


def _is_atomic(lat: IntersectionLattice) -> bool:
    for y in range(1, len(lat)):
        acc = lat.bottom
        for a in lat.atoms:
            if lat.leq[a][y]:
                acc = lat.join(acc, a)
        if acc != y:
            return False
    return True


def _is_semimodular(lat: IntersectionLattice) -> bool:
    r = lat.rank
    n = len(lat)
    for x in range(n):
        for y in range(x + 1, n):
            if r[x] + r[y] < r[lat.join(x, y)] + r[lat.meet(x, y)]:
                return False
    return True


def is_geometric(lat: IntersectionLattice) -> bool:
    """Graded, atomic and semimodular, with rank the chain length from the bottom."""
    return lat.graded and _is_atomic(lat) and _is_semimodular(lat)
