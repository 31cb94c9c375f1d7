"""Subspaces of C^l given by rational equations, and arrangements of them."""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .linalg import QMatrix, nullspace, rank, rref, to_rational

__all__ = [
    "ArrangementError",
    "Subspace",
    "SubspaceFamily",
    "Arrangement",
    "PivotOrder",
    "subspace_from_equations",
    "subspace_from_span",
    "ambient_space",
    "family",
    "arrangement",
    "intersect",
    "contains",
    "join_of",
    "delete",
    "restrict_tilde",
    "restrict",
    "equivalence_classes",
    "is_separator",
    "pivot_separates_joins",
]


class ArrangementError(ValueError):
    """Invalid subspace, family or arrangement data."""


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of C^l cut out by rational linear equations.

    ``equations`` is kept in reduced row echelon form, so two subspaces are
    equal exactly when their equation tuples agree.  The name is a label
    only and takes no part in comparisons.
    """

    ambient_dim: int
    equations: Tuple[Tuple, ...]
    name: str = field(default="", compare=False)

    @property
    def codim(self) -> int:
        return len(self.equations)

    @property
    def dim(self) -> int:
        return self.ambient_dim - self.codim

    def renamed(self, name: str) -> "Subspace":
        return Subspace(self.ambient_dim, self.equations, name)

    def equation_matrix(self) -> QMatrix:
        return QMatrix._wrap([list(r) for r in self.equations], self.ambient_dim)

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"<Subspace {label}codim {self.codim} in C^{self.ambient_dim}>"


def subspace_from_equations(rows: Sequence[Sequence], l: int, name: str = "") -> Subspace:
    """Canonicalize equation rows to RREF and drop dependent ones."""
    data = []
    for k, row in enumerate(rows):
        row = list(row)
        if len(row) != l:
            raise ArrangementError(
                f"equation {k} of {name or 'subspace'} has length {len(row)}, expected {l}")
        data.append([to_rational(x) for x in row])
    if not data:
        return Subspace(l, (), name)
    r, k, _ = rref(QMatrix._wrap(data, l))
    return Subspace(l, tuple(tuple(row) for row in r.rows[:k]), name)


def subspace_from_span(vectors: Sequence[Sequence], l: int, name: str = "") -> Subspace:
    """The subspace spanned by ``vectors``, converted to equation form."""
    data = []
    for k, v in enumerate(vectors):
        v = list(v)
        if len(v) != l:
            raise ArrangementError(
                f"span vector {k} of {name or 'subspace'} has length {len(v)}, expected {l}")
        data.append([to_rational(x) for x in v])
    if not data:
        return subspace_from_equations(QMatrix.identity(l).rows, l, name)
    eqs = nullspace(QMatrix._wrap(data, l))
    return subspace_from_equations(eqs.rows, l, name)


def ambient_space(l: int, name: str = "C^l") -> Subspace:
    return Subspace(l, (), name)


def _check_ambient(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise ArrangementError(
            f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")


def intersect(a: Subspace, b: Subspace, name: str = "") -> Subspace:
    _check_ambient(a, b)
    if not b.equations:
        return a.renamed(name) if name else a
    if not a.equations:
        return b.renamed(name) if name else b
    return subspace_from_equations(a.equations + b.equations, a.ambient_dim, name)


def contains(a: Subspace, b: Subspace) -> bool:
    """True iff ``b`` is a subset of ``a``."""
    _check_ambient(a, b)
    if not a.equations:
        return True
    if a.codim > b.codim:
        return False
    stacked = QMatrix._wrap([list(r) for r in b.equations + a.equations], a.ambient_dim)
    return rank(stacked) == b.codim


@dataclass(frozen=True)
class SubspaceFamily:
    """An ordered set of distinct subspaces lying in a common ambient subspace.

    For an arrangement in C^l the ambient is C^l itself.  Restricted families
    keep C^l coordinates and take the pivot subspace as ambient; codimensions
    inside it are ``codim - ambient_codim_offset``.
    """

    members: Tuple[Subspace, ...]
    ambient: Subspace

    def __post_init__(self):
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        seen = set()
        for k, m in enumerate(members):
            if m.ambient_dim != self.ambient.ambient_dim:
                raise ArrangementError(
                    f"member {m.name or k} lives in C^{m.ambient_dim}, "
                    f"family is in C^{self.ambient.ambient_dim}")
            if m in seen:
                raise ArrangementError(f"member {m.name or k} is repeated")
            seen.add(m)
            if m == self.ambient:
                raise ArrangementError(f"member {m.name or k} equals the ambient space")
            if not contains(self.ambient, m):
                raise ArrangementError(f"member {m.name or k} is not inside the ambient space")

    @property
    def ambient_dim(self) -> int:
        return self.ambient.ambient_dim

    @property
    def ambient_codim_offset(self) -> int:
        return self.ambient.codim

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i) -> Subspace:
        return self.members[i]

    @property
    def names(self) -> List[str]:
        return [m.name for m in self.members]

    def index(self, name: str) -> int:
        for k, m in enumerate(self.members):
            if m.name == name:
                return k
        raise KeyError(name)

    def relative_codim(self, s: Subspace) -> int:
        return s.codim - self.ambient_codim_offset

    @cached_property
    def joins(self) -> List[Subspace]:
        """``joins[mask]`` is the intersection of the members in bitmask ``mask``."""
        out = [self.ambient]
        for i, m in enumerate(self.members):
            out.extend(intersect(s, m) for s in out[: 1 << i])
        return out

    @cached_property
    def join_codims(self) -> List[int]:
        return [s.codim for s in self.joins]

    def _with_members(self, members) -> "SubspaceFamily":
        return SubspaceFamily(tuple(members), self.ambient)


class Arrangement(SubspaceFamily):
    """A family in which no member contains another."""

    def __post_init__(self):
        super().__post_init__()
        for a, b in combinations(self.members, 2):
            if contains(a, b) or contains(b, a):
                inner, outer = (b, a) if contains(a, b) else (a, b)
                raise ArrangementError(
                    f"{inner.name or 'a member'} is contained in {outer.name or 'another member'}")

    def _with_members(self, members) -> "Arrangement":
        return Arrangement(tuple(members), self.ambient)


def family(members: Sequence[Subspace], ambient: Optional[Subspace] = None) -> SubspaceFamily:
    members = tuple(members)
    if ambient is None:
        if not members:
            raise ArrangementError("an empty family needs an explicit ambient space")
        ambient = ambient_space(members[0].ambient_dim)
    return SubspaceFamily(members, ambient)


def arrangement(members: Sequence[Subspace], ambient: Optional[Subspace] = None) -> Arrangement:
    members = tuple(members)
    if ambient is None:
        if not members:
            raise ArrangementError("an empty arrangement needs an explicit ambient space")
        ambient = ambient_space(members[0].ambient_dim)
    return Arrangement(members, ambient)


def _mask(fam: SubspaceFamily, sigma) -> int:
    if isinstance(sigma, int):
        return sigma
    m = 0
    for i in sigma:
        if not 0 <= i < len(fam):
            raise IndexError(f"member index {i} out of range")
        m |= 1 << i
    return m


def join_of(fam: SubspaceFamily, sigma) -> Subspace:
    """Intersection of the members indexed by ``sigma`` (ambient for the empty set)."""
    return fam.joins[_mask(fam, sigma)]


def _check_index(fam: SubspaceFamily, i: int):
    if not 0 <= i < len(fam):
        raise IndexError(f"pivot index {i} out of range for {len(fam)} members")


def delete(arr: SubspaceFamily, i: int) -> SubspaceFamily:
    _check_index(arr, i)
    return arr._with_members(m for k, m in enumerate(arr.members) if k != i)


def _restriction_members(arr: SubspaceFamily, i: int) -> List[Subspace]:
    _check_index(arr, i)
    if len(arr) < 2:
        raise ArrangementError("restriction needs at least two members")
    x0 = arr.members[i]
    out, seen = [], set()
    for k, y in enumerate(arr.members):
        if k == i:
            continue
        s = intersect(x0, y, name=f"{x0.name}&{y.name}")
        if s not in seen:
            seen.add(s)
            out.append(s)
    return out


def restrict_tilde(arr: SubspaceFamily, i: int) -> SubspaceFamily:
    """The family of distinct intersections ``x0 & y`` for ``y`` in the deletion.

    It lives inside ``x0``; equal intersections are identified, keeping the
    name and position of the first one.
    """
    return SubspaceFamily(tuple(_restriction_members(arr, i)), arr.members[i])


def restrict(arr: SubspaceFamily, i: int) -> Arrangement:
    """The restriction at member ``i``: maximal members of :func:`restrict_tilde`."""
    members = _restriction_members(arr, i)
    kept = [s for s in members
            if not any(t != s and contains(t, s) for t in members)]
    return Arrangement(tuple(kept), arr.members[i])


@dataclass(frozen=True)
class PivotOrder:
    """Reordering of an arrangement around a pivot.

    ``arrangement`` lists the pivot first, then the deletion grouped by the
    classes of equal intersection with the pivot.  ``permutation[k]`` is the
    original index of the member now at position ``k``.
    """

    pivot: int
    blocks: Tuple[Tuple[int, ...], ...]
    arrangement: SubspaceFamily
    permutation: Tuple[int, ...]


def equivalence_classes(arr: SubspaceFamily, i: int) -> PivotOrder:
    _check_index(arr, i)
    x0 = arr.members[i]
    keys, blocks = [], []
    for k, y in enumerate(arr.members):
        if k == i:
            continue
        s = intersect(x0, y)
        for b, key in enumerate(keys):
            if key == s:
                blocks[b].append(k)
                break
        else:
            keys.append(s)
            blocks.append([k])
    perm = (i,) + tuple(k for b in blocks for k in b)
    reordered = arr._with_members(arr.members[k] for k in perm)
    return PivotOrder(i, tuple(tuple(b) for b in blocks), reordered, perm)


def is_separator(arr: SubspaceFamily, i: int) -> bool:
    """True iff the pivot does not contain the intersection of all other members."""
    _check_index(arr, i)
    if len(arr) < 2:
        raise ArrangementError("separator test needs at least two members")
    others = [k for k in range(len(arr)) if k != i]
    rest = join_of(arr, others)
    return not contains(arr.members[i], rest)


def pivot_separates_joins(arr: SubspaceFamily, i: int) -> bool:
    """Check ``x0&x_I == x0&x_J  <=>  x_I == x_J`` for all ``J = I + {j}``, j not in I.

    Here ``x0`` is member ``i`` and ``I`` ranges over subsets of the others.
    This is the biconditional that geometric lattices with a separator pivot
    satisfy.
    """
    _check_index(arr, i)
    joins = arr.joins
    pivot_bit = 1 << i
    n = len(arr)
    for mask in range(1 << n):
        if mask & pivot_bit:
            continue
        for j in range(n):
            bit = 1 << j
            if bit == pivot_bit or mask & bit:
                continue
            lhs = joins[mask | pivot_bit] == joins[mask | bit | pivot_bit]
            rhs = joins[mask] == joins[mask | bit]
            if lhs != rhs:
                return False
    return True
