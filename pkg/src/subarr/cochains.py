"""Finite cochain complexes over Q and maps between them.

Generators are arbitrary hashable keys (the model uses subset bitmasks).
``differential[q]`` is the matrix of ``d: C^q -> C^{q+1}``: columns are
indexed by the degree-``q`` basis, rows by the degree-``q+1`` basis.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Tuple

from .linalg import QMatrix

__all__ = ["CochainComplex", "CochainVector", "ChainMap", "NotAChainMap", "map_from_generators"]


class NotAChainMap(ValueError):
    """A linear map failed ``d f = f d``."""


@dataclass
class CochainVector:
    """A homogeneous cochain with sparse coefficients keyed by generator."""

    degree: int
    terms: Dict[Hashable, Fraction] = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, CochainVector):
            return NotImplemented
        a = {k: v for k, v in self.terms.items() if v}
        b = {k: v for k, v in other.terms.items() if v}
        return a == b and (not a or self.degree == other.degree)

    def is_zero(self) -> bool:
        return not any(self.terms.values())


class CochainComplex:
    def __init__(self, basis: Dict[int, List[Hashable]], differential: Dict[int, QMatrix],
                 family=None):
        self.basis = {q: list(b) for q, b in basis.items() if b}
        self.family = family
        self.position: Dict[Hashable, Tuple[int, int]] = {}
        for q, b in self.basis.items():
            for k, g in enumerate(b):
                if g in self.position:
                    raise ValueError(f"generator {g!r} appears twice")
                self.position[g] = (q, k)
        self.differential: Dict[int, QMatrix] = {}
        for q, m in differential.items():
            if m.shape != (self.dim(q + 1), self.dim(q)):
                raise ValueError(f"differential in degree {q} has shape {m.shape}, "
                                 f"expected {(self.dim(q + 1), self.dim(q))}")
            if not m.is_zero():
                self.differential[q] = m
        # scratch space for derived data (cohomology bases)
        self.cache: Dict[str, object] = {}

    def degrees(self) -> List[int]:
        return sorted(self.basis)

    def dim(self, q: int) -> int:
        return len(self.basis.get(q, ()))

    def total_dim(self) -> int:
        return len(self.position)

    def generators(self, q: int) -> List[Hashable]:
        return self.basis.get(q, [])

    def degree(self, g: Hashable) -> int:
        return self.position[g][0]

    def d(self, q: int) -> QMatrix:
        m = self.differential.get(q)
        if m is None:
            return QMatrix.zeros(self.dim(q + 1), self.dim(q))
        return m

    def vector(self, v: CochainVector) -> List[Fraction]:
        """Dense coordinates of ``v`` in its degree's basis."""
        out = [Fraction(0)] * self.dim(v.degree)
        for g, c in v.terms.items():
            q, k = self.position[g]
            if q != v.degree:
                raise ValueError(f"generator {g!r} has degree {q}, not {v.degree}")
            out[k] += c
        return out

    def cochain(self, q: int, coords: Iterable[Fraction]) -> CochainVector:
        return CochainVector(q, {g: c for g, c in zip(self.generators(q), coords) if c})

    def apply_d(self, v: CochainVector) -> CochainVector:
        return self.cochain(v.degree + 1, self.d(v.degree).apply(self.vector(v)))

    def d_squared_is_zero(self) -> bool:
        for q in self.differential:
            if q + 1 in self.differential and not (self.d(q + 1) @ self.d(q)).is_zero():
                return False
        return True

    def __repr__(self):
        dims = ", ".join(f"{q}:{self.dim(q)}" for q in self.degrees())
        return f"<CochainComplex dims {{{dims}}}>"


class ChainMap:
    """A linear map between cochain complexes, stored in homogeneous blocks.

    ``blocks[(p, q)]`` is the matrix from ``source^p`` to ``target^q``.  When
    every block satisfies ``q = p + shift`` the map is graded with that
    shift; otherwise ``shift`` is ``None`` and only the ungraded chain-map
    identity makes sense.
    """

    def __init__(self, source: CochainComplex, target: CochainComplex,
                 blocks: Dict[Tuple[int, int], QMatrix], shift: Optional[int] = None,
                 name: str = ""):
        self.source = source
        self.target = target
        self.name = name
        self.blocks: Dict[Tuple[int, int], QMatrix] = {}
        for (p, q), m in blocks.items():
            if m.shape != (target.dim(q), source.dim(p)):
                raise ValueError(f"block {(p, q)} has shape {m.shape}")
            if shift is not None and q != p + shift:
                raise ValueError(f"block {(p, q)} does not respect shift {shift}")
            if not m.is_zero():
                self.blocks[(p, q)] = m
        self.shift = shift

    def block(self, p: int, q: int) -> QMatrix:
        m = self.blocks.get((p, q))
        if m is None:
            return QMatrix.zeros(self.target.dim(q), self.source.dim(p))
        return m

    def graded_block(self, p: int) -> QMatrix:
        if self.shift is None:
            raise ValueError("map is not graded")
        return self.block(p, p + self.shift)

    def apply(self, v: CochainVector) -> Dict[int, CochainVector]:
        """Image of ``v`` split into homogeneous components by target degree."""
        x = self.source.vector(v)
        out = {}
        for (p, q), m in self.blocks.items():
            if p == v.degree:
                out[q] = self.target.cochain(q, m.apply(x))
        return out

    def commutes_with_d(self) -> bool:
        S, T = self.source, self.target
        pairs = set()
        for (p, q) in self.blocks:
            pairs.add((p, q + 1))      # d_T after f
            pairs.add((p - 1, q))      # f after d_S
        for p, q in pairs:
            lhs = T.d(q - 1) @ self.block(p, q - 1)
            rhs = self.block(p + 1, q) @ S.d(p)
            if lhs != rhs:
                return False
        return True

    def check(self):
        if not self.commutes_with_d():
            raise NotAChainMap(f"{self.name or 'map'} does not commute with the differentials")
        return self

    def compose(self, other: "ChainMap") -> "ChainMap":
        """``self after other``."""
        if other.target is not self.source:
            raise ValueError("maps are not composable")
        blocks: Dict[Tuple[int, int], QMatrix] = {}
        for (p, q), a in other.blocks.items():
            for (q2, r), b in self.blocks.items():
                if q2 == q:
                    prod = b @ a
                    blocks[(p, r)] = blocks[(p, r)] + prod if (p, r) in blocks else prod
        shift = None
        if self.shift is not None and other.shift is not None:
            shift = self.shift + other.shift
        return ChainMap(other.source, self.target, blocks, shift,
                        name=f"{self.name}.{other.name}")

    def is_generator_bijection(self) -> bool:
        """Every source generator goes to plus or minus a distinct target generator, onto."""
        src_hits, tgt_hits = {}, {}
        for (p, q), m in self.blocks.items():
            for i, row in enumerate(m.rows):
                for j, c in enumerate(row):
                    if c:
                        if abs(c) != 1:
                            return False
                        src_hits[(p, j)] = src_hits.get((p, j), 0) + 1
                        tgt_hits[(q, i)] = tgt_hits.get((q, i), 0) + 1
        return (len(src_hits) == self.source.total_dim()
                and len(tgt_hits) == self.target.total_dim()
                and all(c == 1 for c in src_hits.values())
                and all(c == 1 for c in tgt_hits.values()))

    def __repr__(self):
        return f"<ChainMap {self.name or ''} shift={self.shift}>"


def map_from_generators(source: CochainComplex, target: CochainComplex,
                        images: Callable[[Hashable], Iterable[Tuple[int, Hashable]]],
                        shift: Optional[int] = None, name: str = "") -> ChainMap:
    """Build a map from its values on generators.

    ``images(g)`` yields ``(coefficient, target_generator)`` pairs.
    """
    entries: Dict[Tuple[int, int], Dict[Tuple[int, int], Fraction]] = {}
    for p in source.degrees():
        for j, g in enumerate(source.generators(p)):
            for c, h in images(g):
                if not c:
                    continue
                q, i = target.position[h]
                blk = entries.setdefault((p, q), {})
                blk[(i, j)] = blk.get((i, j), Fraction(0)) + Fraction(c)
    blocks = {}
    for (p, q), e in entries.items():
        m = QMatrix.zeros(target.dim(q), source.dim(p))
        for (i, j), c in e.items():
            m.rows[i][j] = c
        blocks[(p, q)] = m
    return ChainMap(source, target, blocks, shift, name)
