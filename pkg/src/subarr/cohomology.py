"""Cohomology of finite cochain complexes by exact rank computations."""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping

from .cochains import ChainMap, CochainComplex
from .linalg import QMatrix, _rref_rows, column_space_basis, nullspace
from .model import DEFAULT_MAX_SIZE, build_complex

__all__ = [
    "PoincarePoly",
    "CohomologyBasis",
    "cohomology",
    "betti",
    "poincare",
    "euler",
    "induced_map",
    "induced_total_map",
    "class_of",
]


class PoincarePoly:
    """A polynomial in ``t`` with integer coefficients, stored sparsely.

    Betti-number polynomials have nonnegative coefficients; differences of
    them (as in a formula deficit) may not, so signs are allowed.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] = None):
        self.coeffs: Dict[int, int] = {int(q): int(c) for q, c in (coeffs or {}).items() if c}

    @classmethod
    def one(cls) -> "PoincarePoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "PoincarePoly":
        return cls({degree: coeff})

    def __getitem__(self, q: int) -> int:
        return self.coeffs.get(q, 0)

    def degrees(self) -> List[int]:
        return sorted(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = PoincarePoly({0: other})
        if not isinstance(other, PoincarePoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __add__(self, other: "PoincarePoly") -> "PoincarePoly":
        out = dict(self.coeffs)
        for q, c in other.coeffs.items():
            out[q] = out.get(q, 0) + c
        return PoincarePoly(out)

    def __neg__(self):
        return PoincarePoly({q: -c for q, c in self.coeffs.items()})

    def __sub__(self, other: "PoincarePoly") -> "PoincarePoly":
        return self + (-other)

    def __mul__(self, other: "PoincarePoly") -> "PoincarePoly":
        out: Dict[int, int] = {}
        for p, a in self.coeffs.items():
            for q, b in other.coeffs.items():
                out[p + q] = out.get(p + q, 0) + a * b
        return PoincarePoly(out)

    def shift(self, k: int) -> "PoincarePoly":
        """Multiply by ``t^k``."""
        return PoincarePoly({q + k: c for q, c in self.coeffs.items()})

    def total(self) -> int:
        return sum(self.coeffs.values())

    def even_sum(self) -> int:
        return sum(c for q, c in self.coeffs.items() if q % 2 == 0)

    def odd_sum(self) -> int:
        return sum(c for q, c in self.coeffs.items() if q % 2)

    def partial_sum(self, n: int) -> int:
        return sum(c for q, c in self.coeffs.items() if q <= n)

    def to_dict(self) -> Dict[str, int]:
        return {str(q): self.coeffs[q] for q in self.degrees()}

    @classmethod
    def from_dict(cls, data: Mapping) -> "PoincarePoly":
        return cls({int(q): int(c) for q, c in data.items()})

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for q in self.degrees():
            c = self.coeffs[q]
            mag = abs(c)
            if q == 0:
                body = str(mag)
            else:
                power = "t" if q == 1 else f"t^{q}"
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"PoincarePoly({self})"

    _TERM = re.compile(r"^(\d*)(t(?:\^(-?\d+))?)?$")

    @classmethod
    def parse(cls, text: str) -> "PoincarePoly":
        """Inverse of ``str``: ``"1 + t^3 + 2t^5"``."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls()
        if s[0] not in "+-":
            s = "+" + s
        out: Dict[int, int] = {}
        for sign, term in re.findall(r"([+-])([^+-]+)", s):
            m = cls._TERM.match(term)
            if not m or (not m.group(1) and not m.group(2)):
                raise ValueError(f"cannot parse polynomial term {term!r}")
            c = int(m.group(1)) if m.group(1) else 1
            q = 0 if not m.group(2) else (int(m.group(3)) if m.group(3) else 1)
            out[q] = out.get(q, 0) + (c if sign == "+" else -c)
        return cls(out)


@dataclass
class CohomologyBasis:
    """Cohomology data of one degree.

    ``projector @ z`` gives the coordinates of the class of a cocycle ``z``
    with respect to ``representatives``.
    """

    degree: int
    cocycles: QMatrix
    coboundaries: QMatrix
    representatives: QMatrix
    projector: QMatrix

    @property
    def dim(self) -> int:
        return self.representatives.nrows


def _degree_cohomology(C: CochainComplex, q: int) -> CohomologyBasis:
    n = C.dim(q)
    Z = nullspace(C.d(q)) if q in C.differential else QMatrix.identity(n)
    B = column_space_basis(C.d(q - 1)) if (q - 1) in C.differential else QMatrix._wrap([], n)
    b, z = B.nrows, Z.nrows
    one, zero = Fraction(1), Fraction(0)
    rows = []
    for i in range(n):
        row = [v[i] for v in B.rows] + [v[i] for v in Z.rows]
        row += [one if j == i else zero for j in range(n)]
        rows.append(row)
    # coboundaries come first, so the pivots past them pick a complement in Z
    pivots = _rref_rows(rows, b + z + n, stop=b + z)
    reps, proj = [], []
    for r, c in enumerate(pivots):
        if c >= b:
            reps.append(list(Z.rows[c - b]))
            proj.append(rows[r][b + z:])
    return CohomologyBasis(q, Z, B, QMatrix._wrap(reps, n), QMatrix._wrap(proj, n))


def cohomology(C: CochainComplex, q: int) -> CohomologyBasis:
    cache = C.cache.setdefault("cohomology", {})
    if q not in cache:
        cache[q] = _degree_cohomology(C, q)
    return cache[q]


def betti(C: CochainComplex) -> Dict[int, int]:
    """``b_q = dim ker d_q - rank d_{q-1}`` for every degree with generators."""
    out = {}
    for q in C.degrees():
        d = cohomology(C, q).dim
        if d:
            out[q] = d
    return out


def poincare(fam, max_size: int = DEFAULT_MAX_SIZE) -> PoincarePoly:
    if isinstance(fam, CochainComplex):
        return PoincarePoly(betti(fam))
    return PoincarePoly(betti(build_complex(fam, max_size)))


def euler(p: PoincarePoly) -> int:
    return sum(c if q % 2 == 0 else -c for q, c in p.coeffs.items())


def class_of(C: CochainComplex, q: int, z) -> List[Fraction]:
    """Coordinates in ``H^q(C)`` of the cocycle ``z`` (dense coordinates)."""
    return cohomology(C, q).projector.apply(z)


def induced_map(f: ChainMap, check: bool = True) -> Dict[int, QMatrix]:
    """Matrices of ``f*: H^q(source) -> H^{q+shift}(target)``, keyed by ``q``."""
    if f.shift is None:
        raise ValueError("induced_map needs a graded map; use induced_total_map")
    if check:
        f.check()
    out = {}
    for q in f.source.degrees():
        src = cohomology(f.source, q)
        tgt = cohomology(f.target, q + f.shift)
        block = f.graded_block(q)
        cols = [tgt.projector.apply(block.apply(h)) for h in src.representatives.rows]
        out[q] = QMatrix.from_columns(cols, tgt.dim) if cols else QMatrix.zeros(tgt.dim, 0)
    return out


def induced_total_map(f: ChainMap, check: bool = True) -> QMatrix:
    """Induced map on total cohomology, for maps that need not preserve degree.

    Classes are ordered by degree, then by representative.
    """
    if check:
        f.check()
    src_deg = [q for q in f.source.degrees() if cohomology(f.source, q).dim]
    tgt_deg = [q for q in f.target.degrees() if cohomology(f.target, q).dim]
    offset, k = {}, 0
    for q in tgt_deg:
        offset[q] = k
        k += cohomology(f.target, q).dim
    cols = []
    for p in src_deg:
        for h in cohomology(f.source, p).representatives.rows:
            col = [Fraction(0)] * k
            for (pp, q), m in f.blocks.items():
                if pp != p or q not in offset:
                    continue
                coords = cohomology(f.target, q).projector.apply(m.apply(h))
                for t, c in enumerate(coords):
                    col[offset[q] + t] += c
            cols.append(col)
    return QMatrix.from_columns(cols, k) if cols else QMatrix.zeros(k, 0)
