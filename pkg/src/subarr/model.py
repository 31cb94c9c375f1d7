"""The combinatorial cochain model D(A) of a subspace arrangement complement.

A generator is a subset ``sigma`` of the family, encoded as a bitmask over
member indices.  Its degree is ``2 codim(join sigma) - |sigma|``, codimension
taken inside the family's ambient space.  The differential removes one
member at a time, keeping only removals that leave the join unchanged, with
sign ``(-1)^j`` for the member at (1-based) position ``j`` of ``sigma``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .arrangement import SubspaceFamily, delete
from .cochains import ChainMap, CochainComplex, CochainVector, map_from_generators
from .linalg import QMatrix

__all__ = [
    "DEFAULT_MAX_SIZE",
    "ComplexTooLarge",
    "Generator",
    "degree_of",
    "differential_of",
    "product",
    "multiply",
    "build_complex",
    "subcomplex_inclusion",
    "quotient_complex",
    "mask_of",
    "members_of",
    "insert_bit",
]

DEFAULT_MAX_SIZE = 16


class ComplexTooLarge(ValueError):
    """The family has more members than the configured cap allows."""


@dataclass(frozen=True)
class Generator:
    sigma: int
    degree: int


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def members_of(mask: int) -> List[int]:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def insert_bit(mask: int, i: int) -> int:
    """Re-index a subset of the deletion at ``i`` as a subset of the full family."""
    low = mask & ((1 << i) - 1)
    return low | ((mask >> i) << (i + 1))


def _as_mask(sigma) -> int:
    return sigma if isinstance(sigma, int) else mask_of(sigma)


def degree_of(fam: SubspaceFamily, sigma) -> int:
    m = _as_mask(sigma)
    codim = fam.join_codims[m] - fam.ambient_codim_offset
    return 2 * codim - bin(m).count("1")


def _boundary_terms(fam: SubspaceFamily, m: int) -> List[Tuple[int, int]]:
    codims = fam.join_codims
    c = codims[m]
    out = []
    for j, i in enumerate(members_of(m), start=1):
        face = m & ~(1 << i)
        if codims[face] == c:
            out.append((-1 if j % 2 else 1, face))
    return out


def differential_of(fam: SubspaceFamily, sigma) -> CochainVector:
    m = _as_mask(sigma)
    terms = {face: Fraction(s) for s, face in _boundary_terms(fam, m)}
    return CochainVector(degree_of(fam, m) + 1, terms)


def product(fam: SubspaceFamily, sigma, tau) -> Optional[Tuple[int, int]]:
    """``sigma . tau`` as ``(sign, union_mask)``, or ``None`` when it vanishes."""
    s, t = _as_mask(sigma), _as_mask(tau)
    if s & t:
        return None
    off = fam.ambient_codim_offset
    codims = fam.join_codims
    if (codims[s] - off) + (codims[t] - off) != codims[s | t] - off:
        return None
    # inversions of the shuffle putting tau after sigma
    inversions = sum(1 for a in members_of(s) for b in members_of(t) if a > b)
    return (-1 if inversions % 2 else 1, s | t)


def multiply(fam: SubspaceFamily, u: CochainVector, v: CochainVector) -> CochainVector:
    """Bilinear extension of :func:`product` to cochains."""
    terms: Dict[int, Fraction] = {}
    for s, a in u.terms.items():
        for t, b in v.terms.items():
            p = product(fam, s, t)
            if p is not None and a and b:
                sign, m = p
                terms[m] = terms.get(m, Fraction(0)) + sign * a * b
    return CochainVector(u.degree + v.degree, {m: c for m, c in terms.items() if c})


def build_complex(fam: SubspaceFamily, max_size: int = DEFAULT_MAX_SIZE) -> CochainComplex:
    """Assemble D(fam): all subsets, graded, with the differential matrices."""
    n = len(fam)
    if n > max_size:
        raise ComplexTooLarge(f"family has {n} members, cap is {max_size} (2^n generators)")
    basis: Dict[int, List[int]] = {}
    for m in range(1 << n):
        basis.setdefault(degree_of(fam, m), []).append(m)
    position = {g: (q, k) for q, b in basis.items() for k, g in enumerate(b)}
    diff: Dict[int, QMatrix] = {}
    for q, gens in basis.items():
        target = basis.get(q + 1)
        if not target:
            continue
        mat = None
        for col, m in enumerate(gens):
            for sign, face in _boundary_terms(fam, m):
                if mat is None:
                    mat = QMatrix.zeros(len(target), len(gens))
                mat.rows[position[face][1]][col] = Fraction(sign)
        if mat is not None:
            diff[q] = mat
    return CochainComplex(basis, diff, family=fam)


def subcomplex_inclusion(arr: SubspaceFamily, i: int, full: CochainComplex = None,
                         deleted: CochainComplex = None) -> ChainMap:
    """The inclusion D(A minus member i) -> D(A), identity on subsets."""
    if full is None:
        full = build_complex(arr)
    if deleted is None:
        deleted = build_complex(delete(arr, i))
    return map_from_generators(deleted, full, lambda m: [(1, insert_bit(m, i))],
                               shift=0, name="j")


def quotient_complex(arr: SubspaceFamily, i: int, full: CochainComplex = None
                     ) -> Tuple[CochainComplex, ChainMap]:
    """D(A)/D(A') with basis the subsets containing member ``i``, and the projection."""
    if full is None:
        full = build_complex(arr)
    bit = 1 << i
    basis, keep = {}, {}
    for q in full.degrees():
        idx = [k for k, m in enumerate(full.generators(q)) if m & bit]
        keep[q] = idx
        basis[q] = [full.generators(q)[k] for k in idx]
    diff = {}
    for q, d in full.differential.items():
        if keep.get(q) and keep.get(q + 1):
            diff[q] = d.select_rows(keep[q + 1]).select_columns(keep[q])
    quotient = CochainComplex(basis, diff, family=arr)
    proj = map_from_generators(full, quotient,
                               lambda m: [(1, m)] if m & bit else [], shift=0, name="p")
    return quotient, proj
