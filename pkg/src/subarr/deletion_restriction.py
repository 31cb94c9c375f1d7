"""Deletion-restriction maps between models and the long exact sequence.

For a pivot ``x0`` the short exact sequence

    0 -> D(A') --j--> D(A) --p--> D(A)/D(A') -> 0

gives a long exact sequence in cohomology.  The quotient is identified with
the restriction through ``phi_bar: D(A)/D(A') -> D(A~'')`` (degree drop
``deg(x0) = 2 codim x0 - 1``) and the inclusion ``D(A'') -> D(A~'')``.

Maps whose signs depend on the member order (``phi``, ``phi_bar``) are built
on the arrangement reordered with the pivot first and the deletion grouped
by equal intersection with the pivot; the permutation used is kept.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from .arrangement import (ArrangementError, PivotOrder, SubspaceFamily, delete, equivalence_classes,
                          intersect, is_separator, restrict, restrict_tilde)
from .cochains import ChainMap, CochainComplex, map_from_generators
from .cohomology import PoincarePoly, class_of, cohomology, induced_map, induced_total_map, poincare
from .lattice import build_lattice, is_geometric
from .linalg import QMatrix, left_inverse, rank
from .model import (DEFAULT_MAX_SIZE, build_complex, insert_bit, mask_of, members_of,
                    quotient_complex, subcomplex_inclusion)

__all__ = [
    "PreconditionError",
    "DefectError",
    "Triple",
    "TripleReport",
    "ThetaMap",
    "BettiSumReport",
    "pivot_degree",
    "phi",
    "phi_bar",
    "restricted_inclusion",
    "k_map",
    "theta",
    "verify_quasi_iso",
    "connecting_homomorphism",
    "les_report",
    "pp_check",
    "betti_sum_relations",
    "hyperplane_separator_check",
    "theta_total_iso",
]


class PreconditionError(ValueError):
    """The hypotheses a construction needs do not hold for this input."""


class DefectError(RuntimeError):
    """A computation contradicted a property that must hold."""


def pivot_degree(arr: SubspaceFamily, i: int) -> int:
    return 2 * arr.relative_codim(arr.members[i]) - 1


class Triple:
    """The deletion/restriction data of one pivot, with lazily built models.

    ``arrangement`` is the reordered arrangement (pivot at index 0) and
    ``order.permutation`` maps its positions back to the input's indices.
    """

    def __init__(self, arr: SubspaceFamily, i: int, max_size: int = DEFAULT_MAX_SIZE):
        if len(arr) < 2:
            raise ArrangementError("deletion-restriction needs at least two members")
        self.original = arr
        self.pivot = i
        self.max_size = max_size
        self.order: PivotOrder = equivalence_classes(arr, i)
        self.arrangement = self.order.arrangement
        self.deletion = delete(self.arrangement, 0)
        self.restriction_tilde = restrict_tilde(self.arrangement, 0)
        self.restriction = restrict(self.arrangement, 0)
        self.degree_shift = pivot_degree(arr, i)
        x0 = self.arrangement.members[0]
        # position in the restriction_tilde family of x0 & member k
        lookup = {s: k for k, s in enumerate(self.restriction_tilde.members)}
        self.tilde_index = [None] + [lookup[intersect(x0, y)]
                                     for y in self.arrangement.members[1:]]

    @property
    def pivot_name(self) -> str:
        return self.original.members[self.pivot].name

    @cached_property
    def D(self) -> CochainComplex:
        return build_complex(self.arrangement, self.max_size)

    @cached_property
    def D_deleted(self) -> CochainComplex:
        return build_complex(self.deletion, self.max_size)

    @cached_property
    def D_restricted(self) -> CochainComplex:
        return build_complex(self.restriction, self.max_size)

    @cached_property
    def D_tilde(self) -> CochainComplex:
        return build_complex(self.restriction_tilde, self.max_size)

    @cached_property
    def _quotient(self) -> Tuple[CochainComplex, ChainMap]:
        return quotient_complex(self.arrangement, 0, self.D)

    @property
    def quotient(self) -> CochainComplex:
        return self._quotient[0]

    @property
    def projection(self) -> ChainMap:
        return self._quotient[1]

    @cached_property
    def inclusion(self) -> ChainMap:
        return subcomplex_inclusion(self.arrangement, 0, self.D, self.D_deleted)

    def _phi_image(self, m: int):
        if not m & 1:
            return []
        idx = [self.tilde_index[k] for k in members_of(m) if k != 0]
        if len(set(idx)) != len(idx):
            return []
        if idx != sorted(idx):
            raise DefectError("member order is not compatible with the equivalence classes")
        return [(-1 if len(idx) % 2 else 1, mask_of(idx))]

    @cached_property
    def phi(self) -> ChainMap:
        return map_from_generators(self.D, self.D_tilde, self._phi_image,
                                   shift=-self.degree_shift, name="phi")

    @cached_property
    def phi_bar(self) -> ChainMap:
        return map_from_generators(self.quotient, self.D_tilde, self._phi_image,
                                   shift=-self.degree_shift, name="phi_bar")

    @cached_property
    def restricted_inclusion(self) -> ChainMap:
        lookup = {s: k for k, s in enumerate(self.restriction_tilde.members)}
        idx = [lookup[s] for s in self.restriction.members]
        return map_from_generators(
            self.D_restricted, self.D_tilde,
            lambda m: [(1, mask_of(idx[k] for k in members_of(m)))], shift=0, name="iota")

    @cached_property
    def poincare_A(self) -> PoincarePoly:
        return poincare(self.D)

    @cached_property
    def poincare_deleted(self) -> PoincarePoly:
        return poincare(self.D_deleted)

    @cached_property
    def poincare_restricted(self) -> PoincarePoly:
        return poincare(self.D_restricted)


def _triple(arr, i, max_size=DEFAULT_MAX_SIZE) -> Triple:
    if isinstance(arr, Triple):
        return arr
    return Triple(arr, i, max_size)


def phi(arr: SubspaceFamily, i: int) -> ChainMap:
    """``phi: D(A) -> D(A~'')`` on the pivot-first, class-grouped reordering of ``arr``."""
    return _triple(arr, i).phi


def phi_bar(arr: SubspaceFamily, i: int) -> ChainMap:
    return _triple(arr, i).phi_bar


def restricted_inclusion(arr: SubspaceFamily, i: int) -> ChainMap:
    return _triple(arr, i).restricted_inclusion


def k_map(arr: SubspaceFamily, i: int, full: CochainComplex = None,
          deleted: CochainComplex = None) -> ChainMap:
    """Retraction ``D(A) -> D(A')`` killing every subset that contains the pivot.

    Only a chain map when the pivot is a separator, so other pivots are refused.
    """
    if not is_separator(arr, i):
        raise PreconditionError(f"{arr.members[i].name or i} is not a separator")
    if full is None:
        full = build_complex(arr)
    if deleted is None:
        deleted = build_complex(delete(arr, i))
    bit = 1 << i
    low = bit - 1

    def image(m):
        if m & bit:
            return []
        return [(1, (m & low) | ((m >> (i + 1)) << i))]

    return map_from_generators(full, deleted, image, shift=0, name="k")


@dataclass
class ThetaMap:
    """``theta: D(A') -> D(A~'')`` with the degree drop of every generator."""

    map: ChainMap
    degree_drops: Dict[int, int]


def _require_geometric_separator(arr: SubspaceFamily, i: int):
    if len(arr) < 2:
        raise PreconditionError("needs at least two members")
    if not is_separator(arr, i):
        raise PreconditionError(f"{arr.members[i].name or i} is not a separator")
    if not is_geometric(build_lattice(arr)):
        raise PreconditionError("the intersection lattice is not geometric")


def theta(arr: SubspaceFamily, i: int) -> ThetaMap:
    """Send ``{x_i1, ..., x_ir}`` to ``{x0 & x_i1, ..., x0 & x_ir}``.

    Requires a geometric lattice and a separator pivot.  The map is a
    bijection on generators but lowers degrees by ``2 codim(x0 + x_I)``,
    which varies with the generator; it is therefore returned ungraded.
    """
    _require_geometric_separator(arr, i)
    deleted = delete(arr, i)
    tilde = restrict_tilde(arr, i)
    if len(tilde) != len(deleted):
        raise DefectError("intersections with the pivot are not distinct")
    D_del, D_tilde = build_complex(deleted), build_complex(tilde)
    f = map_from_generators(D_del, D_tilde, lambda m: [(1, m)], name="theta")
    off = arr.ambient_codim_offset
    c0 = arr.relative_codim(arr.members[i])
    drops = {}
    for m in range(1 << len(deleted)):
        xi = deleted.joins[m]
        sum_codim = c0 + (xi.codim - off) - (intersect(arr.members[i], xi).codim - off)
        drops[m] = 2 * sum_codim
        if D_del.degree(m) - D_tilde.degree(m) != drops[m]:
            raise DefectError(f"degree drop of generator {m:b} differs from 2 codim(x0 + x_I)")
    return ThetaMap(f, drops)


def verify_quasi_iso(f: ChainMap) -> bool:
    """True iff ``f`` is a graded chain map inducing isomorphisms in every degree."""
    if f.shift is None or not f.commutes_with_d():
        return False
    degrees = set(f.source.degrees()) | {q - f.shift for q in f.target.degrees()}
    maps = induced_map(f, check=False)
    for q in degrees:
        ds = cohomology(f.source, q).dim
        dt = cohomology(f.target, q + f.shift).dim
        if ds != dt:
            return False
        if ds and rank(maps[q]) != ds:
            return False
    return True


def _lift_and_bound(t: Triple, q: int, h, correction=None):
    """``delta`` on one quotient cocycle: lift, apply d, read off in D(A')."""
    D, Dd, Q = t.D, t.D_deleted, t.quotient
    lift = [Fraction(0)] * D.dim(q)
    for g, c in zip(Q.generators(q), h):
        lift[D.position[g][1]] += c
    if correction is not None:
        for g, c in zip(Dd.generators(q), correction):
            lift[D.position[insert_bit(g, 0)][1]] += c
    image = D.d(q).apply(lift)
    out = [Fraction(0)] * Dd.dim(q + 1)
    for g, c in zip(D.generators(q + 1), image):
        if not c:
            continue
        if g & 1:
            raise DefectError("coboundary of a lifted quotient cocycle leaves D(A')")
        out[Dd.position[g >> 1][1]] += c
    return out


def connecting_homomorphism(t: Triple, q: int, corrections: Optional[List] = None) -> QMatrix:
    """Matrix of ``delta: H^q(D(A)/D(A')) -> H^{q+1}(D(A'))``.

    ``corrections[k]``, when given, is a cochain of D(A') in degree ``q``
    added (through ``j``) to the lift of the ``k``-th representative; the
    result must not depend on it.
    """
    reps = cohomology(t.quotient, q).representatives.rows
    target_dim = cohomology(t.D_deleted, q + 1).dim
    cols = []
    for k, h in enumerate(reps):
        corr = corrections[k] if corrections is not None else None
        cols.append(class_of(t.D_deleted, q + 1, _lift_and_bound(t, q, h, corr)))
    return QMatrix.from_columns(cols, target_dim) if cols else QMatrix.zeros(target_dim, 0)


@dataclass
class TripleReport:
    pivot: int
    pivot_name: str
    permutation: Tuple[int, ...]
    degree_shift: int
    poincare_A: PoincarePoly
    poincare_Adel: PoincarePoly
    poincare_Ares: PoincarePoly
    separator: bool
    pp_holds: bool
    les_exact: bool
    quasi_isomorphisms: bool
    connecting_ranks: Dict[int, int]
    deficit: PoincarePoly
    failures: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "pivot": self.pivot_name,
            "pivot_index": self.pivot,
            "permutation": list(self.permutation),
            "degree_shift": self.degree_shift,
            "poincare_A": str(self.poincare_A),
            "poincare_deleted": str(self.poincare_Adel),
            "poincare_restricted": str(self.poincare_Ares),
            "separator": self.separator,
            "pp_holds": self.pp_holds,
            "les_exact": self.les_exact,
            "quasi_isomorphisms": self.quasi_isomorphisms,
            "connecting_ranks": {str(q): r for q, r in sorted(self.connecting_ranks.items())},
            "deficit": str(self.deficit),
            "failures": list(self.failures),
        }


def _zero(m: QMatrix) -> bool:
    return m.is_zero()


def les_report(arr: SubspaceFamily, i: int, max_size: int = DEFAULT_MAX_SIZE) -> TripleReport:
    """Build the long exact sequence for pivot ``i`` and check it node by node.

    Exactness is checked as ``g f = 0`` plus ``rank f + rank g = dim`` at
    every node.  Connecting ranks are keyed by the degree of the restricted
    arrangement class, ``H^p(A'') -> H^{p + deg(x0) + 1}(A')``.
    """
    t = _triple(arr, i, max_size)
    failures: List[str] = []
    for name, f in (("j", t.inclusion), ("p", t.projection), ("phi", t.phi),
                    ("phi_bar", t.phi_bar), ("iota", t.restricted_inclusion)):
        if not f.commutes_with_d():
            failures.append(f"{name} is not a chain map")
    if failures:
        raise DefectError("; ".join(failures))

    j_star = induced_map(t.inclusion, check=False)
    p_star = induced_map(t.projection, check=False)
    degrees = sorted(set(t.D.degrees()) | set(t.D_deleted.degrees()) | set(t.quotient.degrees()))
    lo, hi = degrees[0] - 1, degrees[-1] + 1

    def jq(q):
        return j_star.get(q, QMatrix.zeros(cohomology(t.D, q).dim, cohomology(t.D_deleted, q).dim))

    def pq(q):
        return p_star.get(q, QMatrix.zeros(cohomology(t.quotient, q).dim, cohomology(t.D, q).dim))

    delta = {q: connecting_homomorphism(t, q) for q in range(lo, hi + 1)}
    for q in range(lo + 1, hi + 1):
        hd, ha, hq = (cohomology(t.D_deleted, q).dim, cohomology(t.D, q).dim,
                      cohomology(t.quotient, q).dim)
        d_in, j, p, d_out = delta[q - 1], jq(q), pq(q), delta[q]
        if not _zero(j @ d_in) or rank(d_in) + rank(j) != hd:
            failures.append(f"not exact at H^{q}(A')")
        if not _zero(p @ j) or rank(j) + rank(p) != ha:
            failures.append(f"not exact at H^{q}(A)")
        if not _zero(d_out @ p) or rank(p) + rank(d_out) != hq:
            failures.append(f"not exact at H^{q}(A/A')")
    les_exact = not failures

    quasi = verify_quasi_iso(t.phi_bar) and verify_quasi_iso(t.restricted_inclusion)
    if not quasi:
        failures.append("phi_bar or the inclusion of the restriction is not a quasi-isomorphism")

    connecting: Dict[int, int] = {}
    if quasi:
        phi_star = induced_map(t.phi_bar, check=False)
        iota_star = induced_map(t.restricted_inclusion, check=False)
        s = t.degree_shift
        for q, dmat in delta.items():
            if dmat.ncols == 0 or dmat.nrows == 0:
                continue
            # H^{q-s}(A'') -> H^{q-s}(A~'') -> H^q(quotient) -> H^{q+1}(A')
            back = left_inverse(phi_star[q])
            r = rank(dmat @ back @ iota_star[q - s])
            if r:
                connecting[q - s] = r
    else:
        for q, dmat in delta.items():
            r = rank(dmat) if dmat.nrows and dmat.ncols else 0
            if r:
                connecting[q - t.degree_shift] = r

    pA, pd, pr = t.poincare_A, t.poincare_deleted, t.poincare_restricted
    predicted = pd + pr.shift(t.degree_shift)
    return TripleReport(
        pivot=i, pivot_name=t.pivot_name, permutation=t.order.permutation,
        degree_shift=t.degree_shift, poincare_A=pA, poincare_Adel=pd, poincare_Ares=pr,
        separator=is_separator(t.original, i), pp_holds=predicted == pA,
        les_exact=les_exact, quasi_isomorphisms=quasi, connecting_ranks=connecting,
        deficit=predicted - pA, failures=failures)


def pp_check(arr: SubspaceFamily, i: int, max_size: int = DEFAULT_MAX_SIZE) -> bool:
    """``Poin(A) = Poin(A') + t^deg(x0) Poin(A'')``, coefficientwise."""
    if len(arr) < 2:
        raise ArrangementError("PP property needs at least two members")
    pA = poincare(arr, max_size)
    pd = poincare(delete(arr, i), max_size)
    pr = poincare(restrict(arr, i), max_size)
    return pA == pd + pr.shift(pivot_degree(arr, i))


@dataclass
class BettiSumReport:
    even: bool
    odd: bool
    total: bool
    partial: bool
    poincare_deleted: PoincarePoly
    poincare_restricted: PoincarePoly

    @property
    def all_hold(self) -> bool:
        return self.even and self.odd and self.total and self.partial


def betti_sum_relations(arr: SubspaceFamily, i: int) -> BettiSumReport:
    """Compare Betti sums of deletion and restriction for a geometric separator pivot."""
    _require_geometric_separator(arr, i)
    pd = poincare(delete(arr, i))
    pr = poincare(restrict(arr, i))
    top = max(pd.degrees() + pr.degrees())
    return BettiSumReport(
        even=pd.even_sum() == pr.even_sum(),
        odd=pd.odd_sum() == pr.odd_sum(),
        total=pd.total() == pr.total(),
        partial=all(pd.partial_sum(n) <= pr.partial_sum(n) for n in range(top + 1)),
        poincare_deleted=pd, poincare_restricted=pr)


def hyperplane_separator_check(arr: SubspaceFamily, i: int) -> bool:
    """For a hyperplane separator with geometric lattice:
    ``Poin(A') = Poin(A'')`` and ``Poin(A) = (1 + t) Poin(A'')``."""
    if arr.relative_codim(arr.members[i]) != 1:
        raise PreconditionError(f"{arr.members[i].name or i} is not a hyperplane")
    _require_geometric_separator(arr, i)
    pA = poincare(arr)
    pd = poincare(delete(arr, i))
    pr = poincare(restrict(arr, i))
    return pd == pr and pA == PoincarePoly({0: 1, 1: 1}) * pr


def theta_total_iso(tm: ThetaMap) -> bool:
    """The map induced by theta on total cohomology is square and invertible."""
    m = induced_total_map(tm.map, check=True)
    return m.nrows == m.ncols and rank(m) == m.nrows
