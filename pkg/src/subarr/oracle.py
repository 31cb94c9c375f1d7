"""Independent Betti numbers from order complexes of lattice intervals.

Uses the Goresky-MacPherson formula

    b_q(M) = sum over x > bottom of  rb_{2 codim(x) - 2 - q}(Delta(bottom, x)),

plus ``b_0 = 1``, where ``rb`` is reduced simplicial homology over Q and
``Delta(bottom, x)`` is the complex of chains in the open interval.  Nothing
here touches the cochain model; it exists to cross-check it.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .cohomology import PoincarePoly
from .lattice import IntersectionLattice, build_lattice
from .linalg import QMatrix, rank

__all__ = ["DEFAULT_ORACLE_GATE", "OracleTooLarge", "SimplicialComplex", "order_complex",
           "reduced_betti", "gm_poincare"]

DEFAULT_ORACLE_GATE = 8


class OracleTooLarge(ValueError):
    pass


@dataclass
class SimplicialComplex:
    vertices: List[int]
    simplices: List[Tuple[int, ...]]   # every face, each sorted

    def by_dimension(self) -> Dict[int, List[Tuple[int, ...]]]:
        out: Dict[int, List[Tuple[int, ...]]] = {}
        for s in self.simplices:
            out.setdefault(len(s) - 1, []).append(s)
        return out


def order_complex(lat: IntersectionLattice, x: int) -> SimplicialComplex:
    """All chains of the open interval ``(bottom, x)``."""
    if x == lat.bottom:
        raise ValueError("the interval below the bottom element is undefined")
    verts = lat.open_interval(lat.bottom, x)
    # chains are grown upward, so each simplex comes out sorted by the order
    chains: List[Tuple[int, ...]] = []
    frontier = [(v,) for v in verts]
    while frontier:
        chains.extend(frontier)
        frontier = [c + (v,) for c in frontier for v in verts if lat.lt(c[-1], v)]
    return SimplicialComplex(verts, [tuple(sorted(c)) for c in chains])


def reduced_betti(sc: SimplicialComplex) -> Dict[int, int]:
    """Reduced homology dimensions, degree -1 included (the empty complex has rb_{-1} = 1)."""
    cells = sc.by_dimension()
    cells[-1] = [()]
    top = max(cells)
    index = {k: {s: n for n, s in enumerate(v)} for k, v in cells.items()}
    ranks = {}
    for k in range(0, top + 1):
        rows, cols = len(cells[k - 1]), len(cells[k])
        m = QMatrix.zeros(rows, cols)
        for j, s in enumerate(cells[k]):
            for pos in range(len(s)):
                face = s[:pos] + s[pos + 1:]
                m.rows[index[k - 1][face]][j] = Fraction(-1 if pos % 2 else 1)
        ranks[k] = rank(m)
    out = {}
    for k in range(-1, top + 1):
        b = len(cells[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if b:
            out[k] = b
    return out


def gm_poincare(fam, gate: int = DEFAULT_ORACLE_GATE) -> PoincarePoly:
    if len(fam) > gate:
        raise OracleTooLarge(f"family has {len(fam)} members, oracle gate is {gate}")
    lat = build_lattice(fam)
    coeffs: Dict[int, int] = {0: 1}
    for x in range(1, len(lat)):
        c = lat.codim(x)
        for k, b in reduced_betti(order_complex(lat, x)).items():
            q = 2 * c - 2 - k
            coeffs[q] = coeffs.get(q, 0) + b
    return PoincarePoly(coeffs)
