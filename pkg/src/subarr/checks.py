"""Self-consistency checks run by ``subarr verify``."""

from typing import List, Tuple

from .arrangement import ArrangementError, SubspaceFamily, is_separator
from .cohomology import euler, poincare
from .deletion_restriction import (DefectError, Triple, k_map, les_report, theta,
                                   theta_total_iso)
from .lattice import build_lattice, is_geometric
from .model import DEFAULT_MAX_SIZE, build_complex, differential_of
from .oracle import DEFAULT_ORACLE_GATE, gm_poincare

__all__ = ["verify_arrangement"]


def _degree_raising(C) -> bool:
    fam = C.family
    for q in C.degrees():
        for m in C.generators(q):
            dv = differential_of(fam, m)
            if dv.terms and any(C.degree(g) != q + 1 for g in dv.terms):
                return False
    return True


def verify_arrangement(fam: SubspaceFamily, max_size: int = DEFAULT_MAX_SIZE,
                       oracle_gate: int = DEFAULT_ORACLE_GATE) -> List[Tuple[str, bool]]:
    """Run every check that applies to ``fam``; returns ``(label, passed)`` pairs."""
    results: List[Tuple[str, bool]] = []
    C = build_complex(fam, max_size)
    results.append(("d o d = 0", C.d_squared_is_zero()))
    results.append(("d raises degree by 1", _degree_raising(C)))
    P = poincare(C)
    results.append(("Euler characteristic", euler(P) == (0 if len(fam) else 1)))
    if len(fam) <= oracle_gate:
        results.append(("order-complex oracle agrees", gm_poincare(fam, oracle_gate) == P))
    if len(fam) < 2:
        return results
    geometric = is_geometric(build_lattice(fam))
    for i, x in enumerate(fam.members):
        tag = f"[pivot {x.name}]"
        try:
            t = Triple(fam, i, max_size)
            for name, f in (("j", t.inclusion), ("p", t.projection), ("phi", t.phi),
                            ("phi_bar", t.phi_bar), ("iota", t.restricted_inclusion)):
                results.append((f"{tag} {name} is a chain map", f.commutes_with_d()))
            rep = les_report(t, i)
            results.append((f"{tag} long exact sequence is exact", rep.les_exact))
            results.append((f"{tag} phi_bar and iota are quasi-isomorphisms",
                            rep.quasi_isomorphisms))
            if rep.separator:
                results.append((f"{tag} separator implies PP", rep.pp_holds))
                results.append((f"{tag} k is a chain map", k_map(fam, i).commutes_with_d()))
                if geometric:
                    tm = theta(fam, i)
                    ok = (tm.map.commutes_with_d() and tm.map.is_generator_bijection()
                          and all(d % 2 == 0 for d in tm.degree_drops.values())
                          and theta_total_iso(tm))
                    results.append((f"{tag} theta is a bijective chain map", ok))
        except (DefectError, ArrangementError) as exc:
            results.append((f"{tag} {exc}", False))
    return results


def separators(fam: SubspaceFamily) -> List[str]:
    if len(fam) < 2:
        return []
    return [x.name for i, x in enumerate(fam.members) if is_separator(fam, i)]
