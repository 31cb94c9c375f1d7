"""Rational cohomology of complex subspace arrangement complements.

Builds the combinatorial cochain model D(A) of an arrangement, computes its
Betti numbers exactly over Q, and constructs the deletion-restriction long
exact sequence together with the separator and Poincare-polynomial checks.
"""

from .arrangement import (Arrangement, ArrangementError, Subspace, SubspaceFamily, ambient_space,
                          arrangement, contains, delete, equivalence_classes, family, intersect,
                          is_separator, join_of, restrict, restrict_tilde, pivot_separates_joins,
                          subspace_from_equations, subspace_from_span)
from .cohomology import PoincarePoly, betti, euler, induced_map, poincare
from .deletion_restriction import (Triple, betti_sum_relations, hyperplane_separator_check,
                                   k_map, les_report, phi, phi_bar, pp_check,
                                   restricted_inclusion, theta)
from .lattice import build_lattice, is_geometric
from .linalg import QMatrix, nullspace, rank, rref, solve
from .model import (build_complex, differential_of, multiply, product, quotient_complex,
                    subcomplex_inclusion)
from .oracle import gm_poincare

__version__ = "0.1.0"
