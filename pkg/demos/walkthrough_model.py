"""
The cochain model of a small arrangement
========================================

Three subspaces of C^5, their intersection lattice, the model D(A) and its
cohomology.
"""

from subarr import build_complex, build_lattice, differential_of, poincare
from subarr.fixtures import example1
from subarr.model import members_of

arr = example1()
for x in arr:
    print(x.name, "codim", x.codim)

# every subset of the arrangement is a generator; its degree depends only on
# the codimension of its intersection and its size
def label(m):
    return "{" + ", ".join(arr.members[k].name for k in members_of(m)) + "}"


C = build_complex(arr)
for q in C.degrees():
    for m in C.generators(q):
        d = differential_of(arr, m).terms
        image = " ".join(f"{int(c):+} {label(g)}" for g, c in d.items()) or "0"
        print(f"deg {q}: {label(m):<14} d = {image}")

# one nonzero differential kills one class in degree 7 and one in degree 8
print("Poin(M(A), t) =", poincare(arr))

lat = build_lattice(arr)
print(len(lat), "lattice elements, codims", [lat.codim(k) for k in range(len(lat))])
