"""
Deletion, restriction and the long exact sequence
==================================================

For each pivot we compare Poin(A) with Poin(A') + t^deg Poin(A'') and read
the discrepancy off the connecting maps.
"""

from subarr import les_report
from subarr.fixtures import example1, example2

for arr in (example1(), example2()):
    print("members:", ", ".join(arr.names))
    for i in range(len(arr)):
        rep = les_report(arr, i)
        print(f"  pivot {rep.pivot_name}: separator={rep.separator} PP={rep.pp_holds}")
        print(f"    A'  : {rep.poincare_Adel}")
        print(f"    A'' : {rep.poincare_Ares}")
        print(f"    exact={rep.les_exact} connecting ranks={rep.connecting_ranks}")
        print(f"    deficit: {rep.deficit}")

# the second arrangement satisfies the identity at h0 even though h0 is not
# a separator, so the separator condition is sufficient but not necessary
