"""
Model against the order-complex formula
=======================================

Betti numbers from D(A) and from reduced homology of lattice intervals are
computed by unrelated code; on random arrangements they agree.
"""

import random

from subarr import gm_poincare, poincare
from subarr.fixtures import random_arrangement

rng = random.Random(1)
agree = 0
for trial in range(30):
    arr = random_arrangement(rng, n_max=6, l_max=6)
    model, oracle = poincare(arr), gm_poincare(arr)
    agree += model == oracle
    if trial < 5:
        print(f"n={len(arr)} l={arr.ambient_dim}: {model}  |  {oracle}")
print(agree, "of 30 agree")
