"""
Bottleneck distance of interval decomposable modules
====================================================

Summands are matched by a bipartite matching on a threshold graph; a summand
left over must be small enough to die out by itself.
"""

import random

from persistdist import bottleneck, pairwise_matrix, rectangle
from persistdist.generate import random_module
from persistdist.oracle import oracle_bottleneck

ms = [rectangle(0, 0, 2, 2), rectangle(10, 10, 12, 12)]
ns = [rectangle(1, 1, 3, 3)]

mat = pairwise_matrix(ms, ns)
print("d_I matrix:", [[str(d) for d in row] for row in mat.entries])
print("trivial thresholds:", mat.row_triv, mat.col_triv)

res = bottleneck(ms, ns, mat)
print("d_B =", res.distance, " matching:", res.matching, " unmatched:", res.unmatched_left)

# against every partial matching, on a few random modules
rng = random.Random(0)
for _ in range(5):
    a, b = random_module(rng, 3), random_module(rng, 3)
    mat = pairwise_matrix(a, b)
    fast = bottleneck(a, b, mat).distance
    slow = oracle_bottleneck(a, b, mat.entries, mat.row_triv, mat.col_triv)
    print(f"  {fast} == {slow}")
