"""
When boundary vertices are not enough
=====================================

The constant map on an intersection component Q extends to a morphism
M -> N when nothing below Q sits in M but not in N, and nothing above Q sits
in N but not in M.  Checking only that Q's vertices lie on the right
boundaries misses escapes along a shared boundary line.
"""

from persistdist import intersect_components, is_valid, rectangle, validate, vertex_criterion
from persistdist.oracle import pointwise_valid

m = rectangle(4, 4, 5, 8)
n = validate(
    [(2, 5), (2, 4), (3, 4), (3, 2), (5, 2), (5, 0), (7, 0)],
    [(2, 5), (5, 5), (5, 4), (7, 4), (7, 0)],
)
(q,) = intersect_components(m, n)
print("component:", q.region)

# every vertex of Q is where it should be...
print("vertex rule:", vertex_criterion(q, m, n))

# ...but (6, 4) >= (5, 4) lies in N and not in M
print("(6,4) in N:", n.contains((6, 4)), " in M:", m.contains((6, 4)))
print("is_valid:", is_valid(q, m, n), " pointwise:", pointwise_valid(q, m, n))

# a thin version: the segment [2,6]x{4}, with (1,4) in M but not in N
m2, n2 = rectangle(1, 4, 6, 5), rectangle(2, 0, 6, 4)
(q2,) = intersect_components(m2, n2)
print("segment:", vertex_criterion(q2, m2, n2), is_valid(q2, m2, n2), pointwise_valid(q2, m2, n2))
