"""
Dimension distance
==================

A cheap lower bound for the interleaving distance, read off the pointwise
dimensions of two modules on a grid.
"""

import numpy as np

from persistdist import (
    differential,
    dimension_distance,
    dimension_function,
    extend,
    interleaving_distance,
    shrink,
    validate,
)

f = np.array([1, 1, 1, 1, 0, 0])
g = np.array([0, 1, 1, 0, 0, 0])
print("Δf       =", differential(f).values)
print("f shrunk =", shrink(f, 1).values)
print("f grown  =", extend(f, 1).values)
print(dimension_distance(f, g))

# two staircases on the unit grid over [0,16]^2
m = validate([(2, 12), (2, 7), (6, 7), (6, 3), (9, 3)], [(2, 12), (6, 12), (6, 4), (9, 4), (9, 3)])
n = validate([(2, 14), (2, 13), (12, 13), (12, 2), (15, 2)], [(2, 14), (12, 14), (12, 8), (15, 8), (15, 2)])
fm = dimension_function([m], (17, 17), (0, 0), 1)
fn = dimension_function([n], (17, 17), (0, 0), 1)
# rows from top (y=16) to bottom, columns x=0..16
print(fm.values.T[::-1])
print("d_0 =", dimension_distance(fm, fn).d_zero, " d_I =", interleaving_distance(m, n))
