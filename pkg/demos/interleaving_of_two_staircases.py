"""
Interleaving distance of two staircases
=======================================

Two squares first, then a pair where the slice bound δ* is not tight.
"""

from fractions import Fraction

from persistdist import (
    candidate_set,
    delta_star,
    interleaving_distance,
    probe,
    rectangle,
    render_svg,
    validate,
)

m = rectangle(0, 0, 2, 2)
n = rectangle(1, 1, 3, 3)
print("d_I([0,2]^2, [1,3]^2) =", interleaving_distance(m, n))

# the answer is one of finitely many candidates
s = candidate_set(m, n)
print("candidates:", [str(v) for v in s.finite_values], "eps =", s.epsilon)

# each candidate δ is decided by one probe just above it
for d in s.finite_values:
    print(f"  probe at {d} + eps:", probe(m, n, d + s.epsilon))

# far apart squares: nothing overlaps, both sides just die out
far = rectangle(30, 30, 32, 32)
print("d_I([0,2]^2, [30,32]^2) =", interleaving_distance(m, far))

# a staircase against a rectangle, where the slices alone undershoot
a = validate(
    [(0, 8), (1, 8), (1, 3), (3, 3), (3, 2), (8, 2)],
    [(0, 8), (1, 8), (1, 7), (3, 7), (3, 4), (8, 4), (8, 2)],
)
b = validate([(0, 7), (0, 2), (4, 2)], [(0, 7), (4, 7), (4, 2)])
print("delta* =", delta_star(a, b), " d_I =", interleaving_distance(a, b))

# rationals stay exact
q = rectangle(0, 0, Fraction(1, 3), Fraction(1, 3))
r = rectangle(Fraction(1, 6), Fraction(1, 6), Fraction(1, 2), Fraction(1, 2))
print("d_I with thirds and sixths =", interleaving_distance(q, r))

with open("staircases.svg", "w") as fh:
    fh.write(render_svg([a], [b], shift=2, title="a and b shifted by 2"))
print("wrote staircases.svg")
