"""
From a moment sequence to its orthogonal polynomials
====================================================

A moment functional is determined by the values a(n) it assigns to the
monomials. When every leading Hankel determinant is nonzero there is a unique
monic polynomial sequence p_n with L(x^k p_n) = 0 for k < n. This script
builds that sequence two independent ways and checks they agree.
"""

from qortho.momentfamilies import family
from qortho.orthocore import expansion_triangle, orthopoly_det, orthopoly_recur, stieltjes
from qortho.xpoly import apply_functional

fam = family("q-factorial:m=0")
print("moments of", fam.fid)
for n in range(5):
    print(f"  a({n}) =", fam.moments.moment(n))

# Path one: a bordered determinant of the moment matrix, normalized monic.
p3_det = orthopoly_det(fam.moments, 3)
print("p_3 by determinant:", p3_det)

# Path two: run the quotient-difference style recursion on the moments to
# get the three-term recurrence coefficients, then unroll the recurrence.
table = stieltjes(fam.moments, 4)
print("s =", [str(v) for v in table.s])
print("t =", [str(v) for v in table.t])
p3_rec = orthopoly_recur(fam.moments, 3)
print("p_3 by recurrence :", p3_rec)
print("paths agree:", p3_det == p3_rec)

# Orthogonality is a statement about the functional, so verify it directly:
# L(x^k p_3) must vanish for k < 3 and the norm L(p_3^2) must not.
for k in range(3):
    value = apply_functional(fam.moments, p3_rec.shift_x(k))
    print(f"L(x^{k} p_3) =", value)
print("L(p_3^2)   =", apply_functional(fam.moments, p3_rec * p3_rec))

# The same norms fall out of the recursion as running products.
print("norms from recursion:", [str(v) for v in table.norms])

# Inverting the relationship: expand the monomials back in the p_k basis.
# Column zero returns the moments and the diagonal is identically 1.
tri = expansion_triangle(fam.moments, 3)
for n in range(4):
    print(f"x^{n} row:", [str(c) for c in tri.row(n)])

# Specializing q first and computing over plain fractions gives the same
# answers as specializing the symbolic result, here at q=1 where this family
# turns into the classical moments n!.
at_one = fam.specialized_moments(1)
print("p_3 at q=1:", orthopoly_recur(at_one, 3))
