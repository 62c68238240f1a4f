"""
Closed forms, aeration, and classical limits
============================================

Several registered families admit explicit coefficient formulas for their
orthogonal polynomials. Those formulas are implemented separately from the
moment machinery, which is what makes comparing the two a real test.
"""

from qortho.closedforms import (
    cf_chebT,
    cf_chebU,
    cf_chebU_rescaled,
    cf_qhermite,
    cf_qlaguerre,
    classical_hermite_style,
    specialize_poly,
)
from qortho.exactalg import QRational
from qortho.momentfamilies import family
from qortho.orthocore import aerated_orthopoly, orthopoly_recur
from qortho.qcombinatorics import q_pochhammer_signed

# Laguerre-style: explicit alternating sum over q-binomials.
print("laguerre-style p_2 (m=0):", cf_qlaguerre(2, 0))
print("same from the moments   :", orthopoly_recur(family("q-factorial:m=0").moments, 2))

# Hermite-style polynomials match the double-factorial moment family.
print("hermite-style p_4:", cf_qhermite(4))
print("from the moments :", orthopoly_recur(family("q-double-factorial").moments, 4))

# The Chebyshev-style families live on symmetric (aerated) moment sequences:
# odd moments vanish, the recurrence has no s terms, and compressing the even
# coefficients of P_2n recovers the polynomials of the unaerated family.
u2 = cf_chebU(2)
print("u_2 =", u2)
fam = family("andrews-q-catalan")
print("u_4 compressed == p_2 of the quarter-catalan moments:",
      aerated_orthopoly(fam.aerated_moments, 2) == orthopoly_recur(fam.moments, 2))

# Monic u_n and the conventionally normalized U_n differ by a Pochhammer
# factor; the rescaled constructor applies it for you.
n = 3
factor = QRational.of(q_pochhammer_signed(-1, 1, n))
print("U_3 == (-q;q)_3 u_3:", cf_chebU_rescaled(n) == cf_chebU(n).scale(factor))

# At q=1 every family lands on its classical counterpart; the evaluation is
# exact, so a vanishing denominator would be an error rather than a NaN.
h4_at_one = specialize_poly(cf_qhermite(4), 1)
print("hermite-style p_4 at q=1:", h4_at_one)
print("matches classical formula:", h4_at_one == classical_hermite_style(4))
print("chebT t_2 at q=1:", specialize_poly(cf_chebT(2), 1))

# Not every nice basis is orthogonal. The Fibonacci-style polynomials have
# nice moments, but the polynomials orthogonal to those moments differ from
# the basis itself once q is symbolic; the two only meet at q=1.
fib = family("fibonacci-functional")
print("p_3 for the fibonacci functional:", orthopoly_recur(fib.moments, 3))
print("closed form registered:", fib.closed_poly(3))
