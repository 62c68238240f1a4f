"""
q-analogs of the usual counting quantities
==========================================

The moment sequences in this package are built from q-brackets, q-factorials,
q-binomials, and their double and multifactorial variants. At q=1 each one
collapses to the classical integer it generalizes.
"""

from qortho.qcombinatorics import (
    q_binomial,
    q_bracket,
    q_double_factorial,
    q_factorial,
    q_multifactorial,
    q_pochhammer_signed,
)

# [n] = 1 + q + ... + q^(n-1), so [n] at q=1 is n.
for n in (1, 2, 3, 5):
    print(f"[{n}] =", q_bracket(n))

# [n]! multiplies the brackets; [4 over 2] is already symmetric in its
# coefficients, a fact the binomial recurrences reprove below.
print("[4]!      =", q_factorial(4))
print("[4 over 2] =", q_binomial(4, 2))

# Both Pascal-style recurrences hold, each with its own power of q.
n, k = 5, 2
left = q_binomial(n, k)
upper = q_binomial(n - 1, k - 1)
lower = q_binomial(n - 1, k)
from qortho.exactalg import QPolynomial

q_to = QPolynomial.monomial
print("pascal (first kind) :", left == upper + q_to(k) * lower)
print("pascal (second kind):", left == q_to(n - k) * upper + lower)

# Double factorials come in an odd and an even flavor. n counts factors:
# odd gives [1][3]...[2n-1], even gives [2][4]...[2n].
print("[2*3-1]!! =", q_double_factorial(3, "odd"))
print("[2*3]!!   =", q_double_factorial(3, "even"))

# Their product over n factors each recovers the full factorial of 2n.
n = 4
both = q_double_factorial(n, "odd") * q_double_factorial(n, "even")
print("odd * even == [2n]! :", both == q_factorial(2 * n))

# Multifactorials step down by r instead of 1; step 2 is the even double
# factorial and step 1 is the plain factorial.
print("mf(7, step 3) =", q_multifactorial(7, 3), " (that is [7][4])")
print("mf(6, step 1) == [6]! :", q_multifactorial(6, 1) == q_factorial(6))

# Signed Pochhammer products (1 - s q^a)(1 - s q^(a+1))... appear as the
# rescaling factors of the Chebyshev-style families.
print("(-q;q)_3 =", q_pochhammer_signed(-1, 1, 3))
