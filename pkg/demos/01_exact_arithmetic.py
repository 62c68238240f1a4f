"""
Exact arithmetic in the coefficient field
=========================================

Everything downstream of this module, from recurrences to determinants,
works over rational functions in q with integer coefficients. This
walkthrough shows the two layers: polynomials in q, and quotients of them
kept in a canonical form so that == means mathematical equality.
"""

from fractions import Fraction

from qortho.exactalg import QPolynomial, QRational

# A polynomial is built from its coefficient list, constant term first.
p = QPolynomial([1, 1])        # 1 + q
r = QPolynomial([1, 0, 1])     # 1 + q^2
print("p      =", p)
print("r      =", r)
print("p * r  =", p * r)
print("p ** 3 =", p ** 3)

# Coefficients may be fractions; the representation keeps one shared
# denominator internally but prints them back as you would write them.
half = QPolynomial([Fraction(1, 2), Fraction(1, 3)])
print("half   =", half)

# Division is exact or it is an error. There is no silent remainder.
product = p * r
print("(p*r)/r =", product.divexact(r))
try:
    p.divexact(r)
except ValueError as err:
    print("p/r     -> ValueError:", err)

# Quotients live in QRational. Construction reduces to lowest terms with a
# monic denominator, so equal values are structurally identical objects.
a = QRational.of(QPolynomial([-1, 0, 1]), QPolynomial([-1, 1]))   # (q^2-1)/(q-1)
print("a =", a, "   is_polynomial:", a.is_polynomial)

b = QRational.of(QPolynomial([1]), QPolynomial([1, 1]))           # 1/(1+q)
print("b =", b)
print("a + b =", a + b)
print("a * b =", a * b)

# Evaluation substitutes a rational number for q and returns a Fraction.
print("b at q=3     :", b.eval_at(3))
print("b at q=6/5   :", b.eval_at(Fraction(6, 5)))

# Substituting q -> 1/q stays inside the field.
c = QRational.of(QPolynomial([0, 1]), QPolynomial([1, 1]))        # q/(1+q)
print("c          =", c)
print("c(1/q)     =", c.substitute_q_reciprocal())

# Values round-trip through JSON with integers encoded as decimal strings,
# so arbitrary-precision coefficients survive any JSON parser.
blob = (a + b).to_json()
print("round trip ok:", QRational.from_json(blob) == a + b)
