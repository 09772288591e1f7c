"""Exact arithmetic with algebra elements: products, normal forms, grading.

Elements are rational combinations of monomials p q*; the engine rewrites
every product into the irreducible spanning set, so equality of elements is
equality of normal forms.
"""

from fractions import Fraction

from leavitt import Digraph, LeavittAlgebra

toeplitz = Digraph(["v", "w"], [("e", "v", "v"), ("f", "v", "w")])
alg = LeavittAlgebra(toeplitz)

e, f = alg.arrow("e"), alg.arrow("f")
v, w = alg.vertex("v"), alg.vertex("w")

print("e* e       =", e.star() * e)            # the target vertex
print("e e* + f f* =", e * e.star() + f * f.star())  # the source vertex, by (SCK2)
print("e* f       =", e.star() * f)            # distinct arrows kill each other
print("e e*       =", e * e.star())            # rewritten: v - f f^

# the involution reverses products and grades
x = e * f.star() + Fraction(1, 2) * v
print("x          =", x)
print("x*         =", x.star())

# grading lives in the free group on the arrows; the integer grade is the
# exponent sum
print("grade(e)   =", e.grade())
print("grade(e+v) =", (e + v).grade())          # None: inhomogeneous

# the expression parser accepts the same syntax the printer emits
y = alg.parse("v - e e^")
print("parse('v - e e^') =", y)
print("zero?", alg.parse("e^ f").is_zero())

# the identity is the sum of the vertices
one = alg.one()
print("1 * x == x:", one * x == x)
