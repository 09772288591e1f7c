"""Classifying the finite-dimensional quotients of a digraph algebra.

The shape of every nonzero finite-dimensional quotient is a direct sum of
matrix algebras, one summand per maximal sink or maximal cycle; cycle
summands carry a free choice of polynomial with constant term 1.
"""

from leavitt import Digraph, LeavittAlgebra, quotient

toeplitz = Digraph(["v", "w"], [("e", "v", "v"), ("f", "v", "w")])
shape = quotient.classify_quotients(toeplitz)
print("Toeplitz shape:", shape.to_dict())
inst = quotient.instantiate(shape, {"v": [1, -1]})
print("with P = 1 - x: total dimension", inst.total_dim)
inst = quotient.instantiate(shape, {"v": [1, 0, 0, 1]})
print("with P = 1 + x^3: total dimension", inst.total_dim)

# A digraph with no admissible anchor has no such quotient at all.
double_loop = Digraph(
    ["v", "u"],
    [("l1", "v", "v"), ("l2", "v", "v"), ("b1", "v", "u"), ("b2", "v", "u")],
)
print("\ndouble-loop summands:", quotient.classify_quotients(double_loop).summands)
print("classification:", quotient.classify_algebra(double_loop).to_dict())

# When no cycle has an exit the whole algebra decomposes.
tail = Digraph(["u", "v"], [("a", "u", "v"), ("e", "v", "v")])
print("\nno-exit structure:",
      [(s.kind, s.anchor_vertex, s.n) for s in quotient.locally_finite_structure(tail)])

# Graded ideals correspond to hereditary saturated vertex sets; their
# complements support the quotient maps.
print("\nToeplitz hereditary saturated sets:", quotient.graded_ideals(toeplitz))
alg = LeavittAlgebra(toeplitz)
sub = toeplitz.induced_subgraph({"v"})
for text in ("v", "w", "f", "e e^"):
    x = alg.parse(text)
    print(f"theta({text}) = {quotient.theta_map(toeplitz, sub, x)}")
