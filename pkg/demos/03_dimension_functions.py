"""Dimension functions: the linear system, feasibility, and minimal solutions.

A dimension function is a natural-number vertex labeling with
value(source of part) = sum of values at the arrow targets.  Nonzero ones
exist exactly when the algebra has a nonzero finite-dimensional module.
"""

from leavitt import Digraph, dimfun

toeplitz = Digraph(["v", "w"], [("e", "v", "v"), ("f", "v", "w")])
print("Toeplitz relation rows:", dimfun.relation_matrix(toeplitz).rows)
print("d = (v:3, w:0) verifies:", dimfun.verify(toeplitz, {"v": 3, "w": 0}))
print("nonzero solution exists:", dimfun.has_nonzero_dimfun(toeplitz))
print("Hilbert basis:", list(dimfun.hilbert_basis(toeplitz, 10)))

# Two loops at v and two arrows to a sink force d(v) = 2d(v) + 2d(u),
# so only zero solves the system.
double_loop = Digraph(
    ["v", "u"],
    [("l1", "v", "v"), ("l2", "v", "v"), ("b1", "v", "u"), ("b2", "v", "u")],
)
print("\ndouble-loop rows:", dimfun.relation_matrix(double_loop).rows)
print("nonzero solution exists:", dimfun.has_nonzero_dimfun(double_loop))
# ... and yet the algebra keeps invariant basis number: (1,1) is outside the
# rational span of (1,2).
print("IBN:", dimfun.ibn_check(double_loop))

# A fork u -> w1, u -> w2 has a two-element Hilbert basis.
fork = Digraph(["u", "w1", "w2"], [("a1", "u", "w1"), ("a2", "u", "w2")])
basis = dimfun.hilbert_basis(fork, 10)
print("\nfork basis (complete: %s):" % basis.complete)
for d in basis:
    print("  ", d)

# The rose with n >= 2 petals: d(v) = n d(v) forces zero, and IBN fails.
for n in (1, 2, 3):
    rose = Digraph(["v"], [(f"e{i}", "v", "v") for i in range(n)])
    print(
        f"rose R_{n}: nonzero dimfun {dimfun.has_nonzero_dimfun(rose)!s:5}  "
        f"IBN {dimfun.ibn_check(rose)}"
    )
