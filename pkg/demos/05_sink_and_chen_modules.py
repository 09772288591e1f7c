"""The two concrete families of simple modules: sink modules and periodic
Chen modules.

A sink module has the paths into the sink as basis, and a monomial p q* acts
as the matrix unit E[p, q].  A Chen module is spanned by tails of the
infinite path around a cycle; its tokens are the prefixes that do not end
with the cycle word.
"""

from fractions import Fraction

from leavitt import ChenModule, Digraph, LeavittAlgebra, SinkModule
from leavitt import path_count_to, paths_to_cycle_count
from leavitt.digraph import Path

fork = Digraph(["u", "w1", "w2"], [("a1", "u", "w1"), ("a2", "u", "w2")])
sm = SinkModule(fork, "w1")
print("basis of the w1 module:", [(p.start, p.arrows) for p in sm.basis])
print("dims:", sm.rep.dims)

p = Path("u", ("a1",))
q = Path("w1")
print("action of a1 a1^:", sm.image(p, p).data)
print("action of a1:    ", sm.image(p, q).data)
print("path count n(w1):", path_count_to(fork, "w1"))

# Chen module for the loop at v fed by u -> v: tokens are the trivial path
# at v and the feeder arrow.
tail = Digraph(["u", "v"], [("a", "u", "v"), ("e", "v", "v")])
(cycle,) = tail.cycles()
chen = ChenModule(tail, cycle)
print("\ncycle:", cycle.arrows, "anchored at", cycle.anchor)
print("tokens:", [(t.start, t.arrows) for t in chen.tokens()])
print("prefix path count:", paths_to_cycle_count(tail, cycle))

tok_v = chen.token(Path("v"))
tok_a = chen.token(Path("u", ("a",)))
print("token v . e   =", chen.act_arrow(tok_v, "e"))    # unrolls the cycle
print("token v . a^  =", chen.act_dual(tok_v, "a"))     # prepends the feeder
print("token a . a   =", chen.act_arrow(tok_a, "a"))

# every Cuntz-Krieger relation instance holds on the token space
print("token-space relations pass:", chen.check_relations().passed)

# linear combinations work through the algebra
alg = LeavittAlgebra(tail)
vec = {tok_v: Fraction(2), tok_a: Fraction(3)}
print("(2 v + 3 a) . a =", chen.apply(vec, alg.arrow("a")))
