"""Shared fixtures, random digraph generators and brute-force oracles.

The oracles here are deliberately naive (exhaustive enumeration, bounded
search) and independent of the library code paths they are used to check.
"""

import itertools
import random
from fractions import Fraction

from leavitt import Digraph
from leavitt.algebra import Monomial
from leavitt.digraph import Path


# -- named fixtures ------------------------------------------------------------


def toeplitz() -> Digraph:
    return Digraph(["v", "w"], [("e", "v", "v"), ("f", "v", "w")])


def loop_feeding_double_loop() -> Digraph:
    """A loop at v, an arrow v->u, and two loops at u."""
    return Digraph(
        ["v", "u"],
        [("c", "v", "v"), ("d", "v", "u"), ("g1", "u", "u"), ("g2", "u", "u")],
    )


def double_loop_to_sink() -> Digraph:
    """Two loops at v and two arrows v->u, u a sink."""
    return Digraph(
        ["v", "u"],
        [("l1", "v", "v"), ("l2", "v", "v"), ("b1", "v", "u"), ("b2", "v", "u")],
    )


def two_sinks_fork() -> Digraph:
    return Digraph(["u", "w1", "w2"], [("a1", "u", "w1"), ("a2", "u", "w2")])


def rose(n: int) -> Digraph:
    return Digraph(["v"], [(f"e{i}", "v", "v") for i in range(n)])


def chain(k: int) -> Digraph:
    verts = [f"u{i}" for i in range(k + 1)]
    return Digraph(verts, [(f"c{i}", f"u{i}", f"u{i+1}") for i in range(k)])


def two_sink_chain() -> Digraph:
    """u -> v, then v -> w1 and v -> w2."""
    return Digraph(
        ["u", "v", "w1", "w2"],
        [("a", "u", "v"), ("b1", "v", "w1"), ("b2", "v", "w2")],
    )


def loop_with_tail() -> Digraph:
    """u -> v with a loop at v (the no-exit cycle with one feeder)."""
    return Digraph(["u", "v"], [("a", "u", "v"), ("e", "v", "v")])


ALL_FIXTURES = {
    "toeplitz": toeplitz,
    "loop_feeding_double_loop": loop_feeding_double_loop,
    "double_loop_to_sink": double_loop_to_sink,
    "two_sinks_fork": two_sinks_fork,
    "rose2": lambda: rose(2),
    "rose3": lambda: rose(3),
}


# -- generators ---------------------------------------------------------------


def all_small_digraphs(max_v: int, max_a: int):
    """Every labeled non-separated digraph with at most max_v vertices and
    max_a arrows (arrow multisets over the vertex pairs)."""
    for nv in range(0, max_v + 1):
        verts = [f"v{i}" for i in range(nv)]
        pairs = [(s, t) for s in verts for t in verts]
        for k in range(0, max_a + 1):
            for combo in itertools.combinations_with_replacement(pairs, k):
                arrows = [(f"a{i}", s, t) for i, (s, t) in enumerate(combo)]
                yield Digraph(verts, arrows)


def random_digraph(rng: random.Random, max_v=6, max_a=10, separated=False) -> Digraph:
    nv = rng.randint(1, max_v)
    verts = [f"v{i}" for i in range(nv)]
    na = rng.randint(0, max_a)
    arrows = [(f"a{i}", rng.choice(verts), rng.choice(verts)) for i in range(na)]
    sep = None
    if separated and arrows and rng.random() < 0.7:
        by_src: dict[str, list[str]] = {}
        for aid, s, _ in arrows:
            by_src.setdefault(s, []).append(aid)
        sep = []
        for ids in by_src.values():
            rng.shuffle(ids)
            if len(ids) > 1 and rng.random() < 0.5:
                cut = rng.randint(1, len(ids) - 1)
                sep += [ids[:cut], ids[cut:]]
            else:
                sep.append(ids)
    return Digraph(verts, arrows, sep)


def random_acyclic_digraph(rng: random.Random, max_v=6, max_a=8) -> Digraph:
    """Arrows only run forward along a fixed vertex order."""
    nv = rng.randint(1, max_v)
    verts = [f"v{i}" for i in range(nv)]
    arrows = []
    for i in range(rng.randint(0, max_a)):
        if nv < 2:
            break
        s = rng.randint(0, nv - 2)
        t = rng.randint(s + 1, nv - 1)
        arrows.append((f"a{i}", verts[s], verts[t]))
    return Digraph(verts, arrows)


def random_no_exit_digraph(rng: random.Random, max_cycles=2, max_extra=3) -> Digraph:
    """Disjoint cycles whose vertices emit nothing else, plus an acyclic layer
    of extra vertices feeding forward or into the cycles."""
    verts: list[str] = []
    arrows: list[tuple[str, str, str]] = []
    cycle_entry: list[str] = []
    for c in range(rng.randint(0, max_cycles)):
        length = rng.randint(1, 3)
        ring = [f"c{c}x{i}" for i in range(length)]
        verts += ring
        for i in range(length):
            arrows.append((f"c{c}e{i}", ring[i], ring[(i + 1) % length]))
        cycle_entry.append(ring[0])
    extras = [f"z{i}" for i in range(rng.randint(0 if cycle_entry else 1, max_extra))]
    verts += extras
    aid = 0
    for i, z in enumerate(extras):
        for _ in range(rng.randint(0, 2)):
            targets = extras[i + 1:] + cycle_entry
            if not targets:
                continue
            arrows.append((f"f{aid}", z, rng.choice(targets)))
            aid += 1
    return Digraph(verts, arrows)


def random_unique_cycle_fixture(rng: random.Random, max_extra=3) -> Digraph:
    """Exactly one cycle, with no exits anywhere, fed by an acyclic layer."""
    length = rng.randint(1, 3)
    ring = [f"c{i}" for i in range(length)]
    arrows = [(f"e{i}", ring[i], ring[(i + 1) % length]) for i in range(length)]
    extras = [f"z{i}" for i in range(rng.randint(0, max_extra))]
    aid = 0
    for i, z in enumerate(extras):
        for _ in range(rng.randint(1, 2)):
            targets = extras[i + 1:] + ring
            arrows.append((f"f{aid}", z, rng.choice(targets)))
            aid += 1
    return Digraph(ring + extras, arrows)


def random_element(rng: random.Random, alg, max_terms=3, max_len=2):
    """Random normalized element: a few monomials with random rational weights."""
    g = alg.digraph
    acc = alg.zero()
    for _ in range(rng.randint(1, max_terms)):
        start = rng.choice(g.vertices)
        p_arrows = []
        at = start
        for _ in range(rng.randint(0, max_len)):
            outs = g.out_arrows(at)
            if not outs:
                break
            a = rng.choice(outs)
            p_arrows.append(a.id)
            at = a.tgt
        q_rev = []
        qt = at
        for _ in range(rng.randint(0, max_len)):
            ins = g.in_arrows(qt)
            if not ins:
                break
            a = rng.choice(ins)
            q_rev.append(a.id)
            qt = a.src
        coeff = Fraction(rng.randint(-3, 3), rng.randint(1, 3)) or Fraction(1)
        mono = Monomial(Path(start, tuple(p_arrows)), Path(qt, tuple(reversed(q_rev))))
        acc = acc + alg.element({mono: coeff})
    return acc


# -- oracles -------------------------------------------------------------------


def brute_force_solutions(g: Digraph, bound: int):
    """All nonzero natural vectors with entries <= bound solving every part
    relation, by direct enumeration."""
    from leavitt import dimfun

    rm = dimfun.relation_matrix(g)
    sols = []
    for vec in itertools.product(range(bound + 1), repeat=len(g.vertices)):
        if not any(vec):
            continue
        if all(sum(a * x for a, x in zip(row, vec)) == 0 for row in rm.rows):
            sols.append(vec)
    return sols


def minimal_among(vectors):
    out = []
    for v in vectors:
        if not any(w != v and all(a <= b for a, b in zip(w, v)) for w in vectors):
            out.append(v)
    return out


def is_nat_combination(target, basis) -> bool:
    """Whether target is a natural-number combination of the basis vectors."""
    seen = set()

    def search(rest) -> bool:
        if not any(rest):
            return True
        if rest in seen:
            return False
        seen.add(rest)
        for b in basis:
            if all(x <= r for x, r in zip(b, rest)):
                if search(tuple(r - x for r, x in zip(rest, b))):
                    return True
        return False

    return search(tuple(target))


def enumerate_paths_to(g: Digraph, v: str, max_len: int):
    """All paths ending at v with length <= max_len, by reverse walking."""
    out = [Path(v)]
    frontier = [Path(v)]
    for _ in range(max_len):
        nxt = []
        for p in frontier:
            for a in g.in_arrows(p.start):
                nxt.append(Path(a.src, (a.id,) + p.arrows))
        out += nxt
        frontier = nxt
    return out


def prefix_paths_brute(g: Digraph, c, max_len: int):
    """Paths ending at the cycle anchor without the cycle word as suffix,
    up to the length bound."""
    n = len(c.arrows)
    return [
        p
        for p in enumerate_paths_to(g, c.anchor, max_len)
        if len(p.arrows) < n or p.arrows[-n:] != c.arrows
    ]


def all_paths(g: Digraph, max_len: int):
    """Every path of the digraph of length <= max_len."""
    out = [Path(v) for v in g.vertices]
    frontier = list(out)
    for _ in range(max_len):
        nxt = []
        for p in frontier:
            tip = g.path_target(p)
            for a in g.out_arrows(tip):
                nxt.append(Path(p.start, p.arrows + (a.id,)))
        out += nxt
        frontier = nxt
    return out
