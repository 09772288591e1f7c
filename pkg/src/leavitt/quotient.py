"""Finite-dimensional quotients of the algebra of a non-separated digraph.

Every nonzero finite-dimensional quotient is a direct sum of matrix algebras
M_n(B), one summand per maximal sink (B the ground field) or maximal cycle
with finitely many predecessors (B = F[x]/(P) with P nonconstant, P(0) = 1).
The summand size n counts the paths ending at the sink, or the paths ending at
the cycle anchor that do not end with the cycle.

These operations require the default separation; the underlying structure
theory is only available for non-separated row-finite digraphs.  Separated
inputs are rejected with a pointer to the linear criterion in ``dimfun``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import dimfun, repbuild
from .algebra import Element, LeavittAlgebra, Monomial
from .digraph import Cycle, Digraph
from .errors import DomainError, SeparationError


def _require_default_separation(g: Digraph, what: str):
    if g.is_separated:
        raise SeparationError(
            f"{what} is only defined for the default separation; "
            "for separated digraphs use dimfun.has_nonzero_dimfun"
        )


@dataclass(frozen=True)
class Summand:
    kind: str  # "sink" or "cycle"
    anchor: str | Cycle
    n: int

    @property
    def anchor_vertex(self) -> str:
        return self.anchor if isinstance(self.anchor, str) else self.anchor.anchor

    def to_dict(self) -> dict:
        return {"kind": self.kind, "anchor": self.anchor_vertex, "n": self.n}


@dataclass(frozen=True)
class QuotientShape:
    """The shape of all finite-dimensional quotients: matrix sizes and anchors.

    Cycle summands leave the cyclic algebra F[x]/(P) as a free choice; see
    :func:`instantiate`.
    """

    summands: tuple[Summand, ...]

    def to_dict(self) -> dict:
        return {"summands": [s.to_dict() for s in self.summands]}


def has_findim_quotient(g: Digraph) -> bool:
    """Existence of a nonzero finite-dimensional quotient: a maximal sink or
    maximal cycle (predecessor sets are automatically finite here)."""
    _require_default_separation(g, "the graph criterion")
    anchors = g.maximal_sinks_and_cycles()
    assert all(0 < a.predecessor_count <= len(g.vertices) for a in anchors)
    return bool(anchors)


def classify_quotients(g: Digraph) -> QuotientShape:
    _require_default_separation(g, "quotient classification")
    summands = []
    for a in g.maximal_sinks_and_cycles():
        if a.kind == "sink":
            n = repbuild.path_count_to(g, a.anchor)
        else:
            n = repbuild.paths_to_cycle_count(g, a.anchor)
        summands.append(Summand(a.kind, a.anchor, n))
    return QuotientShape(tuple(summands))


@dataclass(frozen=True)
class InstantiatedQuotient:
    """A concrete quotient: a polynomial chosen for every cycle summand.

    ``polys`` maps anchor vertices to constant-first coefficient tuples; the
    total dimension is the sum of n^2 times the summand degree (1 for sinks,
    deg P for cycles).
    """

    shape: QuotientShape
    polys: dict[str, tuple[Fraction, ...]]
    total_dim: int


def instantiate(shape: QuotientShape, polys) -> InstantiatedQuotient:
    chosen: dict[str, tuple[Fraction, ...]] = {}
    total = 0
    polys = {k: tuple(Fraction(c) for c in v) for k, v in dict(polys).items()}
    cycle_anchors = set()
    for s in shape.summands:
        if s.kind == "sink":
            total += s.n * s.n
            continue
        cycle_anchors.add(s.anchor_vertex)
        try:
            coeffs = polys[s.anchor_vertex]
        except KeyError:
            raise DomainError(f"missing polynomial for cycle anchor {s.anchor_vertex!r}") from None
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        deg = len(coeffs) - 1
        if deg < 1:
            raise DomainError(f"polynomial at {s.anchor_vertex!r} must be nonconstant")
        if coeffs[0] != 1:
            raise DomainError(f"polynomial at {s.anchor_vertex!r} must have constant term 1")
        chosen[s.anchor_vertex] = coeffs
        total += s.n * s.n * deg
    extra = set(polys) - cycle_anchors
    if extra:
        raise DomainError(f"polynomials given for unknown cycle anchors: {sorted(extra)}")
    return InstantiatedQuotient(shape, chosen, total)


def locally_finite_structure(g: Digraph) -> list[Summand]:
    """Summand sizes when no cycle has an exit: one matrix algebra over the
    field per sink, one over Laurent polynomials per cycle."""
    _require_default_separation(g, "the locally finite structure")
    cycles = g.cycles()
    for c in cycles:
        ex = g.exits(c)
        if ex:
            raise DomainError(f"cycle at {c.anchor!r} has exits {sorted(ex)}")
    out = [Summand("sink", w, repbuild.path_count_to(g, w)) for w in g.vertices if not g.out_arrows(w)]
    out += [Summand("cycle", c, repbuild.paths_to_cycle_count(g, c)) for c in cycles]
    return out


def theta_map(g: Digraph, sub: Digraph, x: Element) -> Element:
    """The quotient map onto the algebra of a full cohereditary colorful
    subgraph: generators outside the subgraph go to zero, the rest re-normalize
    in the subalgebra."""
    if x.algebra.digraph != g:
        raise DomainError("element does not live over the given digraph")
    flags = g.subgraph_flags(sub.vertices, [a.id for a in sub.arrows])
    if not flags.all_true:
        raise DomainError(f"subgraph is not full+cohereditary+colorful: {flags}")
    target = LeavittAlgebra(sub)
    kept_arrows = {a.id for a in sub.arrows}
    kept_vertices = set(sub.vertices)

    def survives(path) -> bool:
        if path.arrows:
            return all(a in kept_arrows for a in path.arrows)
        return path.start in kept_vertices

    raw: dict[Monomial, Fraction] = {}
    for mono, coeff in x.terms():
        if survives(mono.left) and survives(mono.right):
            raw[mono] = raw.get(mono, Fraction(0)) + coeff
    return target.element(raw)


def hereditary_saturated_closure(g: Digraph, seed) -> frozenset[str]:
    """Smallest hereditary and saturated vertex set containing the seed."""
    _require_default_separation(g, "saturation closure")
    h = set(seed)
    changed = True
    while changed:
        changed = False
        for a in g.arrows:
            if a.src in h and a.tgt not in h:
                h.add(a.tgt)
                changed = True
        for v in g.vertices:
            out = g.out_arrows(v)
            if out and v not in h and all(a.tgt in h for a in out):
                h.add(v)
                changed = True
    return frozenset(h)


def graded_ideals(g: Digraph) -> list[tuple[str, ...]]:
    """All hereditary saturated vertex subsets, each the vertex trace of a
    graded ideal, ordered by size then lexicographically."""
    _require_default_separation(g, "the graded ideal lattice")
    out: list[tuple[str, ...]] = []
    verts = g.vertices
    for size in range(len(verts) + 1):
        for combo in combinations(verts, size):
            h = set(combo)
            if any(a.src in h and a.tgt not in h for a in g.arrows):
                continue
            saturated = all(
                v in h
                for v in verts
                if g.out_arrows(v) and all(a.tgt in h for a in g.out_arrows(v))
            )
            if saturated:
                out.append(combo)
    return out


@dataclass(frozen=True)
class AlgebraClassification:
    finite_dimensional: bool  # no cycles at all
    locally_finite: bool      # no cycle has an exit
    finite_gk: bool           # cycles pairwise disjoint
    has_findim_quotient: bool
    ibn: bool

    def to_dict(self) -> dict:
        return {
            "finite_dimensional": self.finite_dimensional,
            "locally_finite": self.locally_finite,
            "finite_gk": self.finite_gk,
            "has_findim_quotient": self.has_findim_quotient,
            "ibn": self.ibn,
        }


def classify_algebra(g: Digraph) -> AlgebraClassification:
    """The dictionary flags of the algebra, with the implication chain
    finite GK dimension => finite-dimensional quotient => IBN asserted."""
    _require_default_separation(g, "algebra classification")
    cycles = g.cycles()
    acyclic = not cycles
    no_exits = all(not g.exits(c) for c in cycles)
    disjoint = True
    for i, c in enumerate(cycles):
        vi = set(g.cycle_vertices(c))
        for d in cycles[i + 1:]:
            if vi & set(g.cycle_vertices(d)):
                disjoint = False
    quot = has_findim_quotient(g)
    ibn = dimfun.ibn_check(g)
    cls = AlgebraClassification(acyclic, no_exits, disjoint, quot, ibn)
    if g.vertices:
        assert not cls.finite_gk or cls.has_findim_quotient
        assert not cls.has_findim_quotient or cls.ibn
    return cls
