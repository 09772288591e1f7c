"""Dimension functions of a separated digraph.

A dimension function assigns a natural number to every vertex so that for
every separation part X the value at the part's source equals the sum of the
values at the arrow targets.  This module builds the relation matrix of that
homogeneous linear system, decides whether a nonzero solution exists (by
exact-rational Fourier-Motzkin elimination), enumerates the minimal nonzero
solutions (a Pottier-style completion with an explicit truncation bound) and
runs the invariant-basis-number test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .digraph import Digraph
from .errors import DomainError, UnknownIdError
from .ratmat import in_row_span

DimensionFunction = dict[str, int]


@dataclass(frozen=True)
class RelationMatrix:
    """One integer row per separation part over the vertex columns.

    The row of a part X is the indicator of its source minus the sum (with
    multiplicity) of the indicators of its arrow targets.
    """

    vertices: tuple[str, ...]
    parts: tuple[tuple[str, ...], ...]
    rows: tuple[tuple[int, ...], ...]


def relation_matrix(g: Digraph) -> RelationMatrix:
    col = {v: i for i, v in enumerate(g.vertices)}
    rows = []
    for part in g.separation:
        row = [0] * len(g.vertices)
        row[col[g.part_source(part)]] += 1
        for aid in part:
            row[col[g.arrow(aid).tgt]] -= 1
        rows.append(tuple(row))
    return RelationMatrix(g.vertices, g.separation, tuple(rows))


def _as_vector(g: Digraph, d) -> tuple[int, ...]:
    vals = dict(d)
    unknown = set(vals) - set(g.vertices)
    if unknown:
        raise UnknownIdError(f"unknown vertices in dimension function: {sorted(unknown)}")
    missing = [v for v in g.vertices if v not in vals]
    if missing:
        raise DomainError(f"dimension function misses vertices: {missing}")
    out = []
    for v in g.vertices:
        x = vals[v]
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise DomainError(f"value at {v!r} must be a natural number, got {x!r}")
        out.append(x)
    return tuple(out)


def verify(g: Digraph, d) -> bool:
    """Whether d satisfies every part relation value(sX) = sum value(te)."""
    vec = _as_vector(g, d)
    rm = relation_matrix(g)
    return all(sum(a * x for a, x in zip(row, vec)) == 0 for row in rm.rows)


# -- feasibility -------------------------------------------------------------


def _normalized(coeffs, const):
    scale = max((abs(x) for x in (*coeffs, const)), default=Fraction(0))
    if scale == 0:
        return tuple(coeffs), const
    return tuple(x / scale for x in coeffs), const / scale


def _fourier_motzkin_feasible(constraints, nvars: int) -> bool:
    """Feasibility of {c . x + c0 >= 0} over the rationals.

    Classic pairwise elimination; exact and dependency-free.  Worst-case
    doubly exponential, fine at the handful-of-vertices scale used here.
    """
    cons = set()
    for coeffs, const in constraints:
        coeffs = tuple(Fraction(x) for x in coeffs)
        cons.add(_normalized(coeffs, Fraction(const)))
    remaining = list(range(nvars))
    while remaining:
        # cheapest variable first keeps the pairwise products small
        def cost(i):
            pos = sum(1 for c, _ in cons if c[i] > 0)
            neg = sum(1 for c, _ in cons if c[i] < 0)
            return (pos * neg, i)

        var = min(remaining, key=cost)
        remaining.remove(var)
        pos, neg, keep = [], [], set()
        for coeffs, const in cons:
            if coeffs[var] > 0:
                pos.append((coeffs, const))
            elif coeffs[var] < 0:
                neg.append((coeffs, const))
            else:
                keep.add((coeffs, const))
        for pc, p0 in pos:
            for nc, n0 in neg:
                a, b = pc[var], -nc[var]
                coeffs = tuple(b * x + a * y for x, y in zip(pc, nc))
                keep.add(_normalized(coeffs, b * p0 + a * n0))
        cons = keep
        for coeffs, const in cons:
            if const < 0 and not any(coeffs):
                return False
    return all(const >= 0 for _, const in cons)


def has_nonzero_dimfun(g: Digraph) -> bool:
    """Whether a nonzero dimension function exists.

    Decided over the rationals (solutions scale to integers): the system is
    A d = 0, d >= 0 together with sum(d) >= 1.
    """
    rm = relation_matrix(g)
    n = len(g.vertices)
    constraints = []
    for row in rm.rows:
        constraints.append((row, 0))
        constraints.append((tuple(-x for x in row), 0))
    for i in range(n):
        unit = tuple(1 if j == i else 0 for j in range(n))
        constraints.append((unit, 0))
    constraints.append(((1,) * n, -1))
    return _fourier_motzkin_feasible(constraints, n)


# -- Hilbert basis -----------------------------------------------------------


@dataclass(frozen=True)
class HilbertBasis:
    """Minimal nonzero solutions with entries <= bound.

    ``complete`` is True when the completion terminated without discarding any
    candidate at the bound, i.e. the result is the whole Hilbert basis.
    """

    functions: tuple[DimensionFunction, ...]
    complete: bool

    def __iter__(self):
        return iter(self.functions)

    def __len__(self):
        return len(self.functions)


def hilbert_basis(g: Digraph, bound: int) -> HilbertBasis:
    """Pottier/Contejean-Devie completion for A d = 0, d in N^V.

    Candidates grow one unit vector at a time, extending t by e_j only when
    <A t, A e_j> < 0, so any candidate on the way to a solution s stays
    componentwise below s; pruning at the bound therefore never loses an
    in-bound solution, it only costs the completeness flag.
    """
    if bound < 1:
        raise DomainError("bound must be at least 1")
    rm = relation_matrix(g)
    n = len(g.vertices)
    rows = rm.rows

    def image(x):
        return tuple(sum(a * b for a, b in zip(row, x)) for row in rows)

    unit_images = [image(tuple(1 if j == i else 0 for j in range(n))) for i in range(n)]
    frontier = sorted(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    basis: list[tuple[int, ...]] = []
    truncated = False
    while frontier:
        grown = set()
        for t in frontier:
            it = image(t)
            if not any(it):
                if not any(all(b <= x for b, x in zip(s, t)) for s in basis):
                    basis.append(t)
                continue
            for j in range(n):
                if sum(a * b for a, b in zip(it, unit_images[j])) >= 0:
                    continue
                u = tuple(x + (1 if k == j else 0) for k, x in enumerate(t))
                if any(all(b <= x for b, x in zip(s, u)) for s in basis):
                    continue
                if max(u) > bound:
                    truncated = True
                    continue
                grown.add(u)
        frontier = sorted(grown)
    basis.sort()
    funcs = tuple(dict(zip(g.vertices, vec)) for vec in basis)
    return HilbertBasis(funcs, complete=not truncated)


# -- invariant basis number ----------------------------------------------------


def ibn_check(g: Digraph) -> bool:
    """True when the algebra has invariant basis number.

    Exact rank test: IBN holds iff the all-ones vertex vector is outside the
    rational row span of the relation matrix.
    """
    rm = relation_matrix(g)
    ones = (1,) * len(g.vertices)
    return not in_row_span(rm.rows, ones)
