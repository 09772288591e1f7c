"""Explicit module constructions: quiver representations satisfying the
block-isomorphism condition, sink and Chen modules, path counting, and the
truncated sequence-space operator models.

Quiver representations follow the row-vector convention: vectors act on the
left, matrices on the right, matching right modules.  For every separation
part X the block matrix of the arrow maps must be a square invertible matrix
from the source space to the direct sum of the target spaces (condition (I));
the dual arrow matrices are the corresponding blocks of its inverse.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import dimfun, ratmat
from .algebra import Element
from .digraph import Cycle, Digraph, Path, SubgraphFlags
from .errors import DomainError, PathSpaceError
from .ratmat import RatMat


@dataclass
class QuiverRep:
    """Per-vertex dimensions plus arrow and dual-arrow matrices.

    ``arrow_mats[e]`` has shape dims[s(e)] x dims[t(e)]; ``dual_mats[e]`` the
    transposed shape.  Validity (condition (I) and the Cuntz-Krieger
    relations) is checked by :func:`verify_relations`, not assumed here.
    """

    dims: dict[str, int]
    arrow_mats: dict[str, RatMat]
    dual_mats: dict[str, RatMat]

    def to_dict(self) -> dict:
        def dump(m: RatMat):
            return [[str(x) for x in row] for row in m.data]

        return {
            "dims": dict(self.dims),
            "arrows": {e: dump(m) for e, m in self.arrow_mats.items()},
            "duals": {e: dump(m) for e, m in self.dual_mats.items()},
        }

    @classmethod
    def from_dict(cls, g: Digraph, d: dict) -> "QuiverRep":
        unknown = set(d) - {"dims", "arrows", "duals"}
        if unknown:
            raise DomainError(f"unknown keys in representation: {sorted(unknown)}")
        if "dims" not in d:
            raise DomainError("representation needs a 'dims' map")
        dims = {v: int(n) for v, n in d["dims"].items()}
        bad = [v for v in dims if not g.has_vertex(v)] + [v for v in g.vertices if v not in dims]
        if bad:
            raise DomainError(f"dims must cover exactly the vertices; mismatch at {bad}")

        def load(rows, nrows, ncols):
            try:
                data = [[Fraction(x) for x in row] for row in rows]
            except (ValueError, TypeError, ZeroDivisionError) as e:
                raise DomainError(f"bad matrix entry: {e}") from None
            if len(data) != nrows or any(len(r) != ncols for r in data):
                raise DomainError("matrix shape does not match the dimensions")
            return RatMat.from_rows(data, cols=ncols)

        mats = {}
        duals = {}
        for e, rows in d.get("arrows", {}).items():
            a = g.arrow(e)
            mats[e] = load(rows, dims[a.src], dims[a.tgt])
        for e, rows in d.get("duals", {}).items():
            a = g.arrow(e)
            duals[e] = load(rows, dims[a.tgt], dims[a.src])
        return cls(dims, mats, duals)


def build_rep(g: Digraph, d, seed: int | None = None) -> QuiverRep:
    """Representation with dims d, built from one block isomorphism per part.

    By default the block isomorphism is the identity matrix, partitioned into
    column blocks of the target widths in arrow order; passing a seed
    substitutes a random invertible rational matrix instead, which exercises
    basis independence downstream.
    """
    if not dimfun.verify(g, d):
        raise DomainError("not a dimension function of this digraph")
    rng = random.Random(seed) if seed is not None else None
    dims = {v: int(d[v]) for v in g.vertices}
    arrow_mats: dict[str, RatMat] = {}
    dual_mats: dict[str, RatMat] = {}
    for part in g.separation:
        n = dims[g.part_source(part)]
        theta = ratmat.identity(n) if rng is None else ratmat.random_invertible(rng, n)
        theta_inv = theta if rng is None else ratmat.inverse(theta)
        offset = 0
        for e in part:
            w = dims[g.arrow(e).tgt]
            arrow_mats[e] = theta.col_block(offset, offset + w)
            dual_mats[e] = theta_inv.row_block(offset, offset + w)
            offset += w
        if offset != n:
            raise DomainError("block widths do not add up")  # unreachable after verify
    return QuiverRep(dims, arrow_mats, dual_mats)


@dataclass(frozen=True)
class RelationCheck:
    relation: str  # "V", "E", "SCK1", "SCK2"
    instance: str
    ok: bool


@dataclass(frozen=True)
class RelationReport:
    checks: tuple[RelationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.ok]


def verify_relations(g: Digraph, rep: QuiverRep) -> RelationReport:
    """Check every Cuntz-Krieger relation instance exactly over the rationals.

    The vertex and path relations hold structurally for block-diagonal data
    and are reported as such; dual(e) mat(f) = delta I and the part sums
    sum mat(e) dual(e) = I are multiplied out.
    """
    dims = rep.dims
    missing = [a.id for a in g.arrows if a.id not in rep.arrow_mats or a.id not in rep.dual_mats]
    if missing:
        raise DomainError(f"representation has no matrices for arrows {missing}")
    for e, m in rep.arrow_mats.items():
        a = g.arrow(e)
        if (m.rows, m.cols) != (dims[a.src], dims[a.tgt]):
            raise DomainError(f"arrow matrix {e!r} has shape {m.rows}x{m.cols}")
    for e, m in rep.dual_mats.items():
        a = g.arrow(e)
        if (m.rows, m.cols) != (dims[a.tgt], dims[a.src]):
            raise DomainError(f"dual matrix {e!r} has shape {m.rows}x{m.cols}")
    checks: list[RelationCheck] = [
        RelationCheck("V", "block decomposition", True),
        RelationCheck("E", "block decomposition", True),
    ]
    for part in g.separation:
        for e in part:
            te_dim = dims[g.arrow(e).tgt]
            for f in part:
                prod = rep.dual_mats[e] @ rep.arrow_mats[f]
                want = (
                    ratmat.identity(te_dim)
                    if e == f
                    else ratmat.zeros(te_dim, dims[g.arrow(f).tgt])
                )
                checks.append(RelationCheck("SCK1", f"{e}* {f}", prod == want))
        n = dims[g.part_source(part)]
        total = ratmat.zeros(n, n)
        for e in part:
            total = total + rep.arrow_mats[e] @ rep.dual_mats[e]
        checks.append(
            RelationCheck("SCK2", f"{g.part_source(part)} = sum over {list(part)}", total == ratmat.identity(n))
        )
    return RelationReport(tuple(checks))


def module_action(g: Digraph, rep: QuiverRep, x: Element, vec) -> dict[str, tuple[Fraction, ...]]:
    """Right action of an element on a block vector over the vertex spaces.

    ``vec`` maps vertices to coordinate sequences; missing blocks are zero.
    A vertex acts as block projection, an arrow through its matrix, a dual
    arrow through the dual matrix, extended linearly over the terms.
    """
    if x.algebra.digraph != g:
        raise DomainError("element does not live over the given digraph")
    dims = rep.dims
    out = {v: [Fraction(0)] * dims[v] for v in g.vertices}
    blocks = {}
    for v in g.vertices:
        row = tuple(Fraction(c) for c in vec.get(v, ()))
        if len(row) not in (0, dims[v]):
            raise DomainError(f"block at {v!r} has length {len(row)}, expected {dims[v]}")
        blocks[v] = RatMat.from_rows([row] if row else [[Fraction(0)] * dims[v]], cols=dims[v])
    for mono, coeff in x.terms():
        row = blocks[mono.left.start]
        for e in mono.left.arrows:
            row = row @ rep.arrow_mats[e]
        for e in reversed(mono.right.arrows):
            row = row @ rep.dual_mats[e]
        dest = out[mono.right.start]
        for j, val in enumerate(row.data[0]):
            dest[j] += coeff * val
    return {v: tuple(vals) for v, vals in out.items()}


def support_subgraph(g: Digraph, rep: QuiverRep) -> tuple[Digraph, SubgraphFlags]:
    """Induced subgraph on the vertices with nonzero dimension, plus its flags."""
    support = {v for v in g.vertices if rep.dims.get(v, 0) > 0}
    sub = g.induced_subgraph(support)
    flags = g.subgraph_flags(support, {a.id for a in sub.arrows})
    return sub, flags


# -- finite path spaces --------------------------------------------------------


def paths_ending_at(g: Digraph, v: str) -> list[Path]:
    """All paths with target v, sorted by (length, arrow ids).

    Only defined when no cycle meets the predecessors of v.
    """
    if not g.has_vertex(v):
        raise DomainError(f"unknown vertex {v!r}")
    memo: dict[str, list[Path]] = {}
    active: set[str] = set()

    def collect(u: str) -> list[Path]:
        if u in memo:
            return memo[u]
        if u in active:
            raise PathSpaceError(f"a cycle reaches {v!r}; its path space is infinite")
        active.add(u)
        acc = [Path(u)]
        for a in g.in_arrows(u):
            for p in collect(a.src):
                acc.append(Path(p.start, p.arrows + (a.id,)))
        active.remove(u)
        memo[u] = acc
        return acc

    return sorted(collect(v), key=lambda p: (len(p), p.arrows))


def path_count_to(g: Digraph, v: str) -> int:
    """n(v) = 1 + sum over arrows a into v of n(s(a)), by acyclic DP."""
    if not g.has_vertex(v):
        raise DomainError(f"unknown vertex {v!r}")
    memo: dict[str, int] = {}
    active: set[str] = set()

    def count(u: str) -> int:
        if u in memo:
            return memo[u]
        if u in active:
            raise PathSpaceError(f"a cycle reaches {v!r}; its path count is infinite")
        active.add(u)
        total = 1 + sum(count(a.src) for a in g.in_arrows(u))
        active.remove(u)
        memo[u] = total
        return total

    return count(v)


class SinkModule:
    """The simple module of a sink w, with the paths ending at w as basis.

    The basis is grouped by start vertex; an arrow acts by stripping itself
    from the front of a basis path, a dual arrow by prepending itself.  The
    action of a monomial p q* on the total space is the elementary matrix
    E[p, q], which :meth:`image` computes through the representation and
    asserts against the direct definition.
    """

    def __init__(self, g: Digraph, w: str):
        if g.out_arrows(w):
            raise DomainError(f"{w!r} is not a sink")
        if g.induced_subgraph(g.predecessors(w)).cycles():
            raise PathSpaceError(f"a cycle connects to {w!r}; the path space is infinite")
        self.digraph = g
        self.sink = w
        self.basis: tuple[Path, ...] = tuple(paths_ending_at(g, w))
        per_vertex: dict[str, list[Path]] = {v: [] for v in g.vertices}
        for p in self.basis:
            per_vertex[p.start].append(p)
        self._local_index = {
            v: {p: i for i, p in enumerate(ps)} for v, ps in per_vertex.items()
        }
        self._per_vertex = per_vertex
        dims = {v: len(ps) for v, ps in per_vertex.items()}
        mats: dict[str, RatMat] = {}
        duals: dict[str, RatMat] = {}
        for a in g.arrows:
            rows = []
            for p in per_vertex[a.src]:
                row = [Fraction(0)] * dims[a.tgt]
                if p.arrows and p.arrows[0] == a.id:
                    tail = Path(a.tgt, p.arrows[1:])
                    row[self._local_index[a.tgt][tail]] = Fraction(1)
                rows.append(row)
            mats[a.id] = RatMat.from_rows(rows, cols=dims[a.tgt])
            duals[a.id] = mats[a.id].transpose()
        self.rep = QuiverRep(dims, mats, duals)
        # global index over the concatenated per-vertex bases, vertex order
        self.total_basis: tuple[Path, ...] = tuple(
            p for v in g.vertices for p in per_vertex[v]
        )
        self._global_index = {p: i for i, p in enumerate(self.total_basis)}

    @property
    def total_dim(self) -> int:
        return len(self.basis)

    def elementary(self, p: Path, q: Path) -> RatMat:
        """The matrix unit E[p, q] over the total basis."""
        n = self.total_dim
        rows = [[Fraction(0)] * n for _ in range(n)]
        rows[self._global_index[p]][self._global_index[q]] = Fraction(1)
        return RatMat.from_rows(rows, cols=n)

    def monomial_matrix(self, p: Path, q: Path) -> RatMat:
        """Total-space matrix of the action of p q*, via the representation.

        A basis vector outside the block of s(p) projects to zero; inside it,
        the row runs through the arrow matrices of p and then the dual
        matrices of q in reverse, landing in the block of s(q).
        """
        n = self.total_dim
        rows = []
        for r in self.total_basis:
            row = [Fraction(0)] * n
            if r.start == p.start:
                unit = [Fraction(0)] * self.rep.dims[r.start]
                unit[self._local_index[r.start][r]] = Fraction(1)
                m = RatMat.from_rows([unit], cols=len(unit))
                for e in p.arrows:
                    m = m @ self.rep.arrow_mats[e]
                for e in reversed(q.arrows):
                    m = m @ self.rep.dual_mats[e]
                dest = self._per_vertex[q.start]
                for j, val in enumerate(m.data[0]):
                    if val:
                        row[self._global_index[dest[j]]] = val
            rows.append(row)
        return RatMat.from_rows(rows, cols=n)

    def image(self, p: Path, q: Path) -> RatMat:
        """Action matrix of p q*; asserted equal to the matrix unit E[p, q]."""
        g = self.digraph
        for path in (p, q):
            g.make_path(path.start, path.arrows)
            if g.path_target(path) != self.sink:
                raise DomainError("both paths must end at the sink")
        m = self.monomial_matrix(p, q)
        expected = self.elementary(p, q)
        if m != expected:
            raise DomainError("monomial action is not the expected matrix unit")
        return m


# -- cycles and Chen modules -----------------------------------------------


def _kmp_failure(pattern: tuple[str, ...]) -> list[int]:
    fail = [0] * len(pattern)
    k = 0
    for i in range(1, len(pattern)):
        while k and pattern[i] != pattern[k]:
            k = fail[k - 1]
        if pattern[i] == pattern[k]:
            k += 1
        fail[i] = k
    return fail


def _kmp_step(pattern, fail, state: int, letter: str) -> int:
    while state and letter != pattern[state]:
        state = fail[state - 1]
    return state + 1 if letter == pattern[state] else 0


def _check_cycle_space(g: Digraph, c: Cycle) -> Digraph:
    """Predecessor subgraph of the cycle anchor, with the preconditions that
    make the prefix-path space finite: the cycle is the only one meeting the
    predecessors and has no exits inside that subgraph."""
    sub = g.induced_subgraph(g.predecessors(c.anchor))
    sub_cycles = sub.cycles()
    if sub_cycles != [c]:
        raise PathSpaceError(
            "the cycle must be the only cycle among the predecessors of its anchor"
        )
    if sub.exits(c):
        raise PathSpaceError("the cycle has exits inside its predecessor subgraph")
    return sub


def _walk_cycle_prefixes(g: Digraph, c: Cycle):
    """DFS over (vertex, match-state) nodes: the reversed predecessor subgraph
    producted with the failure-function automaton of the reversed cycle word.

    Paths ending at the anchor are built back to front, so a path ends with
    the cycle exactly when its first reversed reads complete the pattern; the
    full-match state is therefore forbidden, and forbidding it everywhere
    makes the product graph acyclic (winding around the cycle forever would
    complete a match).  Yields the arrow tuples of all surviving paths,
    front to back.
    """
    sub = _check_cycle_space(g, c)
    pattern = tuple(reversed(c.arrows))
    fail = _kmp_failure(pattern)
    n = len(pattern)

    def walk(v: str, state: int, rev_arrows: list[str]):
        yield tuple(reversed(rev_arrows))
        for a in sub.in_arrows(v):
            nxt = _kmp_step(pattern, fail, state, a.id)
            if nxt == n:
                continue
            rev_arrows.append(a.id)
            yield from walk(a.src, nxt, rev_arrows)
            rev_arrows.pop()

    yield from walk(c.anchor, 0, [])


def cycle_prefix_paths(g: Digraph, c: Cycle) -> list[Path]:
    """All paths ending at the cycle anchor that do not end with the cycle,
    sorted by (length, arrow ids)."""
    g._check_cycle(c)
    out = []
    for arrows in _walk_cycle_prefixes(g, c):
        start = g.arrow(arrows[0]).src if arrows else c.anchor
        out.append(Path(start, arrows))
    return sorted(out, key=lambda p: (len(p), p.arrows))


def paths_to_cycle_count(g: Digraph, c: Cycle) -> int:
    """Size of the prefix-path space, by memoized counting over the product
    graph (no path materialization)."""
    g._check_cycle(c)
    sub = _check_cycle_space(g, c)
    pattern = tuple(reversed(c.arrows))
    fail = _kmp_failure(pattern)
    n = len(pattern)
    memo: dict[tuple[str, int], int] = {}

    def count(v: str, state: int) -> int:
        key = (v, state)
        if key in memo:
            return memo[key]
        total = 1
        for a in sub.in_arrows(v):
            nxt = _kmp_step(pattern, fail, state, a.id)
            if nxt == n:
                continue
            total += count(a.src, nxt)
        memo[key] = total
        return total

    return count(c.anchor, 0)


class ChenModule:
    """Tail classes of the eventually periodic infinite path of a cycle.

    A token is the prefix path p (ending at the anchor, not ending with the
    cycle word) standing for the infinite path p C C C ...; an arrow acts by
    peeling itself off the front (unrolling the cycle when the prefix runs
    out) and a dual arrow by prepending itself, re-canonicalized.
    """

    def __init__(self, g: Digraph, c: Cycle):
        g._check_cycle(c)
        self.digraph = g
        self.cycle = c

    def canonical(self, start: str, arrows: tuple[str, ...]) -> Path:
        word = self.cycle.arrows
        n = len(word)
        while len(arrows) >= n and arrows[-n:] == word:
            arrows = arrows[:-n]
        start = self.digraph.arrow(arrows[0]).src if arrows else self.cycle.anchor
        return Path(start, arrows)

    def token(self, p: Path) -> Path:
        g = self.digraph
        g.make_path(p.start, p.arrows)
        if g.path_target(p) != self.cycle.anchor:
            raise DomainError("token prefixes must end at the cycle anchor")
        return self.canonical(p.start, p.arrows)

    def act_vertex(self, tok: Path, v: str) -> Path | None:
        return tok if tok.start == v else None

    def act_arrow(self, tok: Path, e: str) -> Path | None:
        if tok.arrows:
            if tok.arrows[0] != e:
                return None
            return self.canonical(tok.start, tok.arrows[1:])
        word = self.cycle.arrows
        if word[0] != e:
            return None
        return self.canonical(tok.start, word[1:])

    def act_dual(self, tok: Path, e: str) -> Path | None:
        a = self.digraph.arrow(e)
        if a.tgt != tok.start:
            return None
        return self.canonical(a.src, (e,) + tok.arrows)

    def apply(self, vec: dict[Path, Fraction], x: Element) -> dict[Path, Fraction]:
        """Right action of an algebra element on a finite token combination."""
        out: dict[Path, Fraction] = {}
        for mono, coeff in x.terms():
            for tok, c in vec.items():
                cur: Path | None = self.token(tok)
                if not mono.left.arrows and not mono.right.arrows:
                    cur = self.act_vertex(cur, mono.left.start)
                else:
                    for e in mono.left.arrows:
                        if cur is None:
                            break
                        cur = self.act_arrow(cur, e)
                    for e in reversed(mono.right.arrows):
                        if cur is None:
                            break
                        cur = self.act_dual(cur, e)
                if cur is not None:
                    out[cur] = out.get(cur, Fraction(0)) + c * coeff
        return {tok: c for tok, c in out.items() if c}

    def tokens(self) -> list[Path]:
        """The full token list; finite only under the prefix-space preconditions."""
        return cycle_prefix_paths(self.digraph, self.cycle)

    def check_relations(self) -> RelationReport:
        """Exercise every Cuntz-Krieger relation instance on the token space.

        Needs a finite token space (same preconditions as :meth:`tokens`).
        """
        g = self.digraph
        toks = self.tokens()
        checks: list[RelationCheck] = [
            RelationCheck("V", "token projections", all(self.act_vertex(t, t.start) == t for t in toks))
        ]
        for part in g.separation:
            for e in part:
                te = g.arrow(e).tgt
                for f in part:
                    ok = True
                    for t in toks:
                        mid = self.act_dual(t, e)
                        got = self.act_arrow(mid, f) if mid is not None else None
                        want = (t if t.start == te else None) if e == f else None
                        ok = ok and got == want
                    checks.append(RelationCheck("SCK1", f"{e}* {f}", ok))
            v = g.part_source(part)
            ok = True
            for t in toks:
                acc: dict[Path, int] = {}
                for e in part:
                    mid = self.act_arrow(t, e)
                    if mid is None:
                        continue
                    end = self.act_dual(mid, e)
                    if end is not None:
                        acc[end] = acc.get(end, 0) + 1
                want = {t: 1} if t.start == v else {}
                ok = ok and acc == want
            checks.append(RelationCheck("SCK2", v, ok))
        return RelationReport(tuple(checks))


# -- truncated operator models ----------------------------------------------


@dataclass(frozen=True)
class OperatorCheck:
    name: str
    window: int
    ok: bool


class UpDownModel:
    """Up/downsampling operators by a factor n on sequence indices 0..N.

    Matrices use the standard column convention (``apply`` computes M @ f),
    under which downsampling after upsampling is the identity: D_i U_j is
    delta_ij I on the safe window and sum U_i D_i = I exactly.
    """

    def __init__(self, n: int, truncation: int):
        if n < 2 or truncation < n:
            raise DomainError("need a factor n >= 2 and a window of at least n")
        self.n = n
        self.truncation = truncation
        size = truncation + 1
        self.up: list[np.ndarray] = []
        self.down: list[np.ndarray] = []
        for i in range(n):
            u = np.zeros((size, size), dtype=np.int64)
            d = np.zeros((size, size), dtype=np.int64)
            for k in range(size):
                if n * k + i < size:
                    u[n * k + i, k] = 1  # (U_i f)(nk+i) = f(k)
                    d[k, n * k + i] = 1  # (D_i f)(k) = f(nk+i)
            self.up.append(u)
            self.down.append(d)
        self.matrices = {f"U{i}": self.up[i] for i in range(n)}
        self.matrices.update({f"D{i}": self.down[i] for i in range(n)})

    def apply(self, name: str, seq) -> np.ndarray:
        return self.matrices[name] @ np.asarray(seq, dtype=np.int64)

    def check_relations(self) -> list[OperatorCheck]:
        out = []
        for i in range(self.n):
            for j in range(self.n):
                k = (self.truncation - max(i, j)) // self.n
                prod = (self.down[i] @ self.up[j])[: k + 1, : k + 1]
                want = np.eye(k + 1, dtype=np.int64) * (1 if i == j else 0)
                out.append(OperatorCheck(f"D{i} U{j} = {'1' if i == j else '0'}", k, bool(np.array_equal(prod, want))))
        total = sum(self.up[i] @ self.down[i] for i in range(self.n))
        ok = bool(np.array_equal(total, np.eye(self.truncation + 1, dtype=np.int64)))
        out.append(OperatorCheck("sum U_i D_i = 1", self.truncation, ok))
        return out


class ToeplitzModel:
    """Left and right shift on sequence indices 0..N.

    Matrices use the row-vector convention (apply(f, M) = f @ M) so algebra
    products act left to right: T S = 1 on the window and 1 - S T is the
    projection onto index 0 exactly.
    """

    def __init__(self, truncation: int):
        if truncation < 2:
            raise DomainError("need a window of at least 2")
        self.truncation = truncation
        size = truncation + 1
        s = np.zeros((size, size), dtype=np.int64)
        t = np.zeros((size, size), dtype=np.int64)
        for k in range(size - 1):
            s[k + 1, k] = 1  # (f S)(k) = f(k+1)
            t[k, k + 1] = 1  # (f T)(k) = f(k-1)
        self.shift_left = s
        self.shift_right = t
        self.matrices = {"S": s, "T": t}

    def apply(self, seq, name: str) -> np.ndarray:
        return np.asarray(seq, dtype=np.int64) @ self.matrices[name]

    def check_relations(self) -> list[OperatorCheck]:
        n = self.truncation
        ts = self.shift_right @ self.shift_left
        ok1 = bool(np.array_equal(ts[:n, :n], np.eye(n, dtype=np.int64)))
        e00 = np.zeros((n + 1, n + 1), dtype=np.int64)
        e00[0, 0] = 1
        st = self.shift_left @ self.shift_right
        ok2 = bool(np.array_equal(np.eye(n + 1, dtype=np.int64) - st, e00))
        return [
            OperatorCheck("T S = 1", n - 1, ok1),
            OperatorCheck("1 - S T = E00", n, ok2),
        ]


def updown_model(n: int, truncation: int) -> UpDownModel:
    return UpDownModel(n, truncation)


def toeplitz_model(truncation: int) -> ToeplitzModel:
    return ToeplitzModel(truncation)
