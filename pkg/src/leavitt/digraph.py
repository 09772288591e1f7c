"""Finite separated digraphs and the graph invariants the rest of the package consumes.

A digraph is a finite set of vertices and arrows together with a *separation*:
a partition of the arrows that refines the grouping by source vertex.  When no
separation is supplied, the default one (all arrows with a common source in a
single part) is synthesized; that is the "non-separated" case.

All values are immutable after construction and every operation is a pure
function, so instances are safe to share between threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DomainError, InvalidDigraphError, UnknownIdError


@dataclass(frozen=True)
class Arrow:
    id: str
    src: str
    tgt: str


@dataclass(frozen=True)
class Path:
    """A directed path: a start vertex and a (possibly empty) run of arrow ids."""

    start: str
    arrows: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.arrows)


@dataclass(frozen=True)
class Cycle:
    """A simple cycle, stored in canonical rotation.

    The anchor is the lexicographically smallest vertex on the cycle and the
    arrow sequence starts there, so two cycles compare equal exactly when they
    agree up to rotation.
    """

    arrows: tuple[str, ...]
    anchor: str

    def __len__(self) -> int:
        return len(self.arrows)


@dataclass(frozen=True)
class SubgraphFlags:
    full: bool
    cohereditary: bool
    colorful: bool

    @property
    def all_true(self) -> bool:
        return self.full and self.cohereditary and self.colorful


@dataclass(frozen=True)
class MaximalAnchor:
    """A maximal sink or maximal cycle together with its predecessor count."""

    kind: str  # "sink" or "cycle"
    anchor: str | Cycle
    predecessor_count: int

    @property
    def anchor_vertex(self) -> str:
        return self.anchor if isinstance(self.anchor, str) else self.anchor.anchor


_DIGRAPH_KEYS = {"vertices", "arrows", "separation"}
_ARROW_KEYS = {"id", "src", "tgt"}


class Digraph:
    """A finite digraph with a separation of its arrows.

    Vertices and arrows keep their insertion order; that order drives every
    deterministic iteration in the package.
    """

    def __init__(self, vertices, arrows, separation=None):
        vs: list[str] = []
        seen: set[str] = set()
        for v in vertices:
            v = str(v)
            if v in seen:
                raise InvalidDigraphError(f"duplicate id {v!r}")
            seen.add(v)
            vs.append(v)
        ars: list[Arrow] = []
        for a in arrows:
            if isinstance(a, Arrow):
                aid, src, tgt = a.id, a.src, a.tgt
            else:
                aid, src, tgt = a
            if aid in seen:
                raise InvalidDigraphError(f"duplicate id {aid!r}")
            seen.add(aid)
            if src not in vs or tgt not in vs:
                raise InvalidDigraphError(f"arrow {aid!r} references a missing vertex")
            ars.append(Arrow(aid, src, tgt))
        self.vertices: tuple[str, ...] = tuple(vs)
        self.arrows: tuple[Arrow, ...] = tuple(ars)
        self._arrow_by_id = {a.id: a for a in self.arrows}
        self._out: dict[str, tuple[Arrow, ...]] = {v: () for v in vs}
        self._in: dict[str, tuple[Arrow, ...]] = {v: () for v in vs}
        for a in self.arrows:
            self._out[a.src] += (a,)
            self._in[a.tgt] += (a,)

        if separation is None:
            parts = [tuple(a.id for a in self._out[v]) for v in vs if self._out[v]]
        else:
            order = {a.id: i for i, a in enumerate(self.arrows)}
            parts = []
            assigned: set[str] = set()
            for raw in separation:
                part = tuple(str(x) for x in raw)
                if not part:
                    raise InvalidDigraphError("separation parts must be nonempty")
                for aid in part:
                    if aid not in self._arrow_by_id:
                        raise InvalidDigraphError(f"separation names unknown arrow {aid!r}")
                    if aid in assigned:
                        raise InvalidDigraphError(f"arrow {aid!r} appears in two parts")
                    assigned.add(aid)
                srcs = {self._arrow_by_id[aid].src for aid in part}
                if len(srcs) > 1:
                    raise InvalidDigraphError(
                        f"separation part {part!r} mixes sources {sorted(srcs)}"
                    )
                parts.append(tuple(sorted(part, key=order.__getitem__)))
            missing = [a.id for a in self.arrows if a.id not in assigned]
            if missing:
                raise InvalidDigraphError(f"arrows missing from separation: {missing}")
        self.separation: tuple[tuple[str, ...], ...] = tuple(parts)
        self._part_of = {
            aid: i for i, part in enumerate(self.separation) for aid in part
        }

    # -- basic accessors ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return (self.vertices, self.arrows, self.separation) == (
            other.vertices,
            other.arrows,
            other.separation,
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.arrows, self.separation))

    def __repr__(self) -> str:
        return f"Digraph({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    def arrow(self, aid: str) -> Arrow:
        try:
            return self._arrow_by_id[aid]
        except KeyError:
            raise UnknownIdError(f"unknown arrow {aid!r}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._out

    def has_arrow(self, aid: str) -> bool:
        return aid in self._arrow_by_id

    def out_arrows(self, v: str) -> tuple[Arrow, ...]:
        try:
            return self._out[v]
        except KeyError:
            raise UnknownIdError(f"unknown vertex {v!r}") from None

    def in_arrows(self, v: str) -> tuple[Arrow, ...]:
        try:
            return self._in[v]
        except KeyError:
            raise UnknownIdError(f"unknown vertex {v!r}") from None

    def part_source(self, part: tuple[str, ...]) -> str:
        return self._arrow_by_id[part[0]].src

    def part_of(self, aid: str) -> tuple[str, ...]:
        self.arrow(aid)
        return self.separation[self._part_of[aid]]

    @property
    def is_separated(self) -> bool:
        """True when some vertex's arrows are split into more than one part."""
        sources = [self.part_source(p) for p in self.separation]
        return len(sources) != len(set(sources))

    # -- serialization -----------------------------------------------------

    @classmethod
    def from_dict(cls, d: dict) -> "Digraph":
        if not isinstance(d, dict):
            raise InvalidDigraphError("digraph description must be a JSON object")
        unknown = set(d) - _DIGRAPH_KEYS
        if unknown:
            raise InvalidDigraphError(f"unknown keys in digraph description: {sorted(unknown)}")
        try:
            vertices = d["vertices"]
            raw_arrows = d["arrows"]
        except KeyError as e:
            raise InvalidDigraphError(f"missing key {e.args[0]!r}") from None
        arrows = []
        for a in raw_arrows:
            if not isinstance(a, dict) or set(a) != _ARROW_KEYS:
                raise InvalidDigraphError(f"arrow records need exactly keys {sorted(_ARROW_KEYS)}")
            arrows.append((a["id"], a["src"], a["tgt"]))
        return cls(vertices, arrows, d.get("separation"))

    @classmethod
    def from_json(cls, text: str) -> "Digraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InvalidDigraphError(f"invalid JSON: {e}") from None
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"id": a.id, "src": a.src, "tgt": a.tgt} for a in self.arrows],
            "separation": [list(p) for p in self.separation],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    # -- paths and cycles ----------------------------------------------------

    def make_path(self, start: str, arrow_ids=()) -> Path:
        if start not in self._out:
            raise UnknownIdError(f"unknown vertex {start!r}")
        at = start
        for aid in arrow_ids:
            a = self.arrow(aid)
            if a.src != at:
                raise DomainError(f"arrow {aid!r} does not compose at {at!r}")
            at = a.tgt
        return Path(start, tuple(arrow_ids))

    def path_target(self, p: Path) -> str:
        return self._arrow_by_id[p.arrows[-1]].tgt if p.arrows else p.start

    def make_cycle(self, arrow_ids) -> Cycle:
        ids = tuple(arrow_ids)
        if not ids:
            raise DomainError("a cycle needs at least one arrow")
        arrows = [self.arrow(aid) for aid in ids]
        for a, b in zip(arrows, arrows[1:]):
            if a.tgt != b.src:
                raise DomainError(f"arrows {a.id!r}, {b.id!r} do not compose")
        if arrows[-1].tgt != arrows[0].src:
            raise DomainError("arrow sequence is not closed")
        sources = [a.src for a in arrows]
        if len(set(sources)) != len(sources):
            raise DomainError("cycle visits a vertex twice")
        k = sources.index(min(sources))
        rotated = ids[k:] + ids[:k]
        return Cycle(rotated, sources[k])

    def cycle_vertices(self, c: Cycle) -> tuple[str, ...]:
        return tuple(self.arrow(aid).src for aid in c.arrows)

    def sinks(self) -> set[str]:
        return {v for v in self.vertices if not self._out[v]}

    def sources(self) -> set[str]:
        return {v for v in self.vertices if not self._in[v]}

    def cycles(self) -> list[Cycle]:
        """All simple cycles, each once up to rotation.

        Exhaustive DFS with on-stack pruning, rooted at each vertex in
        insertion order and restricted to later vertices so every cycle is
        discovered exactly once (at its earliest vertex).  Output size is
        worst-case exponential in the digraph size.
        """
        index = {v: i for i, v in enumerate(self.vertices)}
        found: list[Cycle] = []

        def dfs(root: str, at: str, trail: list[str], onstack: set[str]):
            for a in self._out[at]:
                if index[a.tgt] < index[root]:
                    continue
                if a.tgt == root:
                    found.append(self.make_cycle(trail + [a.id]))
                elif a.tgt not in onstack:
                    onstack.add(a.tgt)
                    trail.append(a.id)
                    dfs(root, a.tgt, trail, onstack)
                    trail.pop()
                    onstack.remove(a.tgt)

        for root in self.vertices:
            dfs(root, root, [], {root})
        return found

    def exits(self, c: Cycle) -> set[str]:
        """Arrows leaving a vertex of the cycle without belonging to it."""
        self._check_cycle(c)
        on_cycle = set(c.arrows)
        return {
            a.id
            for v in self.cycle_vertices(c)
            for a in self._out[v]
            if a.id not in on_cycle
        }

    def _check_cycle(self, c: Cycle):
        if self.make_cycle(c.arrows) != c:
            raise DomainError(f"{c} is not a canonical cycle of this digraph")

    # -- reachability --------------------------------------------------------

    def predecessors(self, v: str) -> set[str]:
        """All vertices with a path to v (including v itself)."""
        if v not in self._out:
            raise UnknownIdError(f"unknown vertex {v!r}")
        seen = {v}
        frontier = [v]
        while frontier:
            u = frontier.pop()
            for a in self._in[u]:
                if a.src not in seen:
                    seen.add(a.src)
                    frontier.append(a.src)
        return seen

    def _reachable_from(self, starts) -> set[str]:
        seen = set(starts)
        frontier = list(starts)
        while frontier:
            u = frontier.pop()
            for a in self._out[u]:
                if a.tgt not in seen:
                    seen.add(a.tgt)
                    frontier.append(a.tgt)
        return seen

    def _anchor_vertices(self, x) -> set[str]:
        if isinstance(x, Cycle):
            self._check_cycle(x)
            return set(self.cycle_vertices(x))
        if isinstance(x, str):
            if x not in self._out:
                raise UnknownIdError(f"unknown vertex {x!r}")
            if self._out[x]:
                raise DomainError(f"vertex {x!r} is not a sink")
            return {x}
        raise DomainError("expected a sink vertex id or a Cycle")

    def connects_to(self, a, b) -> bool:
        """Whether a path runs from the sink/cycle a to the sink/cycle b."""
        va, vb = self._anchor_vertices(a), self._anchor_vertices(b)
        return bool(self._reachable_from(va) & vb)

    def maximal_sinks_and_cycles(self) -> list[MaximalAnchor]:
        """Maximal sinks (no cycle reaches them) and maximal cycles (no other
        cycle reaches them), with the size of their predecessor sets."""
        cycles = self.cycles()
        out: list[MaximalAnchor] = []
        for w in self.vertices:
            if self._out[w]:
                continue
            if any(self.connects_to(c, w) for c in cycles):
                continue
            out.append(MaximalAnchor("sink", w, len(self.predecessors(w))))
        for c in cycles:
            if any(other != c and self.connects_to(other, c) for other in cycles):
                continue
            out.append(MaximalAnchor("cycle", c, len(self.predecessors(c.anchor))))
        return out

    # -- subgraphs -----------------------------------------------------------

    def subgraph_flags(self, vs, es) -> SubgraphFlags:
        """Recompute the full / cohereditary / colorful flags of a subgraph."""
        vset, eset = set(vs), set(es)
        for v in vset:
            if v not in self._out:
                raise UnknownIdError(f"unknown vertex {v!r}")
        for aid in eset:
            a = self.arrow(aid)
            if a.src not in vset or a.tgt not in vset:
                raise DomainError(f"({sorted(vset)}, {sorted(eset)}) is not a subgraph")
        induced = {a.id for a in self.arrows if a.src in vset and a.tgt in vset}
        full = eset == induced
        cohereditary = all(a.src in vset for a in self.arrows if a.tgt in vset)
        colorful = all(
            bool(set(part) & eset)
            for part in self.separation
            if self.part_source(part) in vset
        )
        return SubgraphFlags(full, cohereditary, colorful)

    def induced_subgraph(self, vs) -> "Digraph":
        """Full subgraph on the given vertices, with the inherited separation."""
        vset = set(vs)
        for v in vset:
            if v not in self._out:
                raise UnknownIdError(f"unknown vertex {v!r}")
        verts = [v for v in self.vertices if v in vset]
        arrows = [a for a in self.arrows if a.src in vset and a.tgt in vset]
        kept = {a.id for a in arrows}
        parts = [
            [aid for aid in part if aid in kept]
            for part in self.separation
        ]
        parts = [p for p in parts if p]
        return Digraph(verts, arrows, parts)
