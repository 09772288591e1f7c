"""Exact arithmetic in the Leavitt path algebra of a finite digraph.

Elements are rational linear combinations of monomials ``p q*`` (a path
followed by a reversed dual path with the same target).  The vertex relations,
the path relations and ``e* f = delta t(e)`` are applied during
multiplication; the remaining relation ``s(X) = sum_{e in X} e e*`` is used as
a rewriting rule that eliminates the lexicographically smallest arrow of each
part, yielding the standard irreducible spanning set

    { p q* : p, q do not both end with the special arrow of a common part }.

This spanning set only works when every vertex's outgoing arrows lie in a
single separation part (the default partition); for genuinely separated
digraphs products such as ``e* f`` with e, f in different parts at one vertex
are irreducible and the algebra constructor refuses the input.

Everything here is immutable and exact: coefficients are ``fractions.Fraction``
and no floating point appears anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .digraph import Digraph, Path
from .errors import DomainError, ExprSyntaxError, SeparationError, UnknownIdError


@dataclass(frozen=True)
class Monomial:
    """A spanning monomial ``left . right*`` with matching targets.

    A vertex v is the monomial whose two paths are both trivial at v.
    """

    left: Path
    right: Path

    def sort_key(self):
        return (
            len(self.left) + len(self.right),
            self.left.arrows,
            self.right.arrows,
            self.left.start,
            self.right.start,
        )


@dataclass(frozen=True)
class Grade:
    """Degree data of a homogeneous element.

    ``word`` is the reduced word over arrows and formal inverses (the
    universal free-group grading); ``degree`` is its exponent sum, which is
    the integer grading length(p) - length(q).
    """

    degree: int
    word: tuple[tuple[str, int], ...]


def reduce_word(letters) -> tuple[tuple[str, int], ...]:
    """Freely reduce a word given as (arrow id, +1/-1) letters."""
    out: list[tuple[str, int]] = []
    for g, s in letters:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


def _monomial_word(m: Monomial) -> tuple[tuple[str, int], ...]:
    letters = [(a, 1) for a in m.left.arrows]
    letters += [(a, -1) for a in reversed(m.right.arrows)]
    return reduce_word(letters)


class Element:
    """An algebra element held in normal form.

    Supports ``+``, ``-``, ``*`` (with elements or rational scalars), the
    involution :meth:`star`, and grading queries.  The zero element is the
    empty combination.
    """

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: "LeavittAlgebra", terms: dict[Monomial, Fraction]):
        self.algebra = algebra
        self._terms = terms

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Term list sorted by (total length, left arrows, right arrows)."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return (
                self.algebra.digraph == other.algebra.digraph
                and self._terms == other._terms
            )
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if other == 0:
            return self
        self._check_compatible(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, Fraction(0)) + c
        return Element(self.algebra, {m: c for m, c in acc.items() if c})

    __radd__ = __add__

    def __neg__(self):
        return Element(self.algebra, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if other == 0:
            return self
        return self + (-other)

    def __rsub__(self, other):
        if other == 0:
            return -self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.algebra.zero()
            return Element(self.algebra, {m: c * other for m, c in self._terms.items()})
        self._check_compatible(other)
        alg = self.algebra
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                raw = alg._mul_monomials(m1, m2)
                if raw is None:
                    continue
                alg._normalize_into(acc, raw, c1 * c2)
        return Element(alg, {m: c for m, c in acc.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def star(self) -> "Element":
        """The involution: linear extension of (p q*)* = q p*."""
        return Element(
            self.algebra,
            {Monomial(m.right, m.left): c for m, c in self._terms.items()},
        )

    def grade(self) -> Grade | None:
        """Common grade of all terms, or None when inhomogeneous.

        Homogeneity is judged in the universal free-group grading; the zero
        element reports the trivial grade.
        """
        if not self._terms:
            return Grade(0, ())
        words = {_monomial_word(m) for m in self._terms}
        if len(words) != 1:
            return None
        m = next(iter(self._terms))
        return Grade(len(m.left) - len(m.right), words.pop())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for i, (m, c) in enumerate(self.terms()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = self.algebra._monomial_str(m)
            term = body if mag == 1 else f"{mag} {body}"
            if i == 0:
                chunks.append(term if c > 0 else f"-{term}")
            else:
                chunks.append(f"{sign} {term}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"<Element {self}>"

    def _check_compatible(self, other):
        if not isinstance(other, Element):
            raise DomainError(f"cannot combine an Element with {type(other).__name__}")
        if self.algebra.digraph != other.algebra.digraph:
            raise DomainError("elements live over different digraphs")


_TOKEN = re.compile(r"(?P<num>\d+)|(?P<id>[A-Za-z_]\w*)|(?P<sym>[+\-/^])|(?P<bad>\S)")


class LeavittAlgebra:
    """Arithmetic context for the Leavitt path algebra of one digraph.

    Raises :class:`SeparationError` when some vertex hosts more than one
    separation part; the monomial normal form used here spans the algebra only
    for the default partition.
    """

    def __init__(self, digraph: Digraph):
        if digraph.is_separated:
            raise SeparationError(
                "element arithmetic needs the default separation (one part per vertex); "
                "p q* monomials do not span the algebra otherwise"
            )
        self.digraph = digraph
        # special arrow of each part: the rewriting eliminates gamma gamma*
        self._special = {part: min(part) for part in digraph.separation}
        self._special_arrows = set(self._special.values())

    # -- constructors --------------------------------------------------------

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        """The identity: the sum of all vertex idempotents."""
        g = self.digraph
        return Element(
            self,
            {Monomial(Path(v), Path(v)): Fraction(1) for v in g.vertices},
        )

    def vertex(self, v: str) -> Element:
        if not self.digraph.has_vertex(v):
            raise UnknownIdError(f"unknown vertex {v!r}")
        return Element(self, {Monomial(Path(v), Path(v)): Fraction(1)})

    def arrow(self, e: str) -> Element:
        a = self.digraph.arrow(e)
        m = Monomial(Path(a.src, (e,)), Path(a.tgt))
        return Element(self, {m: Fraction(1)})

    def dual(self, e: str) -> Element:
        a = self.digraph.arrow(e)
        m = Monomial(Path(a.tgt), Path(a.src, (e,)))
        return Element(self, {m: Fraction(1)})

    def generator(self, ident: str, dual: bool = False) -> Element:
        """The generator v, e, or e* named by ``ident``."""
        if self.digraph.has_vertex(ident):
            if dual:
                raise DomainError("the dual marker applies to arrows only")
            return self.vertex(ident)
        return self.dual(ident) if dual else self.arrow(ident)

    def monomial(self, left: Path, right: Path) -> Monomial:
        """Validated raw monomial (not necessarily in normal form)."""
        g = self.digraph
        g.make_path(left.start, left.arrows)
        g.make_path(right.start, right.arrows)
        if g.path_target(left) != g.path_target(right):
            raise DomainError("monomial paths must share their target")
        return Monomial(left, right)

    def element(self, terms) -> Element:
        """Normalize a formal combination {monomial: coefficient}."""
        acc: dict[Monomial, Fraction] = {}
        for m, c in dict(terms).items():
            m = self.monomial(m.left, m.right)
            self._normalize_into(acc, m, Fraction(c))
        return Element(self, {m: c for m, c in acc.items() if c})

    # -- normal form ---------------------------------------------------------

    def _redex(self, m: Monomial):
        la, ra = m.left.arrows, m.right.arrows
        if la and ra and la[-1] == ra[-1] and la[-1] in self._special_arrows:
            return la[-1]
        return None

    def _normalize_into(self, acc: dict[Monomial, Fraction], m: Monomial, coeff: Fraction):
        """Rewrite m to normal form, accumulating coefficients into acc.

        One step replaces p gamma gamma* q* by p q* - sum of p e e* q* over the
        other arrows e of gamma's part; the new long monomials are already
        irreducible, so only the shortened one recurses and the loop
        terminates.
        """
        g = self.digraph
        stack = [(m, coeff)]
        while stack:
            mono, c = stack.pop()
            gamma = self._redex(mono)
            if gamma is None:
                acc[mono] = acc.get(mono, Fraction(0)) + c
                continue
            part = g.part_of(gamma)
            p_short = Path(mono.left.start, mono.left.arrows[:-1])
            q_short = Path(mono.right.start, mono.right.arrows[:-1])
            stack.append((Monomial(p_short, q_short), c))
            for e in part:
                if e == gamma:
                    continue
                stack.append(
                    (
                        Monomial(
                            Path(p_short.start, p_short.arrows + (e,)),
                            Path(q_short.start, q_short.arrows + (e,)),
                        ),
                        -c,
                    )
                )

    def _mul_monomials(self, m1: Monomial, m2: Monomial) -> Monomial | None:
        """Raw product (p q*)(r s*): nonzero only when q and r are nested."""
        q, r = m1.right, m2.left
        if q.start != r.start:
            return None
        qa, ra = q.arrows, r.arrows
        if len(qa) <= len(ra) and ra[: len(qa)] == qa:
            rest = ra[len(qa):]
            return Monomial(Path(m1.left.start, m1.left.arrows + rest), m2.right)
        if qa[: len(ra)] == ra:
            rest = qa[len(ra):]
            return Monomial(m1.left, Path(m2.right.start, m2.right.arrows + rest))
        return None

    # -- text form -------------------------------------------------------------

    def _monomial_str(self, m: Monomial) -> str:
        if not m.left.arrows and not m.right.arrows:
            return m.left.start
        factors = list(m.left.arrows) + [f"{a}^" for a in reversed(m.right.arrows)]
        return " ".join(factors)

    def parse(self, text: str) -> Element:
        """Parse ``term (('+'|'-') term)*`` where a term is an optional
        rational followed by whitespace-separated factors ``ID`` or ``ID^``.

        A bare rational denotes that multiple of the identity.  Ids must start
        with a letter or underscore.  A leading sign is accepted.
        """
        tokens = self._tokenize(text)
        pos = 0

        def peek():
            return tokens[pos] if pos < len(tokens) else ("end", "", len(text))

        def take():
            nonlocal pos
            t = peek()
            pos += 1
            return t

        def parse_rational(first) -> Fraction:
            num = int(first[1])
            if peek()[:2] == ("sym", "/"):
                take()
                kind, val, p = take()
                if kind != "num":
                    raise ExprSyntaxError("expected a denominator", p)
                if int(val) == 0:
                    raise ExprSyntaxError("zero denominator", p)
                return Fraction(num, int(val))
            return Fraction(num)

        def parse_term() -> Element:
            coeff = Fraction(1)
            have_coeff = False
            if peek()[0] == "num":
                coeff = parse_rational(take())
                have_coeff = True
            factors: list[Element] = []
            while peek()[0] == "id":
                _, name, p = take()
                dual = False
                if peek()[:2] == ("sym", "^"):
                    take()
                    dual = True
                if not self.digraph.has_vertex(name) and not self.digraph.has_arrow(name):
                    raise UnknownIdError(f"unknown id {name!r} (at position {p})")
                if dual and self.digraph.has_vertex(name):
                    raise ExprSyntaxError("the dual marker applies to arrows only", p)
                factors.append(self.generator(name, dual=dual))
            if not factors:
                if not have_coeff:
                    kind, val, p = peek()
                    raise ExprSyntaxError(f"expected a term, found {val or 'end of input'!r}", p)
                return self.one() * coeff
            out = factors[0]
            for f in factors[1:]:
                out = out * f
            return out * coeff

        result = self.zero()
        sign = 1
        if peek()[:2] in {("sym", "+"), ("sym", "-")}:
            sign = -1 if take()[1] == "-" else 1
        result = result + parse_term() * sign
        while peek()[0] != "end":
            kind, val, p = take()
            if (kind, val) == ("sym", "+"):
                result = result + parse_term()
            elif (kind, val) == ("sym", "-"):
                result = result - parse_term()
            else:
                raise ExprSyntaxError(f"expected '+' or '-', found {val!r}", p)
        return result

    @staticmethod
    def _tokenize(text: str):
        tokens = []
        for m in _TOKEN.finditer(text):
            if m.lastgroup == "bad":
                raise ExprSyntaxError(f"unexpected character {m.group()!r}", m.start())
            tokens.append((m.lastgroup, m.group(), m.start()))
        return tokens
