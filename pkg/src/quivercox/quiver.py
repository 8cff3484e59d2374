"""Quivers with relations, path enumeration, tensor products and the DSL.

Paths compose left to right: ``("x1", "w2")`` means first ``x1`` and then
``w2``, so the target of each arrow is the source of the next.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence, Union

from .errors import (
    CyclicQuiver,
    DSLSyntaxError,
    DuplicateName,
    InputError,
    MissingDegree,
    NonAdmissibleRelation,
    NonComposablePath,
    NonParallelRelation,
    ShapeMismatch,
    UnknownArrow,
    UnknownVertex,
)

IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_.']*\Z")


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Path:
    """A path given by its arrows; the empty path sits at ``basepoint``."""

    arrows: tuple[Arrow, ...]
    basepoint: Optional[int] = None

    def __post_init__(self):
        for a, b in zip(self.arrows, self.arrows[1:]):
            if a.target != b.source:
                raise NonComposablePath(f"{a.name} ends at {a.target} but {b.name} starts at {b.source}")
        if not self.arrows and self.basepoint is None:
            raise ValueError("a trivial path needs a basepoint")

    @property
    def source(self) -> int:
        return self.arrows[0].source if self.arrows else self.basepoint

    @property
    def target(self) -> int:
        return self.arrows[-1].target if self.arrows else self.basepoint

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.arrows)

    def __len__(self) -> int:
        return len(self.arrows)

    def __str__(self) -> str:
        return " ".join(self.names) if self.arrows else f"e{self.basepoint}"


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths of length at least two."""

    terms: tuple[tuple[Fraction, Path], ...]

    def __post_init__(self):
        if not self.terms:
            raise NonAdmissibleRelation("a relation needs at least one term")
        ends = {(p.source, p.target) for _, p in self.terms}
        if len(ends) != 1:
            raise NonParallelRelation(
                "relation paths are not parallel: " + ", ".join(str(p) for _, p in self.terms)
            )
        for c, p in self.terms:
            if c == 0:
                raise NonAdmissibleRelation("relation coefficients must be nonzero")
            if len(p) < 2:
                raise NonAdmissibleRelation(f"path '{p}' has length {len(p)} < 2")

    @property
    def source(self) -> int:
        return self.terms[0][1].source

    @property
    def target(self) -> int:
        return self.terms[0][1].target


@dataclass(frozen=True)
class BoundQuiver:
    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[Relation, ...] = ()

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise DuplicateName("duplicate vertex id")
        if any(v < 1 for v in self.vertices):
            raise UnknownVertex("vertex ids must be positive integers")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise DuplicateName("duplicate arrow name")
        vs = set(self.vertices)
        for a in self.arrows:
            for v in (a.source, a.target):
                if v not in vs:
                    raise UnknownVertex(f"arrow {a.name} refers to unknown vertex {v}")
        known = set(self.arrows)
        for rel in self.relations:
            for _, p in rel.terms:
                for a in p.arrows:
                    if a not in known:
                        raise UnknownArrow(f"relation uses unknown arrow {a.name}")

    @cached_property
    def arrow_by_name(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def index(self) -> dict[int, int]:
        """Vertex id -> 0-based position in ``vertices``."""
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _outgoing(self) -> dict[int, list[Arrow]]:
        out: dict[int, list[Arrow]] = {v: [] for v in self.vertices}
        for a in sorted(self.arrows, key=lambda a: a.name):
            out[a.source].append(a)
        return out

    def out_arrows(self, v: int) -> list[Arrow]:
        return self._outgoing[v]


@dataclass(frozen=True)
class AlgebraSpec:
    """An algebra given by a bound quiver or by an explicit Cartan matrix."""

    degree_n: int
    quiver: Optional[BoundQuiver] = None
    cartan: Optional[tuple[tuple[int, ...], ...]] = None
    name: Optional[str] = None

    def __post_init__(self):
        if self.degree_n < 1:
            raise MissingDegree("degree n must be a positive integer")
        if (self.quiver is None) == (self.cartan is None):
            raise InputError("exactly one of quiver and cartan must be given")
        if self.cartan is not None and any(len(r) != len(self.cartan) for r in self.cartan):
            raise ShapeMismatch("explicit Cartan matrix must be square")


def is_acyclic(q: BoundQuiver) -> bool:
    return _topological_order(q) is not None


def _topological_order(q: BoundQuiver) -> Optional[list[int]]:
    indeg = {v: 0 for v in q.vertices}
    for a in q.arrows:
        indeg[a.target] += 1
    ready = sorted(v for v, d in indeg.items() if d == 0)
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for a in q.arrows:
            if a.source == v:
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    ready.append(a.target)
    return order if len(order) == len(q.vertices) else None


def enumerate_paths(q: BoundQuiver, start: int, end: int) -> list[Path]:
    """All paths from ``start`` to ``end`` in lexicographic order of arrow names."""
    if not is_acyclic(q):
        raise CyclicQuiver("path enumeration needs an acyclic quiver")
    for v in (start, end):
        if v not in q.index:
            raise UnknownVertex(f"unknown vertex {v}")
    return [
        Path(arrows, basepoint=start if not arrows else None)
        for arrows in _paths_from(q, start, end)
    ]


def _paths_from(q: BoundQuiver, start: int, end: int) -> list[tuple[Arrow, ...]]:
    memo: dict[int, list[tuple[Arrow, ...]]] = {}

    def walk(v: int) -> list[tuple[Arrow, ...]]:
        if v not in memo:
            # the trivial path sorts before every nonempty one
            out: list[tuple[Arrow, ...]] = [()] if v == end else []
            for a in q.out_arrows(v):
                out.extend((a,) + rest for rest in walk(a.target))
            memo[v] = out
        return memo[v]

    return walk(start)


def all_paths(q: BoundQuiver) -> dict[tuple[int, int], list[Path]]:
    return {(s, t): enumerate_paths(q, s, t) for s in q.vertices for t in q.vertices}


# -- tensor products ---------------------------------------------------------


def tensor_vertex(a: BoundQuiver, b: BoundQuiver, va: int, vb: int) -> int:
    """Vertex id in ``tensor_quiver(a, b)`` of the pair ``(va, vb)``.

    Ids run through copies of ``a`` indexed by the vertices of ``b``.
    """
    return b.index[vb] * len(a.vertices) + a.index[va] + 1


def tensor_quiver(a: BoundQuiver, b: BoundQuiver) -> BoundQuiver:
    if not (is_acyclic(a) and is_acyclic(b)):
        raise CyclicQuiver("tensor product needs acyclic factors")

    def left(alpha: Arrow, vb: int) -> Arrow:
        return Arrow(f"{alpha.name}.{vb}", tensor_vertex(a, b, alpha.source, vb), tensor_vertex(a, b, alpha.target, vb))

    def right(va: int, beta: Arrow) -> Arrow:
        return Arrow(f"{beta.name}.v{va}", tensor_vertex(a, b, va, beta.source), tensor_vertex(a, b, va, beta.target))

    vertices = tuple(range(1, len(a.vertices) * len(b.vertices) + 1))
    arrows = [left(alpha, vb) for vb in b.vertices for alpha in a.arrows]
    arrows += [right(va, beta) for beta in b.arrows for va in a.vertices]

    relations = []
    for vb in b.vertices:
        for rel in a.relations:
            relations.append(Relation(tuple(
                (c, Path(tuple(left(x, vb) for x in p.arrows))) for c, p in rel.terms
            )))
    for va in a.vertices:
        for rel in b.relations:
            relations.append(Relation(tuple(
                (c, Path(tuple(right(va, y) for y in p.arrows))) for c, p in rel.terms
            )))
    for alpha in a.arrows:
        for beta in b.arrows:
            # (s,u) -> (t,u) -> (t,v)  equals  (s,u) -> (s,v) -> (t,v)
            relations.append(Relation((
                (Fraction(1), Path((left(alpha, beta.source), right(alpha.target, beta)))),
                (Fraction(-1), Path((right(alpha.source, beta), left(alpha, beta.target)))),
            )))
    return BoundQuiver(vertices, tuple(arrows), tuple(relations))


# -- DSL ---------------------------------------------------------------------

_RATIONAL = re.compile(r"\d+(?:/\d+)?\Z")


def parse_spec(text: str) -> AlgebraSpec:
    """Parse DSL source into an :class:`AlgebraSpec`.

    Every failure surfaces as an :class:`~quivercox.errors.InputError`.
    """
    try:
        return _Parser(text).run()
    except InputError:
        raise
    except RecursionError as exc:
        raise DSLSyntaxError(f"input too deeply nested: {exc}", 1) from None
    except (ValueError, TypeError, OverflowError, ZeroDivisionError) as exc:
        raise DSLSyntaxError(str(exc), 1) from None


def _strip_comment(line: str) -> str:
    in_string = escaped = False
    for k, ch in enumerate(line):
        if in_string:
            if escaped:
                escaped = False
            elif ch == "\\":
                escaped = True
            elif ch == '"':
                in_string = False
        elif ch == '"':
            in_string = True
        elif ch == "#":
            return line[:k]
    return line


class _Parser:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.vertices: list[int] = []
        self.arrows: dict[str, Arrow] = {}
        self.raw_relations: list[tuple[int, list[tuple[Fraction, list[str], int]]]] = []
        self.degree: Optional[int] = None
        self.name: Optional[str] = None
        self.cartan: Optional[list[list[int]]] = None
        self.has_quiver = False

    def run(self) -> AlgebraSpec:
        i = 0
        while i < len(self.lines):
            lineno = i + 1
            line = _strip_comment(self.lines[i])
            stripped = line.strip()
            i += 1
            if not stripped:
                continue
            col = len(line) - len(line.lstrip()) + 1
            keyword, _, rest = stripped.partition(" ")
            rest = rest.strip()
            if keyword == "vertices":
                self._vertices(rest, lineno, col)
            elif keyword == "arrow":
                self._arrow(rest, lineno, col)
            elif keyword == "relation":
                self._relation(rest, lineno, col)
            elif keyword == "n":
                self._degree(rest, lineno, col)
            elif keyword == "name":
                self._name(rest, lineno, col)
            elif keyword.startswith("cartan"):
                body = stripped[len("cartan"):]
                # a matrix may continue over several lines until brackets balance
                while body.count("[") > body.count("]") and i < len(self.lines):
                    body += " " + _strip_comment(self.lines[i])
                    i += 1
                self._cartan(body, lineno, col)
            else:
                raise DSLSyntaxError(f"unknown statement '{keyword}'", lineno, col)
        return self._build()

    def _vertices(self, rest: str, lineno: int, col: int) -> None:
        self.has_quiver = True
        for tok in rest.split():
            if not tok.isdigit() or int(tok) < 1:
                raise DSLSyntaxError(f"vertex id must be a positive integer, got '{tok}'", lineno, col)
            v = int(tok)
            if v in self.vertices:
                raise DuplicateName(f"line {lineno}: vertex {v} declared twice")
            self.vertices.append(v)

    def _arrow(self, rest: str, lineno: int, col: int) -> None:
        self.has_quiver = True
        m = re.fullmatch(r"(\S+)\s*:\s*(\S+)\s*->\s*(\S+)", rest)
        if not m:
            raise DSLSyntaxError("expected 'arrow <name> : <src> -> <tgt>'", lineno, col)
        name, src, tgt = m.groups()
        if not IDENT.match(name):
            raise DSLSyntaxError(f"invalid arrow name '{name}'", lineno, col)
        if name in self.arrows:
            raise DuplicateName(f"line {lineno}: arrow '{name}' declared twice")
        ends = []
        for tok in (src, tgt):
            if not tok.isdigit():
                raise DSLSyntaxError(f"vertex id must be a positive integer, got '{tok}'", lineno, col)
            if int(tok) not in self.vertices:
                raise UnknownVertex(f"line {lineno}: arrow '{name}' uses undeclared vertex {tok}")
            ends.append(int(tok))
        self.arrows[name] = Arrow(name, ends[0], ends[1])

    def _relation(self, rest: str, lineno: int, col: int) -> None:
        self.has_quiver = True
        tokens = rest.split()
        terms: list[tuple[Fraction, list[str], int]] = []
        k = 0
        while k < len(tokens):
            sign = 1
            if tokens[k] in ("+", "-"):
                sign = -1 if tokens[k] == "-" else 1
                k += 1
            elif terms:
                raise DSLSyntaxError(f"expected '+' or '-' before '{tokens[k]}'", lineno, col)
            coeff = Fraction(1)
            if k < len(tokens) and _RATIONAL.match(tokens[k]):
                coeff = Fraction(tokens[k])
                k += 1
            names = []
            while k < len(tokens) and IDENT.match(tokens[k]):
                names.append(tokens[k])
                k += 1
            if not names:
                found = tokens[k] if k < len(tokens) else "end of line"
                raise DSLSyntaxError(f"expected an arrow name, found '{found}'", lineno, col)
            terms.append((sign * coeff, names, lineno))
        if not terms:
            raise DSLSyntaxError("empty relation", lineno, col)
        self.raw_relations.append((lineno, terms))

    def _degree(self, rest: str, lineno: int, col: int) -> None:
        if not rest.isdigit() or int(rest) < 1:
            raise MissingDegree(f"line {lineno}: 'n' needs a positive integer")
        if self.degree is not None:
            raise DuplicateName(f"line {lineno}: degree given twice")
        self.degree = int(rest)

    def _name(self, rest: str, lineno: int, col: int) -> None:
        try:
            value = json.loads(rest)
        except json.JSONDecodeError:
            value = None
        if not isinstance(value, str):
            raise DSLSyntaxError('expected name "<string>"', lineno, col)
        self.name = value

    def _cartan(self, body: str, lineno: int, col: int) -> None:
        if self.cartan is not None:
            raise DuplicateName(f"line {lineno}: Cartan matrix given twice")
        try:
            value = json.loads(body)
        except json.JSONDecodeError as exc:
            raise DSLSyntaxError(f"malformed matrix: {exc.msg}", lineno, col) from None
        if (
            not isinstance(value, list)
            or not value
            or not all(isinstance(r, list) and len(r) == len(value) for r in value)
            or not all(type(x) is int for r in value for x in r)
        ):
            raise DSLSyntaxError("Cartan matrix must be a nonempty square array of integers", lineno, col)
        self.cartan = value

    def _build(self) -> AlgebraSpec:
        if self.degree is None:
            raise MissingDegree("missing 'n <positive integer>' statement")
        if self.cartan is not None:
            if self.has_quiver:
                raise DSLSyntaxError("'cartan' cannot be combined with quiver statements", 1)
            return AlgebraSpec(self.degree, cartan=tuple(tuple(r) for r in self.cartan), name=self.name)
        if not self.vertices:
            raise DSLSyntaxError("no vertices declared", 1)
        relations = []
        for lineno, terms in self.raw_relations:
            merged: dict[tuple[str, ...], Fraction] = {}
            paths: dict[tuple[str, ...], Path] = {}
            for c, names, _ in terms:
                arrows = []
                for nm in names:
                    if nm not in self.arrows:
                        raise UnknownArrow(f"line {lineno}: unknown arrow '{nm}'")
                    arrows.append(self.arrows[nm])
                try:
                    p = Path(tuple(arrows))
                except NonComposablePath as exc:
                    raise NonComposablePath(f"line {lineno}: {exc}") from None
                key = p.names
                paths[key] = p
                merged[key] = merged.get(key, Fraction(0)) + c
            kept = tuple((c, paths[k]) for k, c in merged.items() if c != 0)
            if not kept:
                raise NonAdmissibleRelation(f"line {lineno}: relation cancels to zero")
            try:
                relations.append(Relation(kept))
            except (NonParallelRelation, NonAdmissibleRelation) as exc:
                raise type(exc)(f"line {lineno}: {exc}") from None
        q = BoundQuiver(tuple(self.vertices), tuple(self.arrows.values()), tuple(relations))
        return AlgebraSpec(self.degree, quiver=q, name=self.name)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_relation(rel: Relation) -> str:
    parts = []
    for k, (c, p) in enumerate(rel.terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = p.__str__() if mag == 1 else f"{_format_coeff(mag)} {p}"
        if k == 0:
            parts.append(body if sign == "+" else f"- {body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def format_spec(spec: AlgebraSpec) -> str:
    """Render a spec as DSL text; ``parse_spec(format_spec(s)) == s``."""
    lines = []
    if spec.name is not None:
        lines.append(f"name {json.dumps(spec.name)}")
    if spec.cartan is not None:
        lines.append("cartan " + json.dumps([list(r) for r in spec.cartan]))
    else:
        q = spec.quiver
        lines.append("vertices " + " ".join(map(str, q.vertices)))
        for a in q.arrows:
            lines.append(f"arrow {a.name} : {a.source} -> {a.target}")
        for rel in q.relations:
            lines.append("relation " + format_relation(rel))
    lines.append(f"n {spec.degree_n}")
    return "\n".join(lines) + "\n"


def quiver_from_edges(
    vertices: Sequence[int],
    arrows: Sequence[tuple[str, int, int]],
    relations: Sequence[Sequence[tuple[Union[int, Fraction], Sequence[str]]]] = (),
) -> BoundQuiver:
    """Convenience constructor: arrows as ``(name, src, tgt)``, relations as
    lists of ``(coefficient, arrow names)``."""
    arrs = tuple(Arrow(n, s, t) for n, s, t in arrows)
    by_name = {a.name: a for a in arrs}
    rels = []
    for rel in relations:
        terms = []
        for c, names in rel:
            try:
                terms.append((Fraction(c), Path(tuple(by_name[n] for n in names))))
            except KeyError as exc:
                raise UnknownArrow(f"unknown arrow {exc.args[0]}") from None
        rels.append(Relation(tuple(terms)))
    return BoundQuiver(tuple(vertices), arrs, tuple(rels))
