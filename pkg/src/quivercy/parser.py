"""Parser for the quiver-with-relations input language.

Line-oriented declarations::

    # comment
    vertex NAME
    arrow NAME : NAME -> NAME
    rel NAME = expr
    potential NAME = expr

where ``expr`` is a signed sum of terms ``[coeff *] path``, a ``path`` is
``NAME ('.' NAME)*`` over declared arrows or the trivial path ``e_NAME``
at a vertex, and ``coeff`` is ``INT`` or ``INT/INT``.  Paths compose left
to right (``x.y`` means ``x`` then ``y``).  Every error carries its line
and column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import PathVector
from .cy import Superpotential
from .quiver import Quiver, QuiverError, PathError
from .relations import RelationError, RelationSet

_TOKEN = re.compile(r"->|[A-Za-z0-9_]+|[:=+\-*./]")
_RESERVED_PREFIX = "e_"


class ParseError(ValueError):
    """Lexical, syntax, or semantic error with a source location."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    text: str
    col: int


@dataclass(frozen=True)
class InputDocument:
    """A parsed quiver, its named relation generators, and an optional
    superpotential."""

    quiver: Quiver
    generators: RelationSet
    potential: tuple[str, Superpotential] | None = None

    def render(self) -> str:
        """Canonical text whose re-parse yields an equal document."""
        lines = [f"vertex {v}" for v in self.quiver.vertices]
        lines += [f"arrow {a.name} : {a.source} -> {a.target}" for a in self.quiver.arrows]
        lines += [f"rel {r.name} = {r.element.render()}" for r in self.generators]
        if self.potential is not None:
            name, pot = self.potential
            lines.append(f"potential {name} = {pot.vector.render()}")
        return "\n".join(lines) + "\n"


def _tokenize(text: str, lineno: int) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch == "#":
            break
        if ch.isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {ch!r}", lineno, pos + 1)
        tokens.append(Token(m.group(), pos + 1))
        pos = m.end()
    return tokens


class _LineParser:
    def __init__(self, tokens: list[Token], lineno: int):
        self.tokens = tokens
        self.lineno = lineno
        self.pos = 0

    def error(self, message: str, col: int | None = None) -> ParseError:
        if col is None:
            col = self.tokens[self.pos].col if self.pos < len(self.tokens) else (
                self.tokens[-1].col + len(self.tokens[-1].text) if self.tokens else 1
            )
        return ParseError(message, self.lineno, col)

    def peek(self) -> str | None:
        return self.tokens[self.pos].text if self.pos < len(self.tokens) else None

    def take(self, expected: str | None = None) -> Token:
        if self.pos >= len(self.tokens):
            raise self.error(f"expected {expected or 'more input'} at end of line")
        tok = self.tokens[self.pos]
        if expected is not None and tok.text != expected:
            raise self.error(f"expected {expected!r}, found {tok.text!r}")
        self.pos += 1
        return tok

    def take_name(self, what: str) -> Token:
        if self.pos >= len(self.tokens):
            raise self.error(f"expected {what} at end of line")
        tok = self.tokens[self.pos]
        if not re.fullmatch(r"[A-Za-z0-9_]+", tok.text):
            raise self.error(f"expected {what}, found {tok.text!r}", tok.col)
        self.pos += 1
        return tok

    def expect_end(self):
        if self.pos < len(self.tokens):
            raise self.error(f"unexpected trailing input {self.tokens[self.pos].text!r}")


class _DocumentBuilder:
    def __init__(self):
        self.vertices: list[str] = []
        self.arrows: list[tuple[str, str, str]] = []
        self.vertex_set: set[str] = set()
        self.arrow_map: dict[str, tuple[str, str]] = {}

    def declare_vertex(self, tok: Token, lineno: int):
        name = tok.text
        if name.startswith(_RESERVED_PREFIX):
            raise ParseError(
                f"id {name} uses the reserved trivial-path prefix {_RESERVED_PREFIX!r}",
                lineno, tok.col,
            )
        if name in self.vertex_set:
            raise ParseError(f"duplicate id {name}", lineno, tok.col)
        self.vertex_set.add(name)
        self.vertices.append(name)

    def declare_arrow(self, tok: Token, source: Token, target: Token, lineno: int):
        name = tok.text
        if name.startswith(_RESERVED_PREFIX):
            raise ParseError(
                f"id {name} uses the reserved trivial-path prefix {_RESERVED_PREFIX!r}",
                lineno, tok.col,
            )
        if name in self.arrow_map:
            raise ParseError(f"duplicate id {name}", lineno, tok.col)
        if source.text not in self.vertex_set:
            raise ParseError(f"dangling endpoint {source.text}", lineno, source.col)
        if target.text not in self.vertex_set:
            raise ParseError(f"dangling endpoint {target.text}", lineno, target.col)
        self.arrow_map[name] = (source.text, target.text)
        self.arrows.append((name, source.text, target.text))


def _parse_expr(lp: _LineParser, builder: _DocumentBuilder, quiver: Quiver) -> PathVector:
    """expr := ['-'] term (('+'|'-') term)*"""
    vector = PathVector.zero(quiver)
    sign = 1
    if lp.peek() == "-":
        lp.take("-")
        sign = -1
    while True:
        vector = vector + _parse_term(lp, builder, quiver).scale(sign)
        nxt = lp.peek()
        if nxt == "+":
            lp.take("+")
            sign = 1
        elif nxt == "-":
            lp.take("-")
            sign = -1
        else:
            return vector


def _parse_term(lp: _LineParser, builder: _DocumentBuilder, quiver: Quiver) -> PathVector:
    """term := [coeff '*'] path"""
    coeff = Fraction(1)
    tok = lp.take_name("a coefficient or path")
    if tok.text.isdigit():
        numerator = int(tok.text)
        if lp.peek() == "/":
            lp.take("/")
            den_tok = lp.take_name("a denominator")
            if not den_tok.text.isdigit():
                raise lp.error("expected an integer denominator", den_tok.col)
            denominator = int(den_tok.text)
            if denominator == 0:
                raise lp.error("nonzero denominator required", den_tok.col)
            coeff = Fraction(numerator, denominator)
        else:
            coeff = Fraction(numerator)
        lp.take("*")
        tok = lp.take_name("a path")
    return _parse_path(lp, builder, quiver, tok).scale(coeff)


def _parse_path(lp: _LineParser, builder: _DocumentBuilder, quiver: Quiver,
                first: Token) -> PathVector:
    """path := NAME ('.' NAME)* | 'e_' NAME"""
    if first.text.startswith(_RESERVED_PREFIX):
        vertex = first.text[len(_RESERVED_PREFIX):]
        if not vertex:
            raise lp.error("expected a vertex after e_", first.col)
        if vertex not in builder.vertex_set:
            raise lp.error(f"unknown vertex {vertex}", first.col)
        return PathVector.idempotent(quiver, vertex)
    names = [first]
    while lp.peek() == ".":
        lp.take(".")
        names.append(lp.take_name("an arrow"))
    arrow_names = []
    for tok in names:
        if tok.text not in builder.arrow_map:
            raise lp.error(f"unknown arrow {tok.text} in path", tok.col)
        arrow_names.append(tok.text)
    for prev, cur in zip(names, names[1:]):
        if builder.arrow_map[prev.text][1] != builder.arrow_map[cur.text][0]:
            raise lp.error("non-composable path", cur.col)
    return PathVector.unit(quiver, quiver.path(arrow_names))


def parse(text: str) -> InputDocument:
    """Parse a document; raises ParseError with line/column on any defect."""
    builder = _DocumentBuilder()
    pending: list[tuple[str, Token, list[Token], int]] = []  # rel/potential lines

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(raw, lineno)
        if not tokens:
            continue
        lp = _LineParser(tokens, lineno)
        head = lp.take()
        if head.text == "vertex":
            name = lp.take_name("a vertex name")
            lp.expect_end()
            builder.declare_vertex(name, lineno)
        elif head.text == "arrow":
            name = lp.take_name("an arrow name")
            lp.take(":")
            source = lp.take_name("a source vertex")
            lp.take("->")
            target = lp.take_name("a target vertex")
            lp.expect_end()
            builder.declare_arrow(name, source, target, lineno)
        elif head.text in ("rel", "potential"):
            name = lp.take_name("a name")
            lp.take("=")
            rest = tokens[lp.pos:]
            if not rest:
                raise lp.error("expected an expression")
            pending.append((head.text, name, rest, lineno))
        else:
            raise ParseError(
                f"expected one of vertex/arrow/rel/potential, found {head.text!r}",
                lineno, head.col,
            )

    try:
        quiver = Quiver(builder.vertices, builder.arrows)
    except QuiverError as exc:  # already guarded line by line; belt and braces
        raise ParseError(str(exc), 1, 1) from None

    generators: list[tuple[str, PathVector]] = []
    rel_names = set()
    potential: tuple[str, Superpotential] | None = None
    for kind, name_tok, rest, lineno in pending:
        lp = _LineParser(rest, lineno)
        try:
            vector = _parse_expr(lp, builder, quiver)
        except PathError as exc:
            raise ParseError(str(exc), lineno, rest[0].col) from None
        lp.expect_end()
        if kind == "rel":
            if name_tok.text in rel_names:
                raise ParseError(f"duplicate id {name_tok.text}", lineno, name_tok.col)
            rel_names.add(name_tok.text)
            if vector.is_zero():
                raise ParseError(f"relation {name_tok.text} is zero", lineno, name_tok.col)
            if vector.min_degree() < 2:
                raise ParseError(
                    f"relation degree < 2: relation {name_tok.text} has a term of "
                    f"degree {vector.min_degree()}, but relations live in paths of "
                    "length >= 2",
                    lineno, name_tok.col,
                )
            generators.append((name_tok.text, vector))
        else:
            if potential is not None:
                raise ParseError("duplicate potential declaration", lineno, name_tok.col)
            try:
                potential = (name_tok.text, Superpotential(vector))
            except RelationError as exc:
                raise ParseError(str(exc), lineno, name_tok.col) from None

    try:
        relation_set = RelationSet.from_generators(quiver, generators)
    except RelationError as exc:
        raise ParseError(str(exc), 1, 1) from None
    return InputDocument(quiver, relation_set, potential)
