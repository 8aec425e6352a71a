"""Text form of elements: a small recursive-descent parser and the matching printer.

Grammar (EBNF, whitespace between tokens is ignored)::

    expression  = tensor_term , { ( "+" | "-" ) , tensor_term } ;
    tensor_term = product , { "(x)" , product } ;
    product     = [ "+" | "-" ] , power , { "*" , power } ;
    power       = atom , [ "^" , exponent ] ;
    exponent    = [ "-" ] , digits ;
    atom        = digits | "q" | generator | minor | "(" , expression , ")" ;
    generator   = letter , "[" , digits , "," , digits , "]" ;
    minor       = "[" , { digits } , "|" , { digits } , "]" ;

``(x)`` separates tensor factors and binds looser than ``*``, so the printed
form ``q*Y[2,1] (x) Z[1,2]`` reads back as ``(q*Y[2,1]) (x) Z[1,2]``.
Negative exponents are accepted on ``q`` and on units only; anything else
raises NegativePowerOfNonInvertible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from .errors import NegativePowerOfNonInvertible, ParseError, UnknownGenerator
from .pbwcore import Element, Presentation, format_element, unit_inverse
from .qcoeff import LaurentInt

__all__ = ["parse_element", "serialize", "parse_minor_key", "read_expression_file", "tokenize", "EBNF"]

EBNF = __doc__.split("::", 1)[1].split("``(x)``", 1)[0].strip("\n")
EBNF = "\n".join(line[4:] for line in EBNF.splitlines()).strip()

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<tensor>\(\s*x\s*\))
  | (?P<num>\d+)
  | (?P<gen>[A-Za-z]\s*\[\s*\d+\s*,\s*\d+\s*\])
  | (?P<minor>\[[\d\s]*\|[\d\s]*\])
  | (?P<q>q(?![A-Za-z\[]))
  | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            kind = m.lastgroup if m.lastgroup != "op" else m.group()
            out.append(Token(kind, m.group(), pos))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self, kind: str | None = None) -> Token:
        tok = self.toks[self.i]
        if kind is not None and tok.kind != kind:
            want = {"end": "end of input"}.get(kind, repr(kind))
            got = "end of input" if tok.kind == "end" else repr(tok.text)
            raise ParseError(f"expected {want} but found {got}", tok.pos)
        self.i += 1
        return tok

    def expression(self):
        terms = [(1, self.tensor_term())]
        while self.peek().kind in ("+", "-"):
            sign = 1 if self.take().kind == "+" else -1
            terms.append((sign, self.tensor_term()))
        return ("add", terms)

    def tensor_term(self):
        start = self.peek().pos
        parts = [self.product()]
        while self.peek().kind == "tensor":
            self.take()
            parts.append(self.product())
        return parts[0] if len(parts) == 1 else ("tensor", parts, start)

    def product(self):
        sign = 1
        if self.peek().kind in ("+", "-"):
            sign = 1 if self.take().kind == "+" else -1
        factors = [self.power()]
        while self.peek().kind == "*":
            self.take()
            factors.append(self.power())
        node = ("mul", factors)
        return node if sign == 1 else ("neg", node)

    def power(self):
        atom = self.atom()
        if self.peek().kind != "^":
            return atom
        tok = self.take()
        neg = False
        if self.peek().kind == "-":
            self.take()
            neg = True
        k = int(self.take("num").text)
        return ("pow", atom, -k if neg else k, tok.pos)

    def atom(self):
        tok = self.peek()
        if tok.kind == "num":
            self.take()
            return ("num", int(tok.text), tok.pos)
        if tok.kind == "q":
            self.take()
            return ("q", tok.pos)
        if tok.kind == "gen":
            self.take()
            m = re.fullmatch(r"([A-Za-z])\s*\[\s*(\d+)\s*,\s*(\d+)\s*\]", tok.text)
            return ("gen", m.group(1), int(m.group(2)), int(m.group(3)), tok.pos)
        if tok.kind == "minor":
            self.take()
            rows, cols = _split_key(tok.text, tok.pos)
            return ("minor", rows, cols, tok.pos)
        if tok.kind == "(":
            self.take()
            inner = self.expression()
            self.take(")")
            return inner
        got = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"expected a number, q, a generator, a minor or '(' but found {got}", tok.pos)


def _split_key(text: str, pos: int = 0) -> tuple[tuple, tuple]:
    body = text.strip()[1:-1]
    left, right = body.split("|")
    return tuple(int(x) for x in left.split()), tuple(int(x) for x in right.split())


def parse_minor_key(text: str) -> tuple[tuple, tuple]:
    """``"[1 2|1 3]"`` -> ((1, 2), (1, 3))."""
    if not re.fullmatch(r"\s*\[[\d\s]*\|[\d\s]*\]\s*", text):
        raise ParseError(f"expected a minor key like [1 2|1 3], got {text!r}", 0)
    return _split_key(text)


class _Evaluator:
    def __init__(self, ambient: Presentation, minor: Callable | None):
        self.p = ambient
        self.minor = minor
        self.symbols = {g.symbol for g in ambient.generators}
        self.nfactors = ambient.nfactors
        self.lookup = {}
        for i, g in enumerate(ambient.generators):
            self.lookup.setdefault((g.symbol, g.row, g.col), []).append((g.factor, i))

    def run(self, node, factor=None) -> Element:
        p = self.p
        kind = node[0]
        if kind == "add":
            acc = p.zero()
            for sign, sub in node[1]:
                v = self.run(sub, factor)
                acc = acc + v if sign > 0 else acc - v
            return acc
        if kind == "neg":
            return -self.run(node[1], factor)
        if kind == "mul":
            acc = p.one()
            for sub in node[1]:
                acc = acc * self.run(sub, factor)
            return acc
        if kind == "num":
            return p.scalar(node[1])
        if kind == "q":
            return p.scalar(LaurentInt.monomial(1, 1))
        if kind == "pow":
            _, base, k, pos = node
            if base[0] == "q":
                return p.scalar(LaurentInt.monomial(1, k))
            v = self.run(base, factor)
            if k >= 0:
                return v ** k
            try:
                inv = unit_inverse(v)
            except ValueError:
                raise NegativePowerOfNonInvertible(f"negative exponent on a non-unit at position {pos}") from None
            return inv ** (-k)
        if kind == "gen":
            return self.generator(node, factor)
        if kind == "minor":
            _, rows, cols, pos = node
            if self.minor is None or self.nfactors != 1:
                raise ParseError(f"minor atoms are only available in O_q(M_n)", pos)
            return self.minor(rows, cols)
        if kind == "tensor":
            _, parts, pos = node
            if self.nfactors == 1:
                raise ParseError(f"'(x)' used outside a tensor product", pos)
            if factor is not None:
                raise ParseError(f"nested '(x)' inside a tensor factor", pos)
            if len(parts) != self.nfactors:
                raise ParseError(f"expected {self.nfactors} tensor factors, got {len(parts)}", pos)
            acc = p.one()
            for f, sub in enumerate(parts):
                acc = acc * self.run(sub, f)
            return acc
        raise AssertionError(kind)  # pragma: no cover

    def generator(self, node, factor):
        _, sym, i, j, pos = node
        if sym not in self.symbols:
            allowed = ", ".join(sorted(self.symbols))
            raise ParseError(f"generator {sym}[{i},{j}] is outside the namespace {allowed}", pos)
        hits = self.lookup.get((sym, i, j), [])
        if factor is not None:
            hits = [h for h in hits if h[0] == factor]
        if not hits:
            raise UnknownGenerator(f"{sym}[{i},{j}] is not a generator of {self.p.name or 'this algebra'}")
        if len(hits) > 1:
            raise ParseError(f"{sym}[{i},{j}] is ambiguous; separate tensor factors with (x)", pos)
        return self.p.gen(hits[0][1])


def parse_element(text: str, ambient: Presentation, minor: Callable | None = None) -> Element:
    """Parse ``text`` into a normal-form element of ``ambient``.

    ``minor(rows, cols)`` enables the ``[I|J]`` atom.
    """
    parser = _Parser(text)
    tree = parser.expression()
    parser.take("end")
    return _Evaluator(ambient, minor).run(tree)


def serialize(x: Element) -> str:
    return format_element(x)


def read_expression_file(path: str) -> list[str]:
    """Newline-separated expressions; blank lines and ``#`` comments are skipped."""
    with open(path, encoding="utf-8") as fh:
        lines = [ln.split("#", 1)[0].strip() for ln in fh]
    return [ln for ln in lines if ln]
