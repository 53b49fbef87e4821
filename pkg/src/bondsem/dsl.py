"""Text syntax for prop terms.

::

    term := term ';' term       # diagrammatic: left happens first
          | term '+' term       # tensor, binds tighter than ';'
          | 'id(' nat ')' | 'sigma(' nat ',' nat ')' | IDENT | '(' term ')'

Both operators associate to the left.  A trailing prime on an identifier
is read as a ``p`` suffix, so ``M'`` names ``Mp``.  ``#`` starts a comment
that runs to the end of the line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .terms import ArityError, Braid, Comp, Gen, Id, Signature, Tensor, Term, TermError, typecheck


class ParseError(TermError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


_TOKEN = re.compile(
    r"(?P<ws>\s+|\#[^\n]*)"
    r"|(?P<nat>\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)"
    r"|(?P<punct>[;+(),])"
)


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            line, col = _location(text, pos)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        if m.lastgroup != "ws":
            tokens.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


def _location(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


class _Parser:
    def __init__(self, text: str, sig: Signature | None):
        self.text = text
        self.sig = sig
        self.tokens = tokenize(text)
        self.pos = 0

    def error(self, message: str, token: Token) -> ParseError:
        return ParseError(message, *_location(self.text, token.offset))

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.advance()
        if tok.text != text:
            found = tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}", tok)
        return tok

    def nat(self) -> int:
        tok = self.advance()
        if tok.kind != "nat":
            raise self.error(f"expected a natural number, found {tok.text or 'end of input'!r}", tok)
        return int(tok.text)

    def arities(self, t: Term) -> tuple[int, int] | None:
        return typecheck(t, self.sig) if self.sig is not None else None

    def sequence(self) -> Term:
        t = self.tensor()
        while self.peek().text == ";":
            op = self.advance()
            nxt = self.tensor()
            if self.sig is not None:
                (_, cod), (dom, _) = self.arities(t), self.arities(nxt)
                if cod != dom:
                    raise self.error(
                        f"arity mismatch: left side has codomain {cod}, right side has domain {dom}", op)
            t = Comp(nxt, t)
        return t

    def tensor(self) -> Term:
        t = self.atom()
        while self.peek().text == "+":
            self.advance()
            t = Tensor(t, self.atom())
        return t

    def atom(self) -> Term:
        tok = self.advance()
        if tok.text == "(":
            t = self.sequence()
            self.expect(")")
            return t
        if tok.kind != "ident":
            raise self.error(f"expected a term, found {tok.text or 'end of input'!r}", tok)
        if tok.text == "id" and self.peek().text == "(":
            self.advance()
            n = self.nat()
            self.expect(")")
            return Id(n)
        if tok.text == "sigma" and self.peek().text == "(":
            self.advance()
            a = self.nat()
            self.expect(",")
            b = self.nat()
            self.expect(")")
            return Braid(a, b)
        # a trailing prime is accepted for the 'p' suffix: M' is Mp
        name = tok.text[:-1] + "p" if tok.text.endswith("'") else tok.text
        if self.sig is not None and name not in self.sig.generators:
            known = ", ".join(sorted(self.sig.generators))
            raise self.error(f"unknown generator {tok.text!r} in signature {self.sig.name!r} (known: {known})", tok)
        return Gen(name)


def parse(text: str, sig: Signature | None = None) -> Term:
    """Parse DSL text; with ``sig`` given, identifiers and arities are checked too."""
    p = _Parser(text, sig)
    t = p.sequence()
    tok = p.peek()
    if tok.kind != "eof":
        raise p.error(f"unexpected {tok.text!r} after complete term", tok)
    if sig is not None:
        try:
            typecheck(t, sig)
        except ArityError as exc:  # pragma: no cover - caught per operator above
            raise ParseError(str(exc), 1, 1) from None
    return t


def show(t: Term) -> str:
    """Print ``t`` so that ``parse(show(t)) == t``."""
    if isinstance(t, Gen):
        return t.name
    if isinstance(t, Id):
        return f"id({t.n})"
    if isinstance(t, Braid):
        return f"sigma({t.a},{t.b})"
    if isinstance(t, Comp):
        after = show(t.after)
        if isinstance(t.after, Comp):
            after = f"({after})"
        return f"{show(t.before)} ; {after}"
    left = show(t.left)
    if isinstance(t.left, Comp):
        left = f"({left})"
    right = show(t.right)
    if isinstance(t.right, (Comp, Tensor)):
        right = f"({right})"
    return f"{left} + {right}"
