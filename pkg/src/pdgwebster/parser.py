"""Expression grammar for algebra elements.

    expr   := term (('+' | '-') term)*
    term   := integer? factor ('*'? factor)*  |  integer
    factor := 'e(' seq ')' | 'x@' int | 'psi@' int | 'E(' int ')@' int
            | 'D' ('^' int)? '(' expr ')' | '(' expr ')'

Juxtaposition multiplies with the left factor on top.  A generator without
an idempotent is summed over all sequences where it is nonzero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import Algebra, Element

_TOKEN = re.compile(r"\s*(?:(\d+)|(psi|e|x|E|D)|([()@^+\-*]))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass
class _Tok:
    kind: str
    value: str
    pos: int


def tokenize(text: str) -> list:
    out = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if not m:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(_Tok("int", m.group(1), start))
        elif m.group(2):
            out.append(_Tok("name", m.group(2), start))
        else:
            out.append(_Tok("sym", m.group(3), start))
        i = m.end()
        if m.group(2) == "e":
            # the sequence inside e(...) is raw text such as b,2,1,b
            j = i
            while j < len(text) and text[j].isspace():
                j += 1
            if j < len(text) and text[j] == "(":
                close = text.find(")", j)
                if close < 0:
                    raise ParseError("unclosed e(", j)
                out.append(_Tok("sym", "(", j))
                out.append(_Tok("seq", text[j + 1:close], j + 1))
                out.append(_Tok("sym", ")", close))
                i = close + 1
    out.append(_Tok("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, algebra: Algebra):
        self.text = text
        self.A = algebra
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok.kind != kind) or (value is not None and tok.value != value):
            want = value if value is not None else kind
            got = tok.value or "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", tok.pos)
        self.i += 1
        return tok

    def expr(self) -> Element:
        sign = 1
        if self.peek().kind == "sym" and self.peek().value in "+-":
            sign = -1 if self.take().value == "-" else 1
        out = self.term().scale(sign)
        while self.peek().kind == "sym" and self.peek().value in "+-":
            sign = -1 if self.take().value == "-" else 1
            out = out + self.term().scale(sign)
        return out

    def _starts_factor(self, tok) -> bool:
        return tok.kind == "name" or (tok.kind == "sym" and tok.value == "(")

    def term(self) -> Element:
        coeff = None
        if self.peek().kind == "int":
            coeff = int(self.take().value)
            if self.peek().kind == "sym" and self.peek().value == "*":
                self.take()
        if not self._starts_factor(self.peek()):
            if coeff is None:
                tok = self.peek()
                raise ParseError(f"expected a term, found {tok.value or 'end of input'!r}", tok.pos)
            return self.A.one().scale(coeff)
        out = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "sym" and tok.value == "*":
                self.take()
                out = out * self.factor()
            elif self._starts_factor(tok):
                out = out * self.factor()
            else:
                break
        return out.scale(coeff) if coeff is not None else out

    def factor(self) -> Element:
        tok = self.take()
        A = self.A
        if tok.kind == "sym" and tok.value == "(":
            inner = self.expr()
            self.take("sym", ")")
            return inner
        if tok.kind != "name":
            raise ParseError(f"unexpected {tok.value!r}", tok.pos)
        if tok.value == "e":
            self.take("sym", "(")
            body = self.take("seq")
            try:
                seq = A.seq(body.value)
            except ValueError as exc:
                raise ParseError(str(exc), body.pos) from None
            self.take("sym", ")")
            return A.e(seq)
        if tok.value in ("x", "psi"):
            self.take("sym", "@")
            j = self._position()
            return A.x(j) if tok.value == "x" else A.psi(j)
        if tok.value == "E":
            self.take("sym", "(")
            d = int(self.take("int").value)
            self.take("sym", ")")
            self.take("sym", "@")
            return A.E(d, self._position())
        if tok.value == "D":
            k = 1
            if self.peek().kind == "sym" and self.peek().value == "^":
                self.take()
                k = int(self.take("int").value)
            self.take("sym", "(")
            inner = self.expr()
            self.take("sym", ")")
            from .derivation import derive

            return derive(inner, k)
        raise ParseError(f"unknown name {tok.value!r}", tok.pos)

    def _position(self) -> int:
        tok = self.take("int")
        j = int(tok.value)
        if not 1 <= j <= self.A.strands:
            raise ParseError(f"strand position {j} out of range 1..{self.A.strands}", tok.pos)
        return j


def parse(text: str, algebra: Algebra) -> Element:
    p = _Parser(text, algebra)
    out = p.expr()
    tok = p.peek()
    if tok.kind != "end":
        raise ParseError(f"unexpected {tok.value!r}", tok.pos)
    return out
