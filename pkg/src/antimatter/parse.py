"""Expression language for elements of R and polynomials in R[t].

Grammar (whitespace is ignored)::

    expr    ::= ['-'] term (('+' | '-') term)*
    term    ::= factor (['*'] factor)*
    factor  ::= INT | var | 't' ['^' INT] | '(' expr ')' ['^' INT]
    var     ::= 'x' INT ['^' (INT | '(' INT ['/' INT] ')')]

Juxtaposition multiplies, so ``x1^(1/2)x2``, ``(x1)t^2`` and ``3*x1`` all
parse.  Zero exponents are rejected; write the scalar instead.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import Monomial, check_prime
from .errors import ParseError
from .ring import RingElem
from .rpoly import RPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|(t)|([-+*^/()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        kind = "int" if m.group(1) else "x" if m.group(2) else "t" if m.group(3) else m.group(4)
        tokens.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, p: int):
        self.text = text
        self.p = p
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def pos(self) -> int:
        return self.tokens[self.i][2]

    def take(self, kind: str) -> str:
        k, val, pos = self.tokens[self.i]
        if k != kind:
            what = "end of input" if k == "end" else repr(val)
            raise ParseError(f"expected {kind!r}, found {what}", self.text, pos)
        self.i += 1
        return val

    def error(self, message: str, pos=None):
        raise ParseError(message, self.text, self.pos() if pos is None else pos)

    def parse(self) -> RPoly:
        if self.peek() == "end":
            self.error("empty expression")
        value = self.expr()
        if self.peek() != "end":
            self.error(f"unexpected {self.tokens[self.i][1]!r}")
        return value

    def expr(self) -> RPoly:
        negate = False
        if self.peek() == "-":
            self.take("-")
            negate = True
        value = self.term()
        if negate:
            value = -value
        while self.peek() in "+-":
            op = self.take(self.peek())
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RPoly:
        value = self.factor()
        while True:
            if self.peek() == "*":
                self.take("*")
                value = value * self.factor()
            elif self.peek() in ("x", "t", "("):
                value = value * self.factor()
            else:
                return value

    def factor(self) -> RPoly:
        k = self.peek()
        p = self.p
        if k == "int":
            return RPoly.const(RingElem.scalar(int(self.take("int")), p))
        if k == "x":
            return RPoly.const(RingElem.mono(self.variable(), p))
        if k == "t":
            self.take("t")
            return RPoly.t(p, self.power())
        if k == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner ** self.power()
        what = "end of input" if k == "end" else repr(self.tokens[self.i][1])
        self.error(f"expected a term, found {what}")

    def power(self) -> int:
        if self.peek() != "^":
            return 1
        self.take("^")
        return int(self.take("int"))

    def variable(self) -> Monomial:
        self.take("x")
        if self.peek() != "int":
            self.error("variable needs an index, as in x1")
        index = int(self.take("int"))
        if self.peek() != "^":
            return Monomial.var(index)
        self.take("^")
        start = self.pos()
        if self.peek() == "int":
            exp = Fraction(int(self.take("int")))
        else:
            self.take("(")
            num = int(self.take("int"))
            den = 1
            if self.peek() == "/":
                self.take("/")
                den = int(self.take("int"))
            self.take(")")
            if den == 0:
                self.error("zero denominator", start)
            exp = Fraction(num, den)
        if exp == 0:
            self.error("zero exponent; write the scalar instead", start)
        return Monomial.var(index, exp)


def parse_expression(text: str, p: int) -> RPoly:
    """Parse a polynomial in t over R; the modulus must be prime."""
    check_prime(p)
    return _Parser(text, p).parse()


def parse_element(text: str, p: int) -> RingElem:
    """Parse an element of R (no ``t`` allowed)."""
    f = parse_expression(text, p)
    if (f.degree or 0) > 0:
        pos = text.find("t")
        raise ParseError("element of R expected, found a polynomial in t", text, max(pos, 0))
    return f[0]
