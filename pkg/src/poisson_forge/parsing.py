"""Expression front end for polynomials, forms and multivectors.

Grammar (ASCII only, whitespace-insensitive):

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := atom ['^' INT]
    atom    := RATIONAL | VAR | '(' expr ')' | group
    group   := '[' watom ('^' watom)* ']'
    watom   := 'dx' INT | 'e' INT
    RATIONAL:= INT ['/' INT]
    VAR     := 'x' INT

Wedge groups use '^' between dx/e atoms inside brackets; outside brackets
'^' is an integer power.  Exponents must be non-negative; unicode input
is rejected.  Printing of canonical objects round-trips through parsing.
"""

import re

from .exterior import FORM, MULTIVECTOR, GradedElement, wedge
from .polynomials import Polynomial
from .rationals import Q


class ParseError(ValueError):
    """Syntax or semantic error with a byte offset into the source."""

    def __init__(self, message, pos):
        super().__init__("%s (at offset %d)" % (message, pos))
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<dx>dx(?=\d))|(?P<var>x(?=\d))"
                    r"|(?P<vec>e(?=\d))|(?P<op>[-+*/^()\[\]]))")


def _tokenize(src):
    if not src.isascii():
        raise ParseError("non-ASCII input rejected", 0)
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            rest = src[pos:]
            if rest.strip() == "":
                break
            bad = pos + len(rest) - len(rest.lstrip())
            raise ParseError("unexpected character %r" % src[bad], bad)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src, n):
        self.tokens = _tokenize(src)
        self.i = 0
        self.n = n

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.i]
        if kind and tok[0] != kind or value is not None and tok[1] != value:
            raise ParseError("expected %s" % (value or kind), tok[2])
        self.i += 1
        return tok

    def _int(self):
        tok = self.take("num")
        return int(tok[1])

    def _axis(self, tok_pos):
        k = self._int()
        if not 1 <= k <= self.n:
            raise ParseError("axis index out of range 1..%d" % self.n, tok_pos)
        return k

    # -- values are Polynomial or GradedElement -----------------------

    def expr(self):
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                rhs = self.term()
                value = self._add(value, rhs, tok) if tok[1] == "+" \
                    else self._add(value, -rhs, tok)
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                value = self._mul(value, self.factor(), tok)
            else:
                return value

    def factor(self):
        value = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            neg = self.peek()
            if neg[0] == "op" and neg[1] == "-":
                raise ParseError("negative exponents rejected", neg[2])
            k = self._int()
            if not isinstance(value, Polynomial):
                raise ParseError("powers apply to scalars only", tok[2])
            value = value ** k
        return value

    def atom(self):
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.take()
                den = self._int()
                if den == 0:
                    raise ParseError("zero denominator", nxt[2])
                return Polynomial.constant(self.n, Q(int(tok[1]), den))
            return Polynomial.constant(self.n, int(tok[1]))
        if tok[0] == "var":
            self.take()
            return Polynomial.variable(self.n, self._axis(tok[2]))
        if tok[0] == "op" and tok[1] == "(":
            self.take()
            value = self.expr()
            self.take("op", ")")
            return value
        if tok[0] == "op" and tok[1] == "[":
            return self.group()
        raise ParseError("expected a value", tok[2])

    def group(self):
        open_tok = self.take("op", "[")
        value = self.watom()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "^":
                self.take()
                rhs = self.watom()
                if rhs.kind != value.kind:
                    raise ParseError("cannot wedge forms with multivectors",
                                     tok[2])
                value = wedge(value, rhs)
            elif tok[0] == "op" and tok[1] == "]":
                self.take()
                return value
            else:
                raise ParseError("expected '^' or ']' in wedge group", tok[2])
        del open_tok

    def watom(self):
        tok = self.peek()
        if tok[0] == "dx":
            self.take()
            return GradedElement.basis(self.n, FORM, (self._axis(tok[2]),))
        if tok[0] == "vec":
            self.take()
            return GradedElement.basis(self.n, MULTIVECTOR, (self._axis(tok[2]),))
        raise ParseError("expected dx<i> or e<i>", tok[2])

    # -- mixed arithmetic ---------------------------------------------

    def _add(self, a, b, tok):
        if isinstance(a, Polynomial) and isinstance(b, Polynomial):
            return a + b
        a, b = self._promote(a), self._promote(b)
        if a.kind != b.kind or a.degree != b.degree:
            raise ParseError("cannot add different exterior degrees or kinds",
                             tok[2])
        return a + b

    def _mul(self, a, b, tok):
        if isinstance(a, Polynomial) and isinstance(b, Polynomial):
            return a * b
        if isinstance(a, Polynomial):
            return b * a
        if isinstance(b, Polynomial):
            return a * b
        raise ParseError("use a wedge group for exterior products", tok[2])

    def _promote(self, v):
        if isinstance(v, Polynomial):
            return GradedElement.from_polynomial(v)
        return v


def parse_expression(src, n=4):
    """Parse to a Polynomial or GradedElement."""
    p = _Parser(src, n)
    value = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError("trailing input", tok[2])
    return value


def parse_polynomial(src, n=4):
    value = parse_expression(src, n)
    if isinstance(value, GradedElement):
        if value.degree == 0:
            return value.coefficient(())
        raise ParseError("expected a polynomial, found an exterior element", 0)
    return value


def parse_form(src, n=4):
    value = parse_expression(src, n)
    if isinstance(value, Polynomial):
        return GradedElement.from_polynomial(value)
    return value


def print_polynomial(p):
    """Canonical printing; parse(print(p)) == p."""
    return str(p)


def print_element(a):
    return str(a)
