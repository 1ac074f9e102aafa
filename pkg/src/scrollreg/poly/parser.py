"""Recursive-descent parser for polynomial text.

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := base ('^' uint)?
    base   := integer | identifier | '(' expr ')'

Division is only by nonzero constants; it exists so that rational
coefficients printed by ``str(poly)`` parse back.
"""
import re

from ..errors import PolynomialSyntaxError, UnknownVariableError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("id", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolynomialSyntaxError(f"unexpected character {ch!r}", text, start)
            tokens.append((ch, ch, start))
        pos = m.end()
    if text[pos:].strip():
        raise PolynomialSyntaxError("unexpected input", text, pos)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolynomialSyntaxError(f"expected {kind!r}, found {what}", self.text, tok[2])
        self.i += 1
        return tok

    def error(self, message):
        raise PolynomialSyntaxError(message, self.text, self.peek()[2])

    def expr(self):
        negate = False
        if self.peek()[0] == "-":
            self.take()
            negate = True
        value = self.term()
        if negate:
            value = -value
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise PolynomialSyntaxError("division only by a nonzero constant",
                                                self.text, pos)
                value = value / rhs.constant_term()
        return value

    def factor(self):
        value = self.base()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                self.error("exponent must be a nonnegative integer")
            self.take()
            value = value ** int(tok[1])
        return value

    def base(self):
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            return self.ring.constant(int(val))
        if kind == "id":
            self.take()
            if val not in self.ring:
                raise UnknownVariableError(val)
            return self.ring.var(val)
        if kind == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        what = "end of input" if kind == "end" else repr(val)
        self.error(f"unexpected {what}")

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return value


def parse_polynomial(text, ring):
    """Parse ``text`` into a polynomial of ``ring``."""
    return _Parser(text, ring).parse()
