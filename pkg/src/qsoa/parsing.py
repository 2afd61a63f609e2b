"""Text parsers for scalars, center polynomials and words.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' exponent)?
    exponent := ('-' | '+')? INT | '(' ('-' | '+')? INT ')'
    atom   := INT | 'q' | 'C' | '(' expr ')'

``^`` binds tighter than unary minus, so ``-q^2`` is ``-(q^2)``.  The symbol
``C`` (the Casimir) is only accepted by :func:`parse_center_poly`, where it may
not appear in a denominator or with a negative exponent.
"""

import re

from .errors import ParseError, ZeroArgument
from .scalar import ONE, ZERO, Scalar, q

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Poly:
    """Polynomial in C with Scalar coefficients, used only during parsing."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.c = c

    @classmethod
    def const(cls, s):
        return cls([s])

    def is_const(self):
        return len(self.c) <= 1

    def const_value(self):
        return self.c[0] if self.c else ZERO

    def __add__(self, o):
        n = max(len(self.c), len(o.c))
        a = self.c + [ZERO] * (n - len(self.c))
        b = o.c + [ZERO] * (n - len(o.c))
        return _Poly([x + y for x, y in zip(a, b)])

    def __neg__(self):
        return _Poly([-x for x in self.c])

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if not self.c or not o.c:
            return _Poly([])
        out = [ZERO] * (len(self.c) + len(o.c) - 1)
        for i, x in enumerate(self.c):
            for j, y in enumerate(o.c):
                out[i + j] = out[i + j] + x * y
        return _Poly(out)


class _Parser:
    def __init__(self, text, allow_c):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.allow_c = allow_c

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected '{op}'", pos)

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return value

    def expr(self):
        value = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.unary()
                if val == "*":
                    value = value * rhs
                else:
                    if not rhs.is_const():
                        raise ParseError("division by an expression in C", pos)
                    d = rhs.const_value()
                    if d.is_zero():
                        raise ParseError("division by zero", pos)
                    value = value * _Poly.const(d.inverse())
            else:
                return value

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            inner = self.unary()
            return -inner if val == "-" else inner
        return self.power()

    def exponent(self):
        kind, val, pos = self.peek()
        wrapped = kind == "op" and val == "("
        if wrapped:
            self.take()
        sign = 1
        kind, val, pos = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        kind, val, pos = self.take()
        if kind != "int":
            raise ParseError("exponent must be an integer", pos)
        if wrapped:
            self.expect_op(")")
        return sign * val

    def power(self):
        base = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            n = self.exponent()
            if n < 0:
                if not base.is_const():
                    raise ParseError("negative power of C", pos)
                b = base.const_value()
                if b.is_zero():
                    raise ParseError("zero to a negative power", pos)
                return _Poly.const(b**n)
            out = _Poly.const(ONE)
            for _ in range(n):
                out = out * base
            return out
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return _Poly.const(Scalar(val))
        if kind == "name":
            if val == "q":
                return _Poly.const(q)
            if val == "C" and self.allow_c:
                return _Poly([ZERO, ONE])
            raise ParseError(f"unknown symbol {val!r}", pos)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {val!r}", pos)


def parse_scalar(text):
    """Parse a rational expression in ``q`` into a :class:`Scalar`."""
    try:
        return _Parser(text, allow_c=False).parse().const_value()
    except ZeroArgument as exc:
        raise ParseError(str(exc)) from exc


def parse_center_coefficients(text):
    """Parse a polynomial in ``C`` over Q(q); returns the coefficient list."""
    try:
        return list(_Parser(text, allow_c=True).parse().c)
    except ZeroArgument as exc:
        raise ParseError(str(exc)) from exc


_LETTERS = set("EFKLXY")


def parse_word(text):
    """Parse a word such as ``EXK``, ``E*X*K`` or ``E K^-1 F`` (``K^-1`` means ``L``).

    Powers ``G^n`` with ``n >= 0`` are expanded; ``1`` denotes the empty word.
    """
    s = text.replace(" ", "")
    out = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch == "*":
            i += 1
            continue
        if ch == "1" and (i + 1 == len(s) or s[i + 1] == "*"):
            i += 1
            continue
        if ch not in _LETTERS:
            raise ParseError(f"unexpected {ch!r} in word", i)
        i += 1
        letter = ch
        if i < len(s) and s[i] == "^":
            m = re.match(r"\^\(?(-?\d+)\)?", s[i:])
            if m is None:
                raise ParseError("bad exponent", i)
            n = int(m.group(1))
            i += m.end()
            if n < 0:
                if letter == "K":
                    letter, n = "L", -n
                elif letter == "L":
                    letter, n = "K", -n
                else:
                    raise ParseError(f"negative power of {ch}", i)
            out.append(letter * n)
        else:
            out.append(letter)
    return "".join(out)
