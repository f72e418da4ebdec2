"""Surface syntax for Laurent polynomials and lattice-point lists.

Grammar (whitespace-insensitive)::

    expr   := ['-'] term (('+'|'-') term)*
    term   := [int] ('*'? factor)*
    factor := var ('^' '-'? int)?
    var    := 'u1' | 'u2' | 't'

't' names the same axis as 'u1' (the one-variable view used for
identity scans).  Coefficients are reduced mod p, like terms merge and
zero terms drop, so parsing the canonical string of a polynomial always
round-trips.  Exponents are capped at |e| <= 2^20 to keep the geometry
in a safe range.
"""

from __future__ import annotations

from .geometry import COORD_LIMIT
from .laurent import LaurentPoly

VAR_AXIS = {"u1": 0, "u2": 1, "t": 0}


class ParseError(ValueError):
    """Syntax error with 1-based line/column position."""

    def __init__(self, message, line, col):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class _Tokens:
    def __init__(self, text):
        self.tokens = []
        line, col = 1, 1
        i = 0
        while i < len(text):
            ch = text[i]
            if ch == "\n":
                line += 1
                col = 1
                i += 1
                continue
            if ch.isspace():
                col += 1
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.tokens.append(("int", int(text[i:j]), line, col))
                col += j - i
                i = j
                continue
            if ch.isalpha():
                # variable names are fixed, so match them greedily; this is
                # what lets '*' be optional in products like "u1^3u2"
                for name in ("u1", "u2", "t"):
                    if text.startswith(name, i):
                        self.tokens.append(("name", name, line, col))
                        col += len(name)
                        i += len(name)
                        break
                else:
                    j = i
                    while j < len(text) and text[j].isalnum():
                        j += 1
                    self.tokens.append(("name", text[i:j], line, col))
                    col += j - i
                    i = j
                continue
            if ch in "+-*^":
                self.tokens.append((ch, ch, line, col))
                col += 1
                i += 1
                continue
            raise ParseError(f"unexpected character {ch!r}", line, col)
        self.tokens.append(("end", None, line, col))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message):
        kind, _, line, col = self.peek()
        raise ParseError(message, line, col)


def parse_poly(text: str, p: int) -> LaurentPoly:
    """Parse a polynomial expression into a LaurentPoly over F_p."""
    toks = _Tokens(text)
    terms = {}
    sign = 1
    if toks.peek()[0] == "-":
        toks.next()
        sign = -1
    while True:
        coeff, exp = _parse_term(toks)
        terms[exp] = terms.get(exp, 0) + sign * coeff
        kind = toks.peek()[0]
        if kind == "end":
            break
        if kind == "+":
            sign = 1
        elif kind == "-":
            sign = -1
        else:
            toks.error(f"expected '+' or '-' between terms, got {toks.peek()[1]!r}")
        toks.next()
    return LaurentPoly(terms, p)


def _parse_term(toks):
    coeff = 1
    e1 = e2 = 0
    saw_anything = False
    if toks.peek()[0] == "int":
        coeff = toks.next()[1]
        saw_anything = True
    while True:
        kind = toks.peek()[0]
        if kind == "*":
            toks.next()
            kind = toks.peek()[0]
            if kind != "name":
                toks.error("expected a variable after '*'")
        if kind != "name":
            break
        axis, exp = _parse_factor(toks)
        if axis == 0:
            e1 += exp
        else:
            e2 += exp
        saw_anything = True
    if not saw_anything:
        toks.error("expected a term")
    return coeff, (e1, e2)


def _parse_factor(toks):
    kind, name, line, col = toks.next()
    if name not in VAR_AXIS:
        raise ParseError(f"unknown variable {name!r}", line, col)
    exp = 1
    if toks.peek()[0] == "^":
        toks.next()
        sign = 1
        if toks.peek()[0] == "-":
            toks.next()
            sign = -1
        if toks.peek()[0] != "int":
            toks.error("expected an integer exponent after '^'")
        exp = sign * toks.next()[1]
    if abs(exp) > COORD_LIMIT:
        raise ParseError(f"exponent {exp} out of range (|e| <= 2^20)", line, col)
    return VAR_AXIS[name], exp


def parse_points(text: str):
    """Parse a shape or tuple list like "(0,0);(1,0);(0,2)"."""
    pts = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ParseError(f"expected '(a,b)', got {chunk!r}", 1, 1)
        body = chunk[1:-1]
        parts = body.split(",")
        if len(parts) != 2:
            raise ParseError(f"expected two coordinates in {chunk!r}", 1, 1)
        try:
            pt = (int(parts[0].strip()), int(parts[1].strip()))
        except ValueError:
            raise ParseError(f"non-integer coordinate in {chunk!r}", 1, 1) from None
        if abs(pt[0]) > COORD_LIMIT or abs(pt[1]) > COORD_LIMIT:
            raise ParseError(f"coordinate out of range in {chunk!r}", 1, 1)
        pts.append(pt)
    if not pts:
        raise ParseError("empty point list", 1, 1)
    return pts


def parse_family_line(line: str):
    """Parse one family-file line of the form "j: (a,b);(c,d);..."."""
    if ":" not in line:
        raise ParseError(f"expected 'label: points' in {line!r}", 1, 1)
    label, _, rest = line.partition(":")
    try:
        j = int(label.strip())
    except ValueError:
        raise ParseError(f"non-integer label in {line!r}", 1, 1) from None
    return j, parse_points(rest)
