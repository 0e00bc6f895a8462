"""Polynomials as immutable exponent-to-coefficient maps over a field."""

import re

from .errors import ParseError
from .fields import QQ
from .staircases import grlex_key

_TERM_VAR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


class Polynomial:
    """Sparse polynomial; zero coefficients are never stored."""

    __slots__ = ("terms", "field")

    def __init__(self, terms, field=QQ):
        clean = {}
        for exp, c in dict(terms).items():
            if c != field.zero:
                clean[tuple(exp)] = c
        self.terms = clean
        self.field = field

    @classmethod
    def zero(cls, field=QQ):
        return cls({}, field)

    @classmethod
    def monomial(cls, exp, coeff=None, field=QQ):
        return cls({tuple(exp): field.one if coeff is None else coeff}, field)

    def is_zero(self):
        return not self.terms

    def coeff(self, exp):
        return self.terms.get(tuple(exp), self.field.zero)

    def add(self, other):
        f = self.field
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = f.add(out.get(exp, f.zero), c)
        return Polynomial(out, f)

    def sub(self, other):
        f = self.field
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = f.sub(out.get(exp, f.zero), c)
        return Polynomial(out, f)

    def neg(self):
        f = self.field
        return Polynomial({e: f.neg(c) for e, c in self.terms.items()}, f)

    def scale(self, c):
        f = self.field
        return Polynomial({e: f.mul(c, v) for e, v in self.terms.items()}, f)

    def shift_mul(self, exp, coeff):
        """Multiply by coeff * x^exp."""
        f = self.field
        out = {}
        for e, c in self.terms.items():
            out[tuple(a + b for a, b in zip(e, exp))] = f.mul(c, coeff)
        return Polynomial(out, f)

    def leading_exponent(self, order):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return order.leading(self.terms)

    def leading_coeff(self, order):
        return self.terms[self.leading_exponent(order)]

    def monic(self, order):
        lc = self.leading_coeff(order)
        return self if lc == self.field.one else self.scale(self.field.inv(lc))

    def __eq__(self, other):
        return (isinstance(other, Polynomial)
                and other.field == self.field
                and other.terms == self.terms)

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return "Polynomial(%s)" % format_polynomial(self)


def poly_eval(poly, point):
    """Evaluate at a point given as a tuple of field values; 0^0 = 1."""
    f = poly.field
    total = f.zero
    for exp, c in poly.terms.items():
        v = c
        for base, k in zip(point, exp):
            if k:
                v = f.mul(v, f.pow(base, k))
        total = f.add(total, v)
    return total


def format_polynomial(poly):
    """Canonical text: terms in decreasing graded-lex order."""
    if not poly.terms:
        return "0"
    f = poly.field
    pieces = []
    for exp in sorted(poly.terms, key=grlex_key, reverse=True):
        c = poly.terms[exp]
        text = f.render(c)
        negative = text.startswith("-")
        mag = text[1:] if negative else text
        vars_part = "*".join(
            "x%d" % (i + 1) if e == 1 else "x%d^%d" % (i + 1, e)
            for i, e in enumerate(exp) if e)
        if not vars_part:
            body = mag
        elif mag == "1":
            body = vars_part
        else:
            body = mag + "*" + vars_part
        if not pieces:
            pieces.append("-" + body if negative else body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces)


def parse_polynomial(text, d, field=QQ):
    """Parse a sum of terms like "3*x1^2*x2", "-x2", "1/6*x2^2" or "5"."""
    s = text.replace("−", "-").strip()
    if not s:
        raise ParseError("empty polynomial")
    # normalize: strip spaces, make every term carry an explicit sign
    s = s.replace(" ", "")
    if s[0] not in "+-":
        s = "+" + s
    chunks = re.findall(r"[+-][^+-]+", s)
    if "".join(chunks) != s:
        raise ParseError("bad polynomial text %r" % text)
    terms = {}
    for chunk in chunks:
        sign, body = chunk[0], chunk[1:]
        if not body:
            raise ParseError("dangling sign in %r" % text)
        coeff = field.one
        exp = [0] * d
        for part in body.split("*"):
            m = _TERM_VAR.match(part)
            if m:
                i = int(m.group(1)) - 1
                if not 0 <= i < d:
                    raise ParseError("variable x%s out of range for d=%d"
                                     % (m.group(1), d))
                exp[i] += int(m.group(2)) if m.group(2) else 1
            else:
                coeff = field.mul(coeff, field.parse(part))
        if sign == "-":
            coeff = field.neg(coeff)
        key = tuple(exp)
        terms[key] = field.add(terms.get(key, field.zero), coeff)
    return Polynomial(terms, field)
