"""Exact coefficient arithmetic.

Scalars are plain Python values: `fractions.Fraction` over the rationals and
canonical int residues in `range(p)` over a prime field.  The field objects
carry the arithmetic; everything downstream (polynomials, tables, solvers)
stays field-generic by calling through them.
"""

from fractions import Fraction
from math import gcd

from .errors import (
    NonInvertibleDenominatorError,
    ParseError,
    ZeroDenominatorError,
)


def _normalize_sign(text):
    # accept the unicode minus that shows up in copy-pasted input
    return text.replace("−", "-").replace("–", "-").strip()


class RationalField:
    """Arbitrary-precision rational numbers."""

    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def parse(self, text):
        s = _normalize_sign(text)
        if not s:
            raise ParseError("empty scalar")
        body = s[1:] if s[0] in "+-" else s
        num, sep, den = body.partition("/")
        if not num.isdigit() or (sep and not den.isdigit()):
            raise ParseError("bad scalar %r" % text)
        if sep and int(den) == 0:
            raise ZeroDenominatorError("zero denominator in %r" % text)
        return Fraction(s)

    def render(self, x):
        return str(x)

    def from_int(self, k):
        return Fraction(k)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    def inv(self, a):
        return self.div(self.one, a)

    def pow(self, a, k):
        return a ** k

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "RationalField()"


def _is_prime(p):
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if p % q == 0:
            return p == q
    # deterministic Miller-Rabin below 3.2e18, far beyond the 2^31 cap
    d, r = p - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """Integers modulo a prime p < 2^31, residues kept in range(p)."""

    def __init__(self, p):
        if not isinstance(p, int) or not 2 <= p < 2 ** 31 or not _is_prime(p):
            raise ValueError("modulus must be a prime below 2^31, got %r" % (p,))
        self.p = p
        self.zero = 0
        self.one = 1 % p

    @property
    def name(self):
        return "F%d" % self.p

    def parse(self, text):
        s = _normalize_sign(text)
        if not s:
            raise ParseError("empty scalar")
        body = s[1:] if s[0] in "+-" else s
        num, sep, den = body.partition("/")
        if not num.isdigit() or (sep and not den.isdigit()):
            raise ParseError("bad scalar %r" % text)
        sign = -1 if s[0] == "-" else 1
        value = sign * int(num) % self.p
        if sep:
            if int(den) == 0:
                raise ZeroDenominatorError("zero denominator in %r" % text)
            d = int(den) % self.p
            if d == 0:
                raise NonInvertibleDenominatorError(
                    "denominator %s is not invertible mod %d" % (den, self.p))
            value = value * pow(d, -1, self.p) % self.p
        return value

    def render(self, x):
        return str(x)

    def from_int(self, k):
        return k % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError("division by zero in F%d" % self.p)
        return a * pow(b, -1, self.p) % self.p

    def inv(self, a):
        return self.div(1, a)

    def pow(self, a, k):
        return pow(a, k, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p


QQ = RationalField()


def parse_field(tag):
    """Field from its header tag: "Q" or "F<p>"."""
    tag = tag.strip()
    if tag == "Q":
        return QQ
    if tag.startswith("F") and tag[1:].isdigit():
        try:
            return PrimeField(int(tag[1:]))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError("unknown field tag %r" % tag)


def scalar_parse(text, field=QQ):
    """Parse "p" or "p/q" (optional sign) into a canonical field value."""
    return field.parse(text)


def scalar_render(value, field=QQ):
    return field.render(value)


def gcd_vector(v):
    """Nonnegative gcd of an integer vector; 0 for the zero vector."""
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g
