"""Monomial orders as rational weight-row towers.

An order compares two exponent vectors row by row (exact rational dot
products) and falls back to a variable-priority lexicographic comparison, so
the comparison is always a strict total order.  The named orders compile to
towers: deglex is the degree row, degrevlex is the degree row followed by
negated reversed unit rows.
"""

from fractions import Fraction

from .errors import ParseError


class MonomialOrder:
    """Weight rows compared lexicographically, then priority-lex fallback.

    `tiebreak` lists variable indices by decreasing priority; the default
    (0, 1, ..., d-1) means x1 > x2 > ... > xd on ties.
    """

    __slots__ = ("d", "weight_rows", "tiebreak")

    def __init__(self, d, weight_rows=(), tiebreak=None):
        self.d = d
        rows = tuple(tuple(Fraction(x) for x in row) for row in weight_rows)
        for row in rows:
            if len(row) != d:
                raise ValueError("weight row %r does not have %d entries" % (row, d))
        self.weight_rows = rows
        tb = tuple(tiebreak) if tiebreak is not None else tuple(range(d))
        if sorted(tb) != list(range(d)):
            raise ValueError("tiebreak %r is not a permutation of 0..%d" % (tb, d - 1))
        self.tiebreak = tb

    def key(self, u):
        """Sort key; ascending sort lists exponents in increasing order."""
        dots = tuple(sum(w * x for w, x in zip(row, u)) for row in self.weight_rows)
        return dots + tuple(u[i] for i in self.tiebreak)

    def compare(self, u, v):
        """-1, 0 or +1 as u precedes, equals or follows v."""
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return -1
        if ku > kv:
            return 1
        return 0

    def leading(self, exponents):
        return max(exponents, key=self.key)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and other.d == self.d
                and other.weight_rows == self.weight_rows
                and other.tiebreak == self.tiebreak)

    def __hash__(self):
        return hash((self.d, self.weight_rows, self.tiebreak))

    def __repr__(self):
        return "MonomialOrder(d=%d, weight_rows=%r, tiebreak=%r)" % (
            self.d, self.weight_rows, self.tiebreak)


def lex_order(d, priority=None):
    return MonomialOrder(d, (), priority)


def deglex_order(d, priority=None):
    return MonomialOrder(d, ((1,) * d,), priority)


def degrevlex_order(d, priority=None):
    pr = tuple(priority) if priority is not None else tuple(range(d))
    rows = [(1,) * d]
    for i in reversed(pr):
        row = [0] * d
        row[i] = -1
        rows.append(tuple(row))
    return MonomialOrder(d, rows, pr)


def weight_order(weights, tiebreak=None):
    d = len(weights)
    return MonomialOrder(d, (tuple(weights),), tiebreak)


def _parse_priority(text, d):
    names = [p.strip() for p in text.split(">")]
    idx = []
    for name in names:
        if not name.startswith("x") or not name[1:].isdigit():
            raise ParseError("bad variable %r in order spec" % name)
        i = int(name[1:]) - 1
        if not 0 <= i < d:
            raise ParseError("variable %r out of range for d=%d" % (name, d))
        idx.append(i)
    if sorted(idx) != list(range(d)):
        raise ParseError("order spec must list each of x1..x%d exactly once" % d)
    return tuple(idx)


def _parse_weight_rows(text, d):
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError("weights must look like [(3,2),(1,1)], got %r" % text)
    body = s[1:-1]
    rows = []
    depth = 0
    current = ""
    for c in body + ",":
        if c == "(":
            depth += 1
            current = ""
        elif c == ")":
            depth -= 1
            parts = [p.strip() for p in current.split(",")]
            if len(parts) != d:
                raise ParseError("weight row (%s) does not have %d entries" % (current, d))
            try:
                rows.append(tuple(Fraction(p.replace("−", "-")) for p in parts))
            except (ValueError, ZeroDivisionError):
                raise ParseError("bad weight row (%s)" % current) from None
        elif depth == 1:
            current += c
        elif c not in ", ":
            raise ParseError("bad weights text %r" % text)
    if not rows:
        raise ParseError("empty weight list in %r" % text)
    return tuple(rows)


def parse_order_spec(text, d):
    """Order from "lex:x2>x1", "deglex", "degrevlex:x1>x2" or
    "weights:[(3,2)];tiebreak:x1>x2"."""
    s = text.strip()
    head, sep, rest = s.partition(":")
    head = head.strip()
    if head in ("lex", "deglex", "degrevlex"):
        priority = _parse_priority(rest, d) if sep else None
        maker = {"lex": lex_order, "deglex": deglex_order,
                 "degrevlex": degrevlex_order}[head]
        return maker(d, priority)
    if head == "weights":
        if not sep:
            raise ParseError("weights spec needs a row list")
        w_part, _, tb_part = rest.partition(";")
        rows = _parse_weight_rows(w_part, d)
        tiebreak = None
        if tb_part:
            tag, tsep, tval = tb_part.partition(":")
            if tag.strip() != "tiebreak" or not tsep:
                raise ParseError("expected tiebreak:... after weights, got %r" % tb_part)
            tiebreak = _parse_priority(tval, d)
        return MonomialOrder(d, rows, tiebreak)
    raise ParseError("unknown order spec %r" % text)


def order_to_spec(order):
    """Inverse of parse_order_spec, emitting the weights form."""
    tb = ">".join("x%d" % (i + 1) for i in order.tiebreak)
    if not order.weight_rows:
        return "lex:%s" % tb
    rows = ",".join("(" + ",".join(str(x) for x in row) + ")"
                    for row in order.weight_rows)
    return "weights:[%s];tiebreak:%s" % (rows, tb)
