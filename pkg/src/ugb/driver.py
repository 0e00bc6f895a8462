"""End-to-end pipeline: one basis conversion per positive chamber witness,
assembled into the set of initial staircases, the state polyhedron and the
universal basis, plus the JSON form of the result.
"""

import re
from collections import namedtuple
from functools import lru_cache

from .errors import InvalidBasisError, ParseError
from .groebner import (ReducedGroebnerBasis, convert_basis, initial_staircase,
                       normal_form_table, validate_reduced_gb)
from .orders import order_to_spec, parse_order_spec
from .polynomials import Polynomial, format_polynomial, parse_polynomial
from .fields import parse_field
from .staircases import (Staircase, format_vector, grlex_key, parse_vector,
                         staircase_sum)
from .zonotope import positive_chambers

_VECTOR_CHUNK = re.compile(r"\([^()]*\)")


@lru_cache(maxsize=None)
def _cached_witnesses(n, d):
    return tuple(c.witness for c in positive_chambers(n, d))


def universal_order_set(n, d):
    """Positive chamber witnesses for the given parameters: one generic
    positive weight per chamber, integer-scaled.  Any ideal of the same
    parameters can reuse the list."""
    return list(_cached_witnesses(n, d))


def polynomial_sort_key(poly):
    """Canonical presentation key: graded-lex head, then the tail terms."""
    f = poly.field
    terms = sorted(poly.terms, key=grlex_key, reverse=True)
    return (grlex_key(terms[0]),
            tuple((grlex_key(e), f.render(poly.terms[e])) for e in terms))


def staircase_sort_key(stair):
    return (staircase_sum(stair), stair.elements)


class UgbResult:
    """Everything the pipeline produces for one ideal."""

    __slots__ = ("n", "d", "field", "initial_staircases", "state_vertices",
                 "reduced_bases", "universal_basis", "witness_assignment")

    def __init__(self, n, d, field, initial_staircases, state_vertices,
                 reduced_bases, universal_basis, witness_assignment):
        self.n = n
        self.d = d
        self.field = field
        self.initial_staircases = frozenset(initial_staircases)
        self.state_vertices = frozenset(tuple(v) for v in state_vertices)
        self.reduced_bases = dict(reduced_bases)
        self.universal_basis = frozenset(universal_basis)
        self.witness_assignment = {tuple(w): s
                                   for w, s in dict(witness_assignment).items()}

    def staircases_sorted(self):
        return sorted(self.initial_staircases, key=staircase_sort_key)

    def universal_polynomials(self):
        return sorted(self.universal_basis, key=polynomial_sort_key)

    def __eq__(self, other):
        return (isinstance(other, UgbResult)
                and (other.n, other.d, other.field)
                == (self.n, self.d, self.field)
                and other.initial_staircases == self.initial_staircases
                and other.state_vertices == self.state_vertices
                and other.reduced_bases == self.reduced_bases
                and other.universal_basis == self.universal_basis
                and other.witness_assignment == self.witness_assignment)

    def __repr__(self):
        return ("UgbResult(n=%d, d=%d, staircases=%d, basis_size=%d)"
                % (self.n, self.d, len(self.initial_staircases),
                   len(self.universal_basis)))


def compute_ugb(basis, witnesses=None):
    """Run the whole pipeline on a valid reduced basis presentation.

    The coefficient table is built once; each chamber witness first runs
    the cheap staircase probe, and one full conversion is spent per
    distinct staircase discovered.  A precomputed witness list (one
    generic positive weight per chamber) can be passed in; by default it
    is derived on the fly.
    """
    violation = validate_reduced_gb(basis)
    if violation is not None:
        raise InvalidBasisError(violation)
    n, d = basis.n, basis.d
    table = normal_form_table(basis)
    if witnesses is None:
        witnesses = _cached_witnesses(n, d)
    assignment = {}
    bases = {}
    for w in witnesses:
        stair = initial_staircase(table, w)
        assignment[w] = stair
        if stair not in bases:
            bases[stair] = convert_basis(table, w).basis
    universal = set()
    for b in bases.values():
        universal.update(b.polynomials())
    return UgbResult(
        n, d, basis.field,
        initial_staircases=bases.keys(),
        state_vertices={staircase_sum(s) for s in bases},
        reduced_bases=bases,
        universal_basis=universal,
        witness_assignment=assignment)


StatePolyhedron = namedtuple("StatePolyhedron", ["vertices", "recession_rays"])


def state_polyhedron(result):
    """Vertex list plus the recession cone's extreme rays (the coordinate
    directions); no facet computation."""
    rays = tuple(tuple(1 if j == i else 0 for j in range(result.d))
                 for i in range(result.d))
    return StatePolyhedron(sorted(result.state_vertices), rays)


def staircase_key(stair):
    return " ".join(format_vector(v) for v in stair)


def parse_staircase_key(text, d):
    chunks = _VECTOR_CHUNK.findall(text)
    if not chunks:
        raise ParseError("no vectors in staircase key %r" % text)
    return Staircase([parse_vector(c, d) for c in chunks])


def result_to_json(result):
    """Plain-data form of a result, with exact scalars as strings."""
    bases = {}
    for stair in result.staircases_sorted():
        basis = result.reduced_bases[stair]
        bases[staircase_key(stair)] = {
            "order": order_to_spec(basis.order),
            "polys": [format_polynomial(p) for p in basis.polynomials()],
        }
    return {
        "n": result.n,
        "d": result.d,
        "field": result.field.name,
        "lambda": [staircase_key(s) for s in result.staircases_sorted()],
        "state_vertices": [format_vector(v)
                           for v in sorted(result.state_vertices)],
        "reduced_bases": bases,
        "ugb": [format_polynomial(p) for p in result.universal_polynomials()],
        "witnesses": {format_vector(w): staircase_key(s)
                      for w, s in sorted(result.witness_assignment.items())},
    }


def result_from_json(data):
    n = int(data["n"])
    d = int(data["d"])
    field = parse_field(data["field"])
    bases = {}
    for key, entry in data["reduced_bases"].items():
        stair = parse_staircase_key(key, d)
        order = parse_order_spec(entry["order"], d)
        polys = [parse_polynomial(t, d, field) for t in entry["polys"]]
        tails = {}
        for p in polys:
            head = p.leading_exponent(order)
            tails[head] = _tail_of(p, head, field)
        bases[stair] = ReducedGroebnerBasis(stair, tails, order, field)
    universal = {parse_polynomial(t, d, field) for t in data["ugb"]}
    witnesses = {}
    for wkey, skey in data["witnesses"].items():
        witnesses[parse_vector(wkey, d)] = parse_staircase_key(skey, d)
    return UgbResult(
        n, d, field,
        initial_staircases=set(bases),
        state_vertices={parse_vector(v, d)
                        for v in data["state_vertices"]},
        reduced_bases=bases,
        universal_basis=universal,
        witness_assignment=witnesses)


def _tail_of(poly, head, field):
    # head removed and the rest negated, so head == x^head - tail
    terms = {e: field.neg(c) for e, c in poly.terms.items() if e != head}
    return Polynomial(terms, field)
