"""Exact universal Groebner bases of zero-dimensional ideals.

The pipeline enumerates the chambers of a direction arrangement that is
shared by every ideal with the same number of points and variables, then
converts one input basis once per chamber.  Everything is exact: rational
or prime field scalars, rational linear programming, no floating point.
"""

from .errors import (BadSubsetError, ClassDeficitError,
                     DimensionUnsupportedError, DuplicatePointsError,
                     InvalidBasisError, MissingPredecessorError,
                     NonGenericWeightError, NonInvertibleDenominatorError,
                     NotAStaircaseError, NotBinomialError,
                     NotZeroDimensionalError, ParseError, RankCollapseError,
                     RankDeficientError, SingularBasisError, SPairBudgetError,
                     TooLargeError, UgbError, ZeroDenominatorError)
from .fields import QQ, PrimeField, RationalField, parse_field
from .staircases import (Staircase, enumerate_staircases, format_vector,
                         grlex_key, is_staircase, min_gaps, parse_vector,
                         staircase_sum, staircase_union, table_support)
from .orders import (MonomialOrder, deglex_order, degrevlex_order, lex_order,
                     order_to_spec, parse_order_spec, weight_order)
from .polynomials import (Polynomial, format_polynomial, parse_polynomial,
                          poly_eval)
from .groebner import (CoeffTable, ConversionResult, ReducedGroebnerBasis,
                       check_weight_generic, convert_basis, initial_staircase,
                       normal_form_table, rgb_from_polynomials,
                       validate_reduced_gb)
from .zonotope import (Chamber, DirectionSet, all_chambers, positive_chambers,
                       primitive_differences, zonotope_vertex)
from .ideals import (LatticeBasis, TestSet, from_lattice, from_points,
                     lattice_minimize, lattice_test_set, monomial_ideal)
from .oracle import (brute_initial_staircases, buchberger, divide, is_basic,
                     matroid_edge_check, plucker_dual, positive_hull_vertices,
                     support_relation_rank, verify_result)
from .driver import (StatePolyhedron, UgbResult, compute_ugb,
                     result_from_json, result_to_json, state_polyhedron,
                     universal_order_set)

__version__ = "0.1.0"
