"""Exception types shared across the package.

Guard overruns (TooLargeError, SPairBudgetError) are kept distinct from
malformed-input errors so the CLI can map them to separate exit codes.
"""


class UgbError(Exception):
    """Base class for all package errors."""


class ParseError(UgbError):
    """Malformed scalar, vector, polynomial, order or file text."""


class ZeroDenominatorError(ParseError):
    """Rational text with denominator zero."""


class NonInvertibleDenominatorError(UgbError):
    """Denominator divisible by the field characteristic."""


class NotAStaircaseError(UgbError):
    """Exponent set is not finite, not downward closed, or has duplicates."""


class TooLargeError(UgbError):
    """An enumeration guard (staircases, chambers, minors) was exceeded."""


class NonGenericWeightError(UgbError):
    """Weight vector lies on a hyperplane it must avoid, or is not positive."""


class MissingPredecessorError(UgbError):
    """Normal-form recurrence hit a column with no processed predecessor."""


class RankDeficientError(UgbError):
    """Coefficient table has rank below the basis size."""


class RankCollapseError(UgbError):
    """Evaluation columns span less than n dimensions; internal error."""


class NotZeroDimensionalError(UgbError):
    """Head set fails to contain a pure power of every variable."""


class SPairBudgetError(UgbError):
    """Buchberger loop exceeded its configured S-pair budget."""


class BadSubsetError(UgbError):
    """Column subset is not a size-n subset of the table columns."""


class DimensionUnsupportedError(UgbError):
    """Operation implemented only for small dimension."""


class DuplicatePointsError(UgbError):
    """Point configuration contains a repeated point."""


class SingularBasisError(UgbError):
    """Lattice basis matrix has determinant zero."""


class ClassDeficitError(UgbError):
    """Fewer residue classes were found than the lattice index requires."""


class NotBinomialError(UgbError):
    """Polynomial expected to be a difference of two monomials is not."""


class InvalidBasisError(UgbError):
    """A reduced Groebner basis failed validation."""

    def __init__(self, violation):
        super().__init__(str(violation))
        self.violation = violation
