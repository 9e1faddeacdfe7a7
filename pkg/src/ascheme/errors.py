"""Exception hierarchy for scheme analysis.

Every failure mode gets its own class so callers can match on type instead
of parsing messages.  Parse and axiom errors carry enough location data to
point at the offending entry of a color matrix.
"""


class SchemeError(Exception):
    """Base class for all errors raised by this package."""


# ---------------------------------------------------------------------------
# parse errors

class ParseError(SchemeError):
    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {col}" if col is not None else "") + ")"
        super().__init__(message + loc)


class MalformedHeader(ParseError):
    pass


class NonSquareBody(ParseError):
    pass


class OutOfRangeEntry(ParseError):
    pass


class NonzeroDiagonal(ParseError):
    pass


class MissingRelationIndex(ParseError):
    pass


# ---------------------------------------------------------------------------
# axiom violations

class AxiomViolation(SchemeError):
    """A color matrix is not an association scheme."""


class TransposeNotRelation(AxiomViolation):
    """Some relation's transpose is not a single relation class."""

    def __init__(self, i, x, y, expected, found):
        self.i, self.x, self.y = i, x, y
        self.expected, self.found = expected, found
        super().__init__(
            f"transpose of relation {i} is not a relation: arc ({x},{y}) has "
            f"color {i} but ({y},{x}) has color {found}, expected {expected}"
        )


class InconsistentIntersectionNumber(AxiomViolation):
    """p_{ij}^l is not constant over the pairs of some relation class."""

    def __init__(self, i, j, l, pair_a, count_a, pair_b, count_b):
        self.i, self.j, self.l = i, j, l
        self.pair_a, self.count_a = pair_a, count_a
        self.pair_b, self.count_b = pair_b, count_b
        super().__init__(
            f"intersection number p[{i},{j}]^{l} not constant: "
            f"pair {pair_a} gives {count_a}, pair {pair_b} gives {count_b}"
        )


class NonCommutative(SchemeError):
    """Operation requires a commutative scheme."""


# ---------------------------------------------------------------------------
# spectral errors

class EigenSeparationFailure(SchemeError):
    """Random combinations failed to separate the common eigenspaces."""


class MultiplicityNotIntegral(SchemeError):
    def __init__(self, row, value):
        self.row, self.value = row, value
        super().__init__(f"multiplicity of eigenrow {row} is {value}, not an integer")


class ClusteringAmbiguity(SchemeError):
    """Two eigenvalues are too close to cluster but too far to merge."""


class ToleranceAmbiguity(SchemeError):
    """A floating comparison fell into the ambiguous band around the tolerance."""


# ---------------------------------------------------------------------------
# fusion errors

class TooManyClasses(SchemeError):
    """Partition enumeration guard: too many classes to enumerate."""


class NotAScheme(SchemeError):
    """A fused coloring violates the scheme axioms."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NormalFormUnreachable(SchemeError):
    """No row/column permutation brings a table to amorphic normal form."""


class MatchingAmbiguous(SchemeError):
    """Eigenrow matching between a scheme and its symmetrization is ambiguous."""


# ---------------------------------------------------------------------------
# fission / classification errors

class SplitRowMismatch(SchemeError):
    """Computed fission table does not match the predicted split-row pattern."""


class TypeUnclassifiable(SchemeError):
    """A skew 4-class table fits none of the three fission types."""


# ---------------------------------------------------------------------------
# strongly regular graph errors

class NotStronglyRegular(SchemeError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class InfeasibleParameters(SchemeError):
    """SRG parameters fail an integrality or sign condition."""


# ---------------------------------------------------------------------------
# builder errors

class NotPrime(SchemeError):
    """Cyclotomic builder needs a prime power field order."""


class BadDivisor(SchemeError):
    """Cyclotomic class count must divide q - 1."""


class NotTransitive(SchemeError):
    """Orbital construction needs a transitive group."""


class TooLarge(SchemeError):
    """Construction exceeds the supported size bounds."""
