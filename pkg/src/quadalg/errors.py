"""Exception hierarchy shared by all quadalg modules."""


class QuadalgError(Exception):
    """Base class for all quadalg errors."""


# -- ring construction and arithmetic ---------------------------------------

class NonAssociative(QuadalgError):
    """Structure constants define a non-associative multiplication."""


class NonCommutative(QuadalgError):
    """Structure constants define a non-commutative multiplication."""


class NoIdentity(QuadalgError):
    """Structure constants admit no multiplicative identity."""


class RingMismatch(QuadalgError):
    """Operands belong to different rings."""


class NotTwoRegular(QuadalgError):
    """Operation requires a ring where 2 is not a zero divisor."""


class UnsupportedRing(QuadalgError):
    """Operation is not implemented for this ring kind."""


class InfiniteRing(QuadalgError):
    """Exhaustive operation called on an infinite ring."""


class UnitSearchCapExceeded(QuadalgError):
    """Fundamental-unit search exceeded the continued-fraction cap."""


class NotAUnit(QuadalgError):
    """A ring element required to be a unit is not one."""


# -- forms -------------------------------------------------------------------

class SingularMatrix(QuadalgError):
    """Matrix determinant is not a unit."""


class NotDefinite(QuadalgError):
    """Form is not (positive or negative) definite."""


class DiscriminantMismatch(QuadalgError):
    """Forms have different discriminants."""


class InvalidDiscriminant(QuadalgError):
    """Integer is not a valid (negative, 0/1 mod 4) discriminant."""


class NotPrimitive(QuadalgError):
    """Form coefficients do not generate the unit ideal."""


# -- algebras ----------------------------------------------------------------

class ParityMismatch(QuadalgError):
    """Chosen lift does not reduce to the required parity."""


class InvalidTriple(QuadalgError):
    """(discriminant, parity) pair is not the type of any algebra."""


class BadLift(QuadalgError):
    """Supplied lift does not reduce to the given parity class."""


class BadParityLift(QuadalgError):
    """Integer lift has the wrong parity for the discriminant."""


# -- picard ------------------------------------------------------------------

class TypeMismatch(QuadalgError):
    """Form type does not match the target order."""


class ZeroLeadingCoefficient(QuadalgError):
    """Form has a = 0; move to an equivalent form with a != 0 first."""


class OrderMismatch(QuadalgError):
    """Ideals belong to different quadratic orders."""


class NotInvertible(QuadalgError):
    """Ideal is not invertible."""


# -- glue and cli ------------------------------------------------------------

class ValidationFailed(QuadalgError):
    """Cover/cocycle/type data failed a glueing validation."""


class InvalidRange(QuadalgError):
    """Bad discriminant range for table emission."""
