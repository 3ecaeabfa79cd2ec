"""Exception hierarchy.

Every error that a caller is expected to catch has its own class; the CLI
maps them onto its exit-code contract (2 input, 3 bound, 4 inconclusive,
5 failed check).
"""


class DivalgError(Exception):
    """Base class for all library errors."""


class InputError(DivalgError):
    """Malformed catalog data, element coordinates or CLI arguments."""


class FieldMismatch(InputError):
    """Operands live in different fields (or in an unrelated tower)."""


class AlgebraMismatch(InputError):
    """Operands live in different algebras."""


class DivisionByZero(DivalgError, ZeroDivisionError):
    pass


class ZeroInput(InputError):
    """A nonzero element was required."""


class NotInvertible(DivalgError):
    """Reduced norm vanished on a nonzero element; in a certified division
    algebra this indicates corrupt input or a wrong certificate."""


class ResultNotInBaseField(DivalgError):
    """A value that must lie in the base field had nonzero upper coordinates;
    signals a catalog bug, not a user error."""


class NonCommutative(DivalgError):
    """Generators of a would-be subfield do not commute."""


class DegreeOverflow(DivalgError):
    """A commutative subalgebra exceeded the algebra degree; impossible in a
    division algebra, so the input algebra cannot be one."""


class NotAUnit(InputError):
    pass


class NotCentral(InputError):
    """Commutator pairing applied to classes that do not commute."""


class NonTorsionPairingValue(DivalgError):
    """A commutator value was not a root of unity."""


class NotMaximalOrder(InputError):
    """Cyclic complement requested for an element of non-maximal order."""


class NotNormal(InputError):
    pass


class NoBalancedProduct(InputError):
    """No trivial-centre semidirect product exists for the given (n, p)."""


class BoundExceeded(DivalgError):
    """A closure or search ran past its configured bound.  Distinct from a
    definite negative answer."""


class SearchBoundExceeded(BoundExceeded):
    """An embedding search exhausted its candidate bound without success."""


class HeuristicInconclusive(DivalgError):
    """A bounded search could neither find a witness nor prove absence.
    Raised only for fields without an exact power-test engine."""


class StabilityCheckFailed(DivalgError):
    """An invariance property that is guaranteed on valid input failed;
    signals an implementation or catalog error."""


class CrossCheckFailed(DivalgError):
    """Two independent derivations of the same fact disagreed.  Always a
    bug somewhere; never expected on any input."""
