"""Exception hierarchy.

Every error carries a ``code`` (its class name, used in CLI JSON output) and
belongs to one of three families that map to CLI exit codes:

* :class:`InputError` -- malformed text, bad configuration (exit 1)
* :class:`HypothesisError` -- a mathematical precondition fails (exit 2)
* :class:`InternalError` -- an identity that must hold did not (exit 3)
"""


class Sl2Error(Exception):
    exit_code = 1

    @property
    def code(self) -> str:
        return type(self).__name__


class InputError(Sl2Error):
    exit_code = 1


class HypothesisError(Sl2Error):
    exit_code = 2


class InternalError(Sl2Error, AssertionError):
    exit_code = 3


# configuration / parsing
class BadModulus(InputError):
    pass


class FieldMismatch(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)

    @property
    def code(self) -> str:
        return "SyntaxError"


class UnknownVariable(InputError):
    pass


class MultivariateUnsupported(InputError):
    pass


class PayloadError(InputError):
    pass


# ring arithmetic
class DivisionByZero(HypothesisError):
    pass


class NotDivisible(HypothesisError):
    pass


# sl2 / GL2
class NotATriple(HypothesisError):
    pass


class ZeroElement(HypothesisError):
    pass


class NotInvertibleOverR(HypothesisError):
    pass


class NotInvolution(HypothesisError):
    pass


class DegenerateCase(HypothesisError):
    pass


class NotNilpotent(HypothesisError):
    pass


class BadCertificate(HypothesisError):
    pass


class NotComaximal(HypothesisError):
    pass


class NotAdDiagonalizable(HypothesisError):
    pass


class NotMember(HypothesisError):
    pass


class RequiresSquareRoot(HypothesisError):
    pass


# automorphisms / derivations
class NotADerivation(HypothesisError):
    pass


class InconsistentDiagonalData(HypothesisError):
    pass


class NotDiagonalAfterStandardization(HypothesisError):
    pass


class NotInvertibleSubstitution(HypothesisError):
    pass


# internal identities
class InternalNonUnitQuotient(InternalError):
    pass


class InternalShapeViolation(InternalError):
    pass


class LemmaViolation(InternalError):
    pass
