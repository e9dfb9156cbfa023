"""Exception hierarchy.

Three families matter to callers (and to the CLI exit codes):
``ResourceRefusal`` for searches refused or cut off by a configured ceiling,
``SearchFailure`` for bounded searches that ran to completion without an
answer, and plain ``ValueError`` subclasses for violated preconditions.
"""


class PseudofieldError(Exception):
    pass


class ResourceRefusal(PseudofieldError):
    pass


class SearchFailure(PseudofieldError):
    pass


class BudgetTooLarge(ResourceRefusal):
    pass


class EnumerationTooLarge(ResourceRefusal):
    pass


class DeadlineExceeded(ResourceRefusal):
    pass


class PrincipalityNotFound(SearchFailure):
    pass


class FactorizationUnsupported(SearchFailure):
    pass


class CycleSearchExhausted(SearchFailure):
    pass


class NoIntegerSolution(SearchFailure):
    pass


class EndpointRoot(SearchFailure):
    pass


class ZeroInverse(PseudofieldError, ZeroDivisionError):
    pass


class NotResidue(PseudofieldError, ValueError):
    pass


class BadModulus(PseudofieldError, ValueError):
    pass


class FieldMismatch(PseudofieldError, ValueError):
    pass


class ZeroTarget(PseudofieldError, ValueError):
    pass


class NotARoot(PseudofieldError, ValueError):
    pass


class ZeroPolynomial(PseudofieldError, ValueError):
    pass


class NotCoprime(PseudofieldError, ValueError):
    pass


class NotMonicModL(PseudofieldError, ValueError):
    pass


class PreconditionViolated(PseudofieldError, ValueError):
    pass


class NotPrimitive(PseudofieldError, ValueError):
    pass


class NotIrreducible(PseudofieldError, ValueError):
    pass


class DegreeUnsupported(PseudofieldError, ValueError):
    pass


class DegreeTooLow(PseudofieldError, ValueError):
    pass


class NotInCover(PseudofieldError, ValueError):
    pass
