"""Exception hierarchy shared by every qmat module."""


class QMatError(Exception):
    """Base class for all qmat errors."""


# fields
class NonPrime(QMatError, ValueError):
    pass


class ReducibleModulus(QMatError, ValueError):
    pass


class DegreeMismatch(QMatError, ValueError):
    pass


class FieldMismatch(QMatError, ValueError):
    pass


class DivisionByZero(QMatError, ZeroDivisionError):
    pass


class DependentBasis(QMatError, ValueError):
    pass


class FieldTowerMismatch(QMatError, ValueError):
    pass


# subspaces and enumeration
class AmbientMismatch(QMatError, ValueError):
    pass


class InvalidRange(QMatError, ValueError):
    pass


class EnumerationTooLarge(QMatError, RuntimeError):
    """An exhaustive computation would exceed the configured subspace budget."""


# matroids
class IncompleteTable(QMatError, ValueError):
    pass


class AxiomViolation(QMatError, ValueError):
    """Raised when a proposed rank table or polymatroid fails its axioms.

    ``report`` carries the full :class:`~qmat.crypto.AxiomReport` (or a plain
    list of violations) so the failure can be replayed.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotANode(QMatError, KeyError):
    pass


class InvalidZLattice(QMatError, ValueError):
    pass


class NotALattice(QMatError, ValueError):
    pass


# codes
class NotFullRank(QMatError, ValueError):
    pass


class DegenerateCode(QMatError, ValueError):
    pass


class ConfigInvalid(QMatError, ValueError):
    pass
