"""Exception hierarchy.

Every error the library raises on bad mathematical input derives from
:class:`PrymHitchinError`; the CLI reports the class name verbatim.
"""


class PrymHitchinError(Exception):
    """Base class for all library errors."""


# exact algebra
class NonSquareMatrix(PrymHitchinError):
    pass


class NotAntisymmetric(PrymHitchinError):
    pass


class OddDimension(PrymHitchinError):
    pass


class NotASquare(PrymHitchinError):
    pass


class DimensionMismatch(PrymHitchinError):
    pass


# cover geometry
class InadmissibleCover(PrymHitchinError):
    pass


class OutOfValidityWindow(PrymHitchinError):
    pass


# spectral model
class InvalidGerm(PrymHitchinError):
    """A section germ violates the parity rule of its chart and linearization."""


class WrongChart(PrymHitchinError):
    pass


class LinearizationMismatch(PrymHitchinError):
    pass


class ParityError(PrymHitchinError):
    pass


# higgs fields
class StructureViolation(PrymHitchinError):
    pass


class InternalInvariantError(AssertionError):
    """A theorem-level identity failed on a valid input; this is a bug."""


# moduli tables
class ParityViolation(PrymHitchinError):
    pass


class EmptyLocus(PrymHitchinError):
    pass


class InadmissibleInput(PrymHitchinError):
    pass


class UnknownScenario(PrymHitchinError):
    pass


class GridTooLarge(PrymHitchinError):
    pass


class IdentityFailure(PrymHitchinError):
    """Raised by the identity sweep on the first failing check."""

    def __init__(self, check):
        self.check = check
        super().__init__(
            f"{check.family} failed at g_Y={check.g_Y}, n={check.n}, r={check.r}"
            f"{'' if check.k_p is None else f', k_p={check.k_p}'}: "
            f"{check.lhs} != {check.rhs}"
        )
