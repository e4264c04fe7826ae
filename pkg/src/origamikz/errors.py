"""Exception types shared across the package."""


class OrigamiError(Exception):
    """Base class for every error this package raises on purpose."""


class InvalidShapeError(OrigamiError, ValueError):
    """Requested L-shape parameters do not give a genuine L."""


class OrbitCapExceeded(OrigamiError):
    """Orbit enumeration grew past the cap.  Carries the partial orbit."""

    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = frozenset(partial)


class BasisUnavailableError(OrigamiError):
    """The two requested directions do not give a 2+2 cylinder basis."""


class NoBasisFoundError(OrigamiError):
    """Direction search exhausted its cap without finding a basis."""


class RankError(OrigamiError):
    """A matrix that must be invertible is singular."""


class IntegralityError(OrigamiError):
    """A quantity that must be an integer came out fractional."""


class UnimodularityError(OrigamiError):
    """A matrix that must have determinant 1 does not."""


class DegenerateConfigurationError(OrigamiError):
    """A crossing landed on a cone point even after offset retries."""


class TracingError(OrigamiError):
    """A geodesic trace did not behave as required (internal check)."""


class IndexCapExceeded(OrigamiError):
    """Coset enumeration exceeded the live-coset cap.

    The subgroup index may be finite but large, or infinite; the
    enumeration cannot tell the two apart.
    """
