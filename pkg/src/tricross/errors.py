"""Exception types shared across the package.

Every rejection of bad input raises a subclass of TricrossError, so callers
(and the command line driver) can map failures to outcomes without string
matching.  Parse failures and resource-cap failures get their own branches
of the hierarchy because they exit with different status codes.
"""

from __future__ import annotations

__all__ = [
    "TricrossError",
    "MapError",
    "NotInvolution",
    "WrongValence",
    "NotSphere",
    "Disconnected",
    "ParseError",
    "LabelCountError",
    "ColoringImpossible",
    "OrientationInconsistent",
    "ParityError",
    "BoundViolation",
    "PreconditionViolated",
    "BadParameters",
    "DisconnectedClosure",
    "NotAKnot",
    "NotCoprime",
    "RangeError",
    "ResourceCap",
    "TooLarge",
    "GiveUp",
]


class TricrossError(Exception):
    """Base class for all domain errors raised by this package."""


class MapError(TricrossError):
    """A combinatorial map failed structural validation."""


class NotInvolution(MapError):
    """alpha is not a fixed-point-free involution on the darts."""


class WrongValence(MapError):
    """sigma is malformed, or vertex valences are not uniformly 4 or 6."""


class NotSphere(MapError):
    """Euler count V - E + F differs from 2."""


class Disconnected(MapError):
    """The map (or the diagram's shadow) is not connected."""


class ParseError(TricrossError):
    """Malformed diagram text."""


class LabelCountError(ParseError):
    """Edge labels do not tile 1..2E with each label used exactly twice."""


class ColoringImpossible(MapError):
    """No proper face 2-coloring exists; unreachable for validated input."""


class OrientationInconsistent(TricrossError):
    """The white-on-the-right edge directions do not agree along a strand."""


class ParityError(TricrossError):
    """The genus formula produced a non-integer; signals internal breakage."""


class BoundViolation(TricrossError):
    """A certified inequality failed on actual data; signals internal breakage."""


class PreconditionViolated(TricrossError):
    """Operation invoked on data that fails its stated entry conditions."""


class BadParameters(TricrossError):
    """Numeric arguments out of the documented domain."""


class DisconnectedClosure(BadParameters):
    """Braid word skips a generator, so its closure is a split link."""


class NotAKnot(TricrossError):
    """Operation needs a one-component closure but got a link."""


class NotCoprime(BadParameters):
    """Torus parameters share a factor."""


class RangeError(TricrossError):
    """Tabulated knot data out of range or malformed."""


class ResourceCap(TricrossError):
    """A configured size or attempt budget was exceeded."""


class TooLarge(ResourceCap):
    """Input exceeds a hard size cap (state-sum width, enumeration size)."""


class GiveUp(ResourceCap):
    """Random search exhausted its attempt budget."""
