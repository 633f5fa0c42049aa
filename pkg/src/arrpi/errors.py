"""Exception hierarchy.

Domain errors (bad geometry, non-generic data, diagram violations) are
distinguished from input errors (malformed files) so the CLI can map them
to exit codes 1 and 2 respectively.
"""


class ArrpiError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ArrpiError):
    """Malformed input file or unparsable expression."""


class DomainError(ArrpiError):
    """Mathematically invalid request on well-formed data."""


class FieldMismatchError(DomainError):
    """Two exact numbers from different quadratic fields were combined."""


class GenericityError(DomainError):
    """No admissible projection/path parameters found, or a degenerate one given."""


class DiagramError(DomainError):
    """Wiring diagram violates strand bookkeeping or event ordering."""


class CrossingOrderError(DomainError):
    """Topmost line at a crossing is not the minimal-index line through it.

    The correction-word formulas index every crossing by its top strand and
    require that strand to carry the minimal line index; diagrams violating
    this cannot be fed to the inclusion pipeline in its framed variant.
    """
