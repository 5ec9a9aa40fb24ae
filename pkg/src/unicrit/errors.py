"""Exception hierarchy shared across the package."""


class UnicritError(Exception):
    """Base class for all package-specific errors."""


class DomainError(UnicritError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class InvalidExponent(DomainError):
    """The exponent of a unicritical polynomial must be prime."""


class DuplicateGenerator(DomainError):
    """Generator coefficients must be pairwise distinct."""


class EmptySet(DomainError):
    """A generator set needs at least one coefficient."""


class DegreeCapExceeded(UnicritError):
    """Expanding this word would exceed the configured degree cap."""


class OrbitSizeExceeded(UnicritError):
    """An orbit value grew past the configured bit-size guard."""


class NoIrreducibleGenerator(UnicritError):
    """No generator is irreducible over Q, so no universal prefix exists."""


class OpenCase(UnicritError):
    """The generator set is the one configuration with no known recipe:
    p > 3 together with the pair {x^p + t^p - t^(p^2), x^p + t^p}."""


class InternalContradiction(UnicritError):
    """A state the theory proves unreachable was reached; always a bug."""


class InputNotSpecial(DomainError):
    """decide_either_or needs two distinct irreducible special polynomials."""


class PrefixNotCertified(DomainError):
    """A multi-step prefix was supplied without any irreducibility justification."""


class UnknownCurve(DomainError):
    """No curve with the requested identifier is registered."""
