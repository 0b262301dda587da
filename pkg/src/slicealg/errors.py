"""Exception types shared across the package."""


class SliceAlgError(Exception):
    """Base class for all slicealg-specific errors."""


class ParseError(SliceAlgError, ValueError):
    """A quaternion literal or input file could not be parsed."""


class IoError(SliceAlgError, OSError):
    """A required input file is missing or an output path is unwritable."""


class DomainError(SliceAlgError, ValueError):
    """Evaluation was requested outside the domain of a slice function.

    Typical case: a product-domain function (such as mu_I) evaluated at
    a real point, where Im(x) = 0 leaves the defining formula undefined.
    """


class DegenerateUnits(SliceAlgError, ValueError):
    """The pair of imaginary units handed to a two-value constant is
    (numerically) degenerate, e.g. J = K."""


class StemSymmetryError(SliceAlgError, ValueError):
    """An evaluator violates the stem symmetry F(conj z) = conj2(F(z));
    the data does not describe a slice function."""


class ZeroEigenvalue(SliceAlgError, ValueError):
    """An operation that inverts the eigenvalue received lambda = 0."""


class RangeError(SliceAlgError, ValueError):
    """Eigenvalue moduli violate a strict hypothesis (e.g. |mu| < |lambda|)."""


class CertificateViolation(SliceAlgError, ValueError):
    """A coefficient-growth certificate failed on the supplied data."""


class GridTooSmall(SliceAlgError, ValueError):
    """The verification grid has no interior points for the FD stencil."""
