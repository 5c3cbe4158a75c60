"""Exception taxonomy shared by all modules.

Exit-code mapping used by the CLI: schema problems are exit 1,
DomainError and subclasses exit 2, IdentityViolationError exit 3.
"""


class G2SatakeError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(G2SatakeError, ValueError):
    """Input outside the mathematical domain of an operation."""


class DegeneratePointError(DomainError):
    """A denominator vanished because the input sits on a boundary divisor."""


class ProductLocusError(DegeneratePointError):
    """chi10 = 0: the abelian surface is a product of elliptic curves."""


class InversionSingularError(DomainError):
    """The power-sum inversion denominator 5*s2*s3 - 12*s5 vanished."""


class NonMinimalModelError(DomainError):
    """Vanishing orders match no Kodaira table row (non-minimal Weierstrass model)."""


class RootFindingError(G2SatakeError):
    """Polynomial root iteration failed to converge; carries the residuals."""

    def __init__(self, message, roots=None, residuals=None):
        super().__init__(message)
        self.roots = roots
        self.residuals = residuals


class IdentityViolationError(G2SatakeError):
    """Two independently computed sides of an exact identity disagree."""
