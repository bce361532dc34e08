"""Exception types shared across the kernel.

Every error this package raises deliberately derives from KernelError so the
command line driver can distinguish "the math said no" from a genuine crash,
and from a stdlib builtin so callers can keep catching the obvious thing
(ArithmeticError, ValueError, ...).
"""


class KernelError(Exception):
    """Base class for all errors raised by this package."""


class NotDivisibleError(KernelError, ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class NegativeExponentSubstitutionError(KernelError, ValueError):
    """Substitution into a negative power needs a single-term nonzero value."""


class ZeroPolynomialError(KernelError, ValueError):
    """Degree or valuation of the zero polynomial was requested."""


class ZeroDenominatorError(KernelError, ZeroDivisionError):
    """A rational-function denominator is (or evaluates to) zero."""


class DomainError(KernelError, ValueError):
    """Argument outside the domain a function is defined on."""


class IndexBeyondBoundError(KernelError, IndexError):
    """A generic sequence was asked for an index beyond its symbol bound."""


class NotPolynomialError(KernelError, ValueError):
    """A reflection that must produce a genuine polynomial did not."""


class CostGuardExceededError(KernelError, ValueError):
    """A deliberately guarded expensive routine was asked to go too far."""


class UnknownFamilyError(KernelError, KeyError):
    """The CLI was asked for a sequence family it does not know."""
