"""Exception hierarchy shared across the package.

The CLI maps these onto its exit codes: bad input (UsageError, ParseError)
exits 2, algorithm refusals (AlgorithmRefusal, InversionError) exit 3.
"""


class UsageError(ValueError):
    """The caller violated an operation's contract (shape, cap, ring mismatch)."""


class ParseError(UsageError):
    """Malformed matrix or ring text; the message carries the location."""


class AlgorithmRefusal(RuntimeError):
    """An algorithm declines to run: wrong kind of ring, or a size guard."""


class InversionError(ArithmeticError):
    """No multiplicative inverse exists (non-field ring or zero divisor)."""


class HypothesisNotSatisfied(RuntimeError):
    """A verification identity's precondition failed; distinct from the identity being false."""
