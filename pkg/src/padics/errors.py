"""Exception hierarchy shared by every module in the package.

Two broad families matter to callers:

* ``DomainError`` -- the operation exists but is undefined for these
  operands (dividing by a zero divisor, square root of a non-residue, ...).
* ``CapabilityError`` -- the operation is out of reach for these
  parameters (non-prime base where a prime is required, factorization
  past the trial-division bound, ...).

The command-line front end maps the families to distinct exit codes.
"""


class PadicError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(PadicError):
    """The operation is undefined for the given operands."""


class CapabilityError(PadicError):
    """The operation is unsupported for the given parameters."""


class NonPrimeBase(CapabilityError):
    """A prime base was required but a composite (or < 2) value was given."""


class EvenPrimeUnsupported(CapabilityError):
    """The operation excludes p = 2."""


class FactorizationLimitExceeded(CapabilityError):
    """A cofactor survived trial division up to the configured bound."""


class BaseMismatch(PadicError):
    """Two digit-series operands carry different bases."""


class NotInvertible(DomainError):
    """The unit part shares a factor with a composite base (zero divisor)."""


class ZeroOperand(DomainError):
    """A zero (exact or unresolved) operand where a nonzero one is required."""


class NoSquareRoot(DomainError):
    """The unit part is not a quadratic residue modulo p."""


class OddValuation(DomainError):
    """The p-exponent is odd, so no square root exists in the completion."""


class NoNontrivialIdempotent(DomainError):
    """The base is a prime power; its residue rings have no zero divisors."""


class ZeroInput(DomainError):
    """Zero was passed where the result is only defined for nonzero input."""


class PrecisionLoss(DomainError):
    """The answer is not determined by the digits that survived cancellation."""


class InsufficientDepth(DomainError):
    """Fewer than two sequence terms were made available for inspection."""


class ParseError(PadicError):
    """Rejected input text, with the byte offset of the first invalid token."""

    def __init__(self, offset: int, expected: tuple[str, ...], found: str = ""):
        self.offset = offset
        self.expected = tuple(expected)
        self.found = found
        want = ", ".join(self.expected)
        what = f"found {found!r}" if found else "reached end of input"
        super().__init__(f"syntax error at offset {offset}: expected {want}; {what}")
