"""p-adic valuations and norms on the rationals, and the induced metric.

Everything here is exact.  A norm is never a float: it is stored as a
tagged value that is either zero, an integer power of the prime, or the
ordinary absolute value of a rational (for the real place).  Comparisons
and multiplication stay in exact rational arithmetic throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NonPrimeBase
from .primes import certify_prime

Rational = Fraction


def _as_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    raise TypeError(f"expected an int or Fraction, got {type(q).__name__}")


def _require_prime(p: int) -> None:
    if not certify_prime(p)[0]:
        raise NonPrimeBase(f"{p} is not prime")


@dataclass(frozen=True)
class Valuation:
    """Integer-or-infinity order of a prime in a rational.

    ``exponent is None`` encodes +infinity, which occurs exactly for 0.
    """

    exponent: int | None = None

    @classmethod
    def finite(cls, e: int) -> "Valuation":
        return cls(int(e))

    @classmethod
    def infinite(cls) -> "Valuation":
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.exponent is None

    def __add__(self, other: "Valuation") -> "Valuation":
        if self.is_infinite or other.is_infinite:
            return Valuation.infinite()
        return Valuation(self.exponent + other.exponent)

    def _key(self) -> tuple[int, int]:
        # infinities sort above every finite exponent
        return (1, 0) if self.is_infinite else (0, self.exponent)

    def __lt__(self, other: "Valuation") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "Valuation") -> bool:
        return self._key() <= other._key()

    def __gt__(self, other: "Valuation") -> bool:
        return self._key() > other._key()

    def __ge__(self, other: "Valuation") -> bool:
        return self._key() >= other._key()

    def __str__(self) -> str:
        return "inf" if self.is_infinite else str(self.exponent)


@dataclass(frozen=True)
class NormValue:
    """Exact magnitude: zero, a power of a prime, or a real absolute value.

    ``value`` always holds the exact rational magnitude, so norms at
    different places stay comparable; ``base``/``exponent`` are set only
    for finite-place powers, where multiplication is pure exponent
    arithmetic.
    """

    value: Fraction
    base: int | None = None
    exponent: int | None = None

    @classmethod
    def zero(cls) -> "NormValue":
        return cls(Fraction(0))

    @classmethod
    def power(cls, base: int, exponent: int) -> "NormValue":
        return cls(Fraction(base) ** exponent, base, int(exponent))

    @classmethod
    def real_abs(cls, q) -> "NormValue":
        q = abs(_as_fraction(q))
        return cls.zero() if q == 0 else cls(q)

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __mul__(self, other: "NormValue") -> "NormValue":
        if self.is_zero or other.is_zero:
            return NormValue.zero()
        if self.base is not None and self.base == other.base:
            return NormValue.power(self.base, self.exponent + other.exponent)
        return NormValue(self.value * other.value)

    def __lt__(self, other: "NormValue") -> bool:
        return self.value < other.value

    def __le__(self, other: "NormValue") -> bool:
        return self.value <= other.value

    def __gt__(self, other: "NormValue") -> bool:
        return self.value > other.value

    def __ge__(self, other: "NormValue") -> bool:
        return self.value >= other.value

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Place:
    """A completion of the rationals: the real place or one finite prime.

    Finite places certify the prime on construction; ``certified`` is
    False only for probable primes past the deterministic witness range.
    """

    prime: int | None = None
    certified: bool = field(default=True, compare=False)

    def __post_init__(self):
        if self.prime is not None:
            ok, deterministic = certify_prime(self.prime)
            if not ok:
                raise NonPrimeBase(f"{self.prime} is not prime")
            object.__setattr__(self, "certified", deterministic)

    @property
    def is_real(self) -> bool:
        return self.prime is None

    def __str__(self) -> str:
        return "inf" if self.is_real else str(self.prime)


REAL_PLACE = Place()


def finite_place(p: int) -> Place:
    return Place(prime=p)


def valuation_int(n: int, p: int) -> Valuation:
    """Largest e with p**e dividing n; infinite for n = 0.

    Repeated exact division by p; the cofactor is never factored.
    """
    _require_prime(p)
    if n == 0:
        return Valuation.infinite()
    n = abs(n)
    e = 0
    while True:
        q, r = divmod(n, p)
        if r:
            return Valuation.finite(e)
        n = q
        e += 1


def valuation_rat(q, p: int) -> Valuation:
    """p-adic valuation on the rationals: v(a/b) = v(a) - v(b)."""
    q = _as_fraction(q)
    _require_prime(p)
    if q == 0:
        return Valuation.infinite()
    num = valuation_int(q.numerator, p).exponent
    den = valuation_int(q.denominator, p).exponent
    return Valuation.finite(num - den)


def norm(q, place: Place) -> NormValue:
    """|q| at the given place: p**(-v_p(q)) at a finite place, |q| at the
    real place, and zero exactly for q = 0."""
    q = _as_fraction(q)
    if q == 0:
        return NormValue.zero()
    if place.is_real:
        return NormValue.real_abs(q)
    v = valuation_rat(q, place.prime)
    return NormValue.power(place.prime, -v.exponent)


def distance(a, b, place: Place) -> NormValue:
    """Metric induced by the place's norm: d(a, b) = |a - b|."""
    return norm(_as_fraction(a) - _as_fraction(b), place)


def ball_contains(center, radius: NormValue, x, place: Place, closed: bool = False) -> bool:
    """Exact membership test for the ball around ``center`` of ``radius``."""
    d = distance(center, x, place)
    return d.value <= radius.value if closed else d.value < radius.value
