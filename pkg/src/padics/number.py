"""Truncated digit-series arithmetic over an arbitrary integer base >= 2.

A nonzero value is a residue class: ``unit * base**valuation`` known
modulo ``base**(valuation + precision)``, where ``unit`` packs the
``precision`` significant digits little-endian (digit i sits at exponent
``valuation + i``) and the lowest digit is nonzero.  Arithmetic runs on
the packed integers modulo the tracked modulus; digit views are
materialized on demand and must agree with the integer path (tested).

Precision propagation:

* add/sub keep the minimum *absolute* precision (exponent of the modulus),
* mul/div keep the minimum *relative* precision (significant digit count),
* full cancellation yields an unresolved zero that remembers only the
  modulus it vanished under, never a silent exact zero.

Composite bases are first-class for ring operations; zero divisors make
inversion fail with ``NotInvertible`` exactly when the unit part shares a
factor with the base.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BaseMismatch, NotInvertible, PrecisionLoss, ZeroOperand
from .valuation import Rational, Valuation, _as_fraction


def _check_base(base: int) -> None:
    if not isinstance(base, int) or base < 2:
        raise ValueError(f"base must be an integer >= 2, got {base!r}")


@dataclass(frozen=True)
class PadicNumber:
    """One of three kinds, every one immutable:

    * exact zero: ``unit is None`` and ``zero_bound is None``;
    * approximation: ``unit``/``valuation``/``precision`` all set;
    * unresolved zero: ``unit is None`` and ``zero_bound = M``, meaning a
      value congruent to 0 modulo ``base**M`` whose true valuation is
      unknown (the residue cancelled away).
    """

    base: int
    valuation: int | None = None
    unit: int | None = None
    precision: int | None = None
    zero_bound: int | None = None

    def __post_init__(self):
        _check_base(self.base)
        if self.unit is not None:
            if self.precision is None or self.valuation is None or self.zero_bound is not None:
                raise ValueError("inconsistent approximation fields")
            if self.precision < 1:
                raise ValueError("precision must be >= 1")
            if not 0 < self.unit < self.base**self.precision:
                raise ValueError("unit out of range for the stored precision")
            if self.unit % self.base == 0:
                raise ValueError("lowest stored digit must be nonzero")
        elif self.zero_bound is not None:
            if self.valuation is not None or self.precision is not None:
                raise ValueError("inconsistent unresolved-zero fields")
        elif self.valuation is not None or self.precision is not None:
            raise ValueError("inconsistent exact-zero fields")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, base: int) -> "PadicNumber":
        return cls(base)

    @classmethod
    def inexact_zero(cls, base: int, bound: int) -> "PadicNumber":
        return cls(base, zero_bound=int(bound))

    @classmethod
    def from_residue(cls, base: int, shift: int, residue: int, ndigits: int) -> "PadicNumber":
        """Normalize ``residue * base**shift`` known modulo
        ``base**(shift + ndigits)`` into canonical form."""
        _check_base(base)
        if ndigits < 1:
            raise ValueError("ndigits must be >= 1")
        residue %= base**ndigits
        if residue == 0:
            return cls.inexact_zero(base, shift + ndigits)
        lead = 0
        while residue % base == 0:
            residue //= base
            lead += 1
        return cls(base, valuation=shift + lead, unit=residue, precision=ndigits - lead)

    # -- predicates and views -----------------------------------------

    @property
    def is_exact_zero(self) -> bool:
        return self.unit is None and self.zero_bound is None

    @property
    def is_inexact_zero(self) -> bool:
        return self.zero_bound is not None

    @property
    def is_zero(self) -> bool:
        return self.unit is None

    @property
    def abs_precision(self) -> int | None:
        """Exponent M of the tracked modulus base**M; None means exact."""
        if self.is_exact_zero:
            return None
        if self.is_inexact_zero:
            return self.zero_bound
        return self.valuation + self.precision

    @property
    def digits(self) -> tuple[int, ...]:
        """Significant digits, little-endian: index i is exponent
        ``valuation + i``."""
        if self.unit is None:
            return ()
        u, out = self.unit, []
        for _ in range(self.precision):
            u, d = divmod(u, self.base)
            out.append(d)
        return tuple(out)

    def digit_valuation(self) -> Valuation:
        """Valuation read off the digit window.

        Raises ``PrecisionLoss`` for an unresolved zero, whose valuation is
        only bounded below by the vanished modulus.
        """
        if self.is_exact_zero:
            return Valuation.infinite()
        if self.is_inexact_zero:
            raise PrecisionLoss(
                f"valuation only bounded below by {self.zero_bound}; "
                "all tracked digits cancelled"
            )
        return Valuation.finite(self.valuation)

    # -- ring operations ----------------------------------------------

    def _require_same_base(self, other: "PadicNumber") -> None:
        if not isinstance(other, PadicNumber):
            raise TypeError(f"expected PadicNumber, got {type(other).__name__}")
        if self.base != other.base:
            raise BaseMismatch(f"bases differ: {self.base} vs {other.base}")

    def __add__(self, other: "PadicNumber") -> "PadicNumber":
        self._require_same_base(other)
        if self.is_exact_zero:
            return other
        if other.is_exact_zero:
            return self
        bound = min(self.abs_precision, other.abs_precision)
        shifts = [x.valuation for x in (self, other) if x.unit is not None]
        if not shifts or min(shifts) >= bound:
            return PadicNumber.inexact_zero(self.base, bound)
        shift = min(shifts)
        k = bound - shift
        total = 0
        for x in (self, other):
            if x.unit is not None:
                total += x.unit * self.base ** (x.valuation - shift)
        return PadicNumber.from_residue(self.base, shift, total, k)

    def __neg__(self) -> "PadicNumber":
        if self.is_zero:
            return self
        # base-complement of the digit window; keeps valuation and precision
        return PadicNumber(
            self.base,
            valuation=self.valuation,
            unit=self.base**self.precision - self.unit,
            precision=self.precision,
        )

    def __sub__(self, other: "PadicNumber") -> "PadicNumber":
        self._require_same_base(other)
        return self + (-other)

    def __mul__(self, other: "PadicNumber") -> "PadicNumber":
        self._require_same_base(other)
        if self.is_exact_zero or other.is_exact_zero:
            return PadicNumber.zero(self.base)
        if self.is_inexact_zero or other.is_inexact_zero:
            bound = 0
            for x in (self, other):
                bound += x.zero_bound if x.is_inexact_zero else x.valuation
            return PadicNumber.inexact_zero(self.base, bound)
        n = min(self.precision, other.precision)
        return PadicNumber.from_residue(
            self.base, self.valuation + other.valuation, self.unit * other.unit, n
        )

    def inverse(self) -> "PadicNumber":
        """Multiplicative inverse to the operand's relative precision.

        Requires a resolved nonzero operand whose unit part is coprime to
        the base; otherwise the residue class does not pin down even the
        valuation of the inverse.
        """
        if self.is_zero:
            raise ZeroOperand("cannot invert a zero (or unresolved-zero) value")
        if gcd(self.unit, self.base) != 1:
            raise NotInvertible(
                f"unit part {self.unit} shares a factor with base {self.base}"
            )
        inv = pow(self.unit, -1, self.base**self.precision)
        return PadicNumber(
            self.base, valuation=-self.valuation, unit=inv, precision=self.precision
        )

    def __truediv__(self, other: "PadicNumber") -> "PadicNumber":
        self._require_same_base(other)
        return self * other.inverse()

    # -- rendering ------------------------------------------------------

    def _glyphs(self, digits) -> str:
        if self.base <= 10:
            return "".join("?" if d is None else str(d) for d in digits)
        return "|".join("?" if d is None else str(d) for d in digits)

    def render(self, marker: bool = False) -> str:
        """Digit string with the ``...`` continuation prefix.

        Exactly the significant digits appear after ``...``; positions
        between exponent 0 and a positive valuation are zero-filled, and a
        radix point separates negative exponents.  A displayed fractional
        position above the tracked modulus renders as ``?``.  With
        ``marker`` (always, for an unresolved zero) the big-oh modulus is
        appended.
        """
        if self.is_exact_zero:
            return "0"
        if self.is_inexact_zero:
            return f"0 + O({self.base}^{self.zero_bound})"
        digs = self.digits
        v, n = self.valuation, self.precision
        if v >= 0:
            body = self._glyphs(tuple(reversed((0,) * v + digs)))
        else:
            int_part = tuple(reversed(digs[-v:]))  # exponents >= 0, if any
            frac = []
            for e in range(-1, v - 1, -1):
                i = e - v
                frac.append(digs[i] if i < n else None)
            body = self._glyphs(int_part) + "." + self._glyphs(tuple(frac))
        out = "..." + body
        if marker:
            out += f" + O({self.base}^{v + n})"
        return out

    def __str__(self) -> str:
        return self.render()


def _clear_denominator(q: Fraction, base: int) -> tuple[int, int, int]:
    """Write q = (a/b) * base**v with gcd(b, base) = 1 and a % base != 0.

    Always succeeds for q != 0: shifting down clears every denominator
    factor that divides a power of the base, shifting up strips base
    powers from the numerator.
    """
    v = 0
    a, b = q.numerator, q.denominator
    while gcd(b, base) != 1:
        g = gcd(a * base, b)
        a, b = a * base // g, b // g
        v -= 1
    while a % base == 0:
        a //= base
        v += 1
    return v, a, b


def from_rational(q, base: int, precision: int) -> PadicNumber:
    """Digit-series expansion of an exact rational, truncated to
    ``precision`` significant digits.

    The expansion is the unique one whose digit at exponent ``valuation + i``
    solves the running congruence of q against powers of the base; for a
    composite base the denominator is first cleared by shifting.
    """
    _check_base(base)
    if precision < 1:
        raise ValueError("precision must be >= 1")
    q = _as_fraction(q)
    if q == 0:
        return PadicNumber.zero(base)
    v, a, b = _clear_denominator(q, base)
    modulus = base**precision
    unit = a * pow(b, -1, modulus) % modulus
    return PadicNumber(base, valuation=v, unit=unit, precision=precision)


def digit_valuation(x: PadicNumber) -> Valuation:
    return x.digit_valuation()


@dataclass(frozen=True)
class RationalExpansion:
    """Eventually periodic digit stream of a rational: ``preperiod`` then
    ``period`` repeated forever, starting at exponent ``valuation``.

    Both blocks are minimal; the leading digit is nonzero unless the value
    itself is zero.
    """

    base: int
    valuation: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def digit_stream(self, count: int) -> tuple[int, ...]:
        """First ``count`` digits starting at exponent ``valuation``."""
        out = list(self.preperiod[:count])
        i = 0
        while len(out) < count:
            out.append(self.period[i % len(self.period)])
            i += 1
        return tuple(out)

    def render(self) -> str:
        """Textual form ``...(period)fixed`` with the repeating block
        unrolled until it starts at a nonnegative exponent."""
        pre, per, v = list(self.preperiod), list(self.period), self.valuation
        while v + len(pre) < 0:
            pre.append(per[0])
            per = per[1:] + per[:1]
        start = v + len(pre)  # exponent where the repetition begins
        glyph = (lambda ds: "".join(map(str, ds))) if self.base <= 10 else (
            lambda ds: "|".join(map(str, ds))
        )
        head = "...(" + glyph(tuple(reversed(per))) + ")"
        digit_at = {v + i: d for i, d in enumerate(pre)}
        int_part = tuple(digit_at.get(e, 0) for e in range(start - 1, -1, -1))
        body = glyph(int_part)
        if v < 0:
            body += "." + glyph(tuple(digit_at[e] for e in range(-1, v - 1, -1)))
        return head + body

    def __str__(self) -> str:
        return self.render()


def _minimal_form(pre: list[int], per: list[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # shrink the period to its smallest divisor block
    n = len(per)
    for d in range(1, n + 1):
        if n % d == 0 and all(per[i] == per[i % d] for i in range(n)):
            per = per[:d]
            break
    # absorb preperiod digits that already obey the cycle
    while pre and pre[-1] == per[-1]:
        per = [pre[-1]] + per[:-1]
        pre = pre[:-1]
    return tuple(pre), tuple(per)


def expansion_of(q, base: int) -> RationalExpansion:
    """Full eventually-periodic expansion of a rational.

    Digits come from the long-division recurrence on the numerator; the
    state space is finite, so the first repeated state closes the cycle,
    after which the blocks are canonicalized to minimal form.
    """
    _check_base(base)
    q = _as_fraction(q)
    if q == 0:
        return RationalExpansion(base, 0, (), (0,))
    v, a, b = _clear_denominator(q, base)
    binv = pow(b, -1, base)
    digits: list[int] = []
    seen: dict[int, int] = {}
    while a not in seen:
        seen[a] = len(digits)
        d = a * binv % base
        digits.append(d)
        a = (a - d * b) // base
    start = seen[a]
    pre, per = _minimal_form(digits[:start], digits[start:])
    return RationalExpansion(base, v, pre, per)


def rational_of(e: RationalExpansion) -> Fraction:
    """Exact rational value of an eventually periodic expansion, by
    geometric summation; inverse of ``expansion_of``."""
    base = Fraction(e.base)
    fixed = sum(d * base**i for i, d in enumerate(e.preperiod))
    rep = sum(d * base**i for i, d in enumerate(e.period))
    tail = rep * base ** len(e.preperiod) / (1 - base ** len(e.period))
    return (fixed + tail) * base**e.valuation


add = PadicNumber.__add__
sub = PadicNumber.__sub__
mul = PadicNumber.__mul__


def negate(x: PadicNumber) -> PadicNumber:
    return -x


def invert(x: PadicNumber) -> PadicNumber:
    return x.inverse()


def div(x: PadicNumber, y: PadicNumber) -> PadicNumber:
    return x / y
