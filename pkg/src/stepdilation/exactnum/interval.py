"""Certified interval arithmetic with rational endpoints.

Field operations are exact on Fraction endpoints; enclosures of roots of
unity come from mpmath's interval cos/sin at a working precision that is
raised until the requested width is met.  Endpoints of mpmath intervals are
dyadic, so the conversion back to Fraction is exact and the enclosures stay
rigorous end to end.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import mpmath

from .cyclo import CycloNumber

_mp_lock = threading.Lock()


def _raw_mpf_to_fraction(raw) -> Fraction:
    sign, man, exp, bc = raw
    man = int(man)  # gmpy2 backend hands back mpz
    if man == 0:
        if exp == 0:
            return Fraction(0)
        raise ValueError(f"non-finite endpoint {raw!r}")
    v = Fraction(man)
    if sign:
        v = -v
    return v * Fraction(2) ** exp if exp >= 0 else v / (Fraction(2) ** (-exp))


def _iv_to_interval(x) -> "RatInterval":
    lo_raw, hi_raw = x._mpi_
    return RatInterval(_raw_mpf_to_fraction(lo_raw), _raw_mpf_to_fraction(hi_raw))


def sqrt_below(x: Fraction, bits: int = 64) -> Fraction:
    """A rational lower bound for sqrt(x), x >= 0, within 2^-bits-ish."""
    if x < 0:
        raise ValueError("sqrt of negative rational")
    if x == 0:
        return Fraction(0)
    scale = 1 << bits
    n = x.numerator * x.denominator * scale * scale
    return Fraction(isqrt(n), x.denominator * scale)


def sqrt_above(x: Fraction, bits: int = 64) -> Fraction:
    if x < 0:
        raise ValueError("sqrt of negative rational")
    if x == 0:
        return Fraction(0)
    scale = 1 << bits
    n = x.numerator * x.denominator * scale * scale
    r = isqrt(n)
    if r * r < n:
        r += 1
    return Fraction(r, x.denominator * scale)


def _round_down(x: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction((x.numerator * scale) // x.denominator, scale)


def _round_up(x: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction(-((-x.numerator * scale) // x.denominator), scale)


@dataclass(frozen=True)
class RatInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @staticmethod
    def point(x) -> "RatInterval":
        f = Fraction(x)
        return RatInterval(f, f)

    @staticmethod
    def of(lo, hi) -> "RatInterval":
        return RatInterval(Fraction(lo), Fraction(hi))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __add__(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self) -> "RatInterval":
        return RatInterval(-self.hi, -self.lo)

    def __mul__(self, other: "RatInterval") -> "RatInterval":
        cands = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RatInterval(min(cands), max(cands))

    def scale(self, c: Fraction) -> "RatInterval":
        return RatInterval(self.lo * c, self.hi * c) if c >= 0 else RatInterval(self.hi * c, self.lo * c)

    def recip(self) -> "RatInterval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval contains zero")
        return RatInterval(1 / self.hi, 1 / self.lo)

    def contains(self, x) -> bool:
        return self.lo <= Fraction(x) <= self.hi

    def contains_interval(self, other: "RatInterval", strict: bool = False) -> bool:
        if strict:
            return self.lo < other.lo and other.hi < self.hi
        return self.lo <= other.lo and other.hi <= self.hi

    def sqrt(self, bits: int = 64) -> "RatInterval":
        return RatInterval(sqrt_below(self.lo, bits), sqrt_above(self.hi, bits))

    def round_out(self, bits: int) -> "RatInterval":
        return RatInterval(_round_down(self.lo, bits), _round_up(self.hi, bits))

    def sign(self) -> int | None:
        """1, -1, or 0 if the interval is the single point 0; None if undecided."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None


@dataclass(frozen=True)
class ComplexInterval:
    re: RatInterval
    im: RatInterval

    @staticmethod
    def point(re, im=0) -> "ComplexInterval":
        return ComplexInterval(RatInterval.point(re), RatInterval.point(im))

    @property
    def width(self) -> Fraction:
        return max(self.re.width, self.im.width)

    def __add__(self, other: "ComplexInterval") -> "ComplexInterval":
        return ComplexInterval(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexInterval") -> "ComplexInterval":
        return ComplexInterval(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "ComplexInterval":
        return ComplexInterval(-self.re, -self.im)

    def __mul__(self, other: "ComplexInterval") -> "ComplexInterval":
        return ComplexInterval(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def scale(self, c: Fraction) -> "ComplexInterval":
        return ComplexInterval(self.re.scale(c), self.im.scale(c))

    def __truediv__(self, other: "ComplexInterval") -> "ComplexInterval":
        d = other.abs_sq()
        if d.lo <= 0:
            raise ZeroDivisionError("divisor interval may contain zero")
        num = self * other.conj()
        r = d.recip()
        return ComplexInterval(num.re * r, num.im * r)

    def conj(self) -> "ComplexInterval":
        return ComplexInterval(self.re, -self.im)

    def abs_sq(self) -> RatInterval:
        def sq(iv: RatInterval) -> RatInterval:
            if iv.lo >= 0:
                return RatInterval(iv.lo * iv.lo, iv.hi * iv.hi)
            if iv.hi <= 0:
                return RatInterval(iv.hi * iv.hi, iv.lo * iv.lo)
            m = max(-iv.lo, iv.hi)
            return RatInterval(Fraction(0), m * m)

        return sq(self.re) + sq(self.im)

    def abs_interval(self, bits: int = 64) -> RatInterval:
        return self.abs_sq().sqrt(bits)

    def contains_zero(self) -> bool:
        return self.re.lo <= 0 <= self.re.hi and self.im.lo <= 0 <= self.im.hi

    def contains_interval(self, other: "ComplexInterval", strict: bool = False) -> bool:
        return self.re.contains_interval(other.re, strict) and self.im.contains_interval(
            other.im, strict
        )

    def round_out(self, bits: int) -> "ComplexInterval":
        return ComplexInterval(self.re.round_out(bits), self.im.round_out(bits))

    def mid_complex(self) -> complex:
        return complex(float(self.re.mid), float(self.im.mid))

    def mid_pair(self) -> tuple[Fraction, Fraction]:
        return self.re.mid, self.im.mid


CI_ZERO = ComplexInterval.point(0)
CI_ONE = ComplexInterval.point(1)


def _root_enclosure(order: int, k: int, workprec: int) -> ComplexInterval:
    """Rigorous enclosure of e^(2 pi i k / order) at the given working precision."""
    with _mp_lock:
        saved = mpmath.iv.prec
        try:
            mpmath.iv.prec = workprec
            theta = mpmath.iv.pi * (2 * (k % order)) / order
            c, s = mpmath.iv.cos(theta), mpmath.iv.sin(theta)
            re = _iv_to_interval(c)
            im = _iv_to_interval(s)
        finally:
            mpmath.iv.prec = saved
    return ComplexInterval(re, im)


def embed(x: CycloNumber, precision: int) -> ComplexInterval:
    """Enclosure of x with width at most 2^-precision."""
    target = Fraction(1, 1 << precision)
    terms = [(e, c) for e, c in x._terms.items() if c]
    if not terms:
        return CI_ZERO
    workprec = precision + 8
    while True:
        acc = CI_ZERO
        for e, c in terms:
            acc = acc + _root_enclosure(x.order, e, workprec).scale(c)
        if acc.width <= target:
            return acc
        workprec *= 2
        if workprec > (precision + 8) * 64:
            raise ArithmeticError("embedding failed to reach the requested width")


def real_interval(x: CycloNumber, precision: int) -> RatInterval:
    box = embed(x, precision)
    if not box.im.contains(0):
        raise ValueError("value is not real")
    return box.re


def sign_of_real(x: CycloNumber, max_precision: int = 4096) -> int:
    """Exact sign of a real cyclotomic number (raises if x is not real)."""
    if not x.is_real():
        raise ValueError("sign requested for a non-real value")
    if x.is_rational():
        f = x.as_fraction()
        return (f > 0) - (f < 0)
    if x.is_zero():
        return 0
    prec = 40
    while prec <= max_precision:
        iv = embed(x, prec).re
        s = iv.sign()
        if s is not None:
            return s
        prec *= 2
    raise ArithmeticError("sign refinement exhausted precision (nonzero value expected)")


def compare_real(x: CycloNumber, y: CycloNumber) -> int:
    """Exact three-way comparison of two real cyclotomic numbers."""
    return sign_of_real(x - y)
