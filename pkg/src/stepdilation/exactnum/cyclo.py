"""Exact arithmetic in cyclotomic fields Q(zeta_L).

A value is stored as a finitely supported combination of roots of unity
zeta_L^k (the "redundant basis"), which makes sums and products of roots
cheap: exponents just add mod L.  Equality, zero tests and the public
coefficient vector go through the canonical power basis
1, zeta_L, ..., zeta_L^(phi(L)-1) obtained by reducing modulo the L-th
cyclotomic polynomial Phi_L.  The reduction of zeta_L^k has integer
coordinates (Phi_L is monic over Z), so the reduction tables are integer
matrices, cached per order and shared by every value of that order.

Mixed-order arithmetic lifts both operands into Q(zeta_lcm) first; the lift
is a pure exponent rescaling in the redundant basis.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import cos, gcd, pi, sin
from typing import Iterable, Mapping, Union

import numpy as np

Scalar = Union[int, Fraction, "CycloNumber"]

_ZERO = Fraction(0)
_ONE = Fraction(1)

_lock = threading.Lock()
_phi_polys: dict[int, tuple[int, ...]] = {}
_red_tables: dict[int, list[tuple[int, ...]]] = {}
_red_np: dict[int, tuple[np.ndarray, int]] = {}


class CycloOrderError(ValueError):
    """Raised when an embedding between incompatible cyclotomic orders is requested."""


def _poly_mul_int(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod_int(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    # b must be monic; exact integer division used for Phi_L construction
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    q = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        c = a[i + db]
        if c:
            q[i] = c
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return q, a


def cyclotomic_polynomial(order: int) -> list[int]:
    """Coefficients of Phi_order, ascending powers, monic over Z."""
    if order < 1:
        raise ValueError("order must be >= 1")
    got = _phi_polys.get(order)
    if got is not None:
        return list(got)
    # Phi_L = (x^L - 1) / prod_{d | L, d < L} Phi_d
    num = [0] * (order + 1)
    num[0], num[order] = -1, 1
    den = [1]
    for d in range(1, order):
        if order % d == 0:
            den = _poly_mul_int(den, cyclotomic_polynomial(d))
    quo, rem = _poly_divmod_int(num, den)
    if any(rem[i] for i in range(len(rem))) and rem != [0]:
        raise ArithmeticError(f"cyclotomic division left a remainder at order {order}")
    with _lock:
        _phi_polys[order] = tuple(quo)
    return quo


def _degree(order: int) -> int:
    return len(cyclotomic_polynomial(order)) - 1


def _reduction_table(order: int) -> list[tuple[int, ...]]:
    """Canonical integer coordinates of zeta_order^k for k = 0..order-1."""
    got = _red_tables.get(order)
    if got is not None:
        return got
    phi = cyclotomic_polynomial(order)
    d = len(phi) - 1
    rows: list[tuple[int, ...]] = []
    cur = [0] * d
    cur[0] = 1
    rows.append(tuple(cur))
    for _ in range(1, order):
        nxt = [0] + cur[: d - 1]
        top = cur[d - 1]
        if top:
            for i in range(d):
                nxt[i] -= top * phi[i]
        cur = nxt
        rows.append(tuple(cur))
    with _lock:
        _red_tables[order] = rows
    return rows


def _reduction_matrix(order: int) -> tuple[np.ndarray, int]:
    """int64 matrix (order x degree) of the reduction table plus its max |entry|."""
    got = _red_np.get(order)
    if got is not None:
        return got
    rows = _reduction_table(order)
    mat = np.array(rows, dtype=np.int64)
    bound = int(np.max(np.abs(mat))) if mat.size else 1
    with _lock:
        _red_np[order] = (mat, max(bound, 1))
    return _red_np[order]


def reduce_root_combination(order: int, terms: Mapping[int, Fraction]) -> list[Fraction]:
    """Canonical coordinates of sum coeff * zeta_order^exp."""
    d = _degree(order)
    table = _reduction_table(order)
    out = [_ZERO] * d
    for e, c in terms.items():
        if not c:
            continue
        row = table[e % order]
        for i, r in enumerate(row):
            if r:
                out[i] += c * r
    return out


_NUMPY_DIM_THRESHOLD = 16


def root_combination_is_zero(order: int, terms: Mapping[int, Fraction]) -> bool:
    """Exact zero test for sum coeff * zeta_order^exp, with an integer fast path."""
    items = [(e % order, c) for e, c in terms.items() if c]
    if not items:
        return True
    d = _degree(order)
    if d >= _NUMPY_DIM_THRESHOLD and len(items) > 4:
        den = 1
        for _, c in items:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [(e, int(c * den)) for e, c in items]
        mat, bound = _reduction_matrix(order)
        total = sum(abs(v) for _, v in ints)
        if total * bound < (1 << 62):
            exps = np.fromiter((e for e, _ in ints), dtype=np.int64, count=len(ints))
            coeffs = np.fromiter((v for _, v in ints), dtype=np.int64, count=len(ints))
            vec = coeffs @ mat[exps]
            return not vec.any()
        # magnitude overflow risk: fall back to exact Python integers
        acc = [0] * d
        table = _reduction_table(order)
        for e, v in ints:
            row = table[e]
            for i, r in enumerate(row):
                if r:
                    acc[i] += v * r
        return not any(acc)
    return not any(reduce_root_combination(order, dict(items)))


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class CycloNumber:
    """An element of Q(zeta_order), exact and immutable.

    Use :func:`root_of_unity`, :meth:`CycloNumber.from_rational` or the
    arithmetic operators to build values; the constructor is internal.
    """

    __slots__ = ("order", "_terms", "_canon")

    def __init__(self, order: int, terms: dict[int, Fraction]):
        self.order = order
        self._terms = terms
        self._canon: tuple[Fraction, ...] | None = None

    # ------------------------------------------------------------------ build
    @classmethod
    def from_rational(cls, value) -> "CycloNumber":
        v = Fraction(value)
        return cls(1, {0: v} if v else {})

    @classmethod
    def from_terms(cls, order: int, terms: Mapping[int, Fraction]) -> "CycloNumber":
        acc: dict[int, Fraction] = {}
        for e, c in terms.items():
            c = Fraction(c)
            if not c:
                continue
            e %= order
            acc[e] = acc.get(e, _ZERO) + c
        return cls(order, {e: c for e, c in acc.items() if c})

    @classmethod
    def from_canonical(cls, order: int, coeffs: Iterable) -> "CycloNumber":
        return cls.from_terms(order, {i: Fraction(c) for i, c in enumerate(coeffs)})

    @staticmethod
    def coerce(x: Scalar) -> "CycloNumber":
        if isinstance(x, CycloNumber):
            return x
        return CycloNumber.from_rational(x)

    # -------------------------------------------------------------- canonical
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Canonical coordinates over the power basis 1, zeta, ..., zeta^(phi(L)-1)."""
        c = self._canon
        if c is None:
            c = tuple(reduce_root_combination(self.order, self._terms))
            self._canon = c
        return c

    def _compact(self) -> "CycloNumber":
        # re-express through the canonical basis to cap sparse growth
        out = CycloNumber.from_terms(
            self.order, {i: c for i, c in enumerate(self.coeffs) if c}
        )
        out._canon = self.coeffs
        return out

    # ----------------------------------------------------------------- lifts
    def lift(self, order: int) -> "CycloNumber":
        if order == self.order:
            return self
        if order % self.order:
            raise CycloOrderError(f"cannot lift order {self.order} into order {order}")
        k = order // self.order
        return CycloNumber(order, {e * k: c for e, c in self._terms.items()})

    # ------------------------------------------------------------- predicates
    def is_zero(self) -> bool:
        return root_combination_is_zero(self.order, self._terms)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        c = self.coeffs
        return c[0] if c else _ZERO

    def is_real(self) -> bool:
        return self == self.conj()

    # ------------------------------------------------------------- arithmetic
    def __add__(self, other: Scalar) -> "CycloNumber":
        other = CycloNumber.coerce(other)
        order = _lcm(self.order, other.order)
        a, b = self.lift(order), other.lift(order)
        terms = dict(a._terms)
        for e, c in b._terms.items():
            s = terms.get(e, _ZERO) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return CycloNumber(order, terms)

    __radd__ = __add__

    def __neg__(self) -> "CycloNumber":
        return CycloNumber(self.order, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "CycloNumber":
        return self + (-CycloNumber.coerce(other))

    def __rsub__(self, other: Scalar) -> "CycloNumber":
        return CycloNumber.coerce(other) + (-self)

    def __mul__(self, other: Scalar) -> "CycloNumber":
        other = CycloNumber.coerce(other)
        order = _lcm(self.order, other.order)
        a, b = self.lift(order), other.lift(order)
        ta, tb = a._terms, b._terms
        if not ta or not tb:
            return CycloNumber(order, {})
        if len(ta) > len(tb):
            ta, tb = tb, ta
        terms: dict[int, Fraction] = {}
        for e1, c1 in ta.items():
            for e2, c2 in tb.items():
                e = (e1 + e2) % order
                s = terms.get(e, _ZERO) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        out = CycloNumber(order, terms)
        if len(terms) > 4 * _degree(order):
            out = out._compact()
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CycloNumber":
        if n < 0:
            return self.inverse() ** (-n)
        result = CycloNumber.from_rational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "CycloNumber":
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic division by zero")
        if self.is_rational():
            return CycloNumber.from_rational(1 / self.as_fraction())
        # extended Euclid for self (as polynomial in zeta) against Phi_L over Q
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        a = list(self.coeffs)
        r0, r1 = phi, a
        s0, s1 = [_ZERO], [_ONE]
        while True:
            while len(r1) > 1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                break
            q, r = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub_frac(s0, _poly_mul_frac(q, s1))
        c = r1[0]
        if not c:
            raise ZeroDivisionError("cyclotomic division by zero")
        inv_terms = {i: s / c for i, s in enumerate(s1) if s}
        return CycloNumber.from_terms(self.order, inv_terms)

    def __truediv__(self, other: Scalar) -> "CycloNumber":
        other = CycloNumber.coerce(other)
        if other.is_rational():
            f = other.as_fraction()
            if not f:
                raise ZeroDivisionError("cyclotomic division by zero")
            return self * (1 / f)
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "CycloNumber":
        return CycloNumber.coerce(other) / self

    def conj(self) -> "CycloNumber":
        return CycloNumber(self.order, {(-e) % self.order: c for e, c in self._terms.items()})

    def norm_sq(self) -> "CycloNumber":
        """|x|^2 = x * conj(x), a real cyclotomic number."""
        return self * self.conj()

    # --------------------------------------------------------------- equality
    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if isinstance(other, (int, Fraction)):
            other = CycloNumber.from_rational(other)
        elif not isinstance(other, CycloNumber):
            return NotImplemented
        if self.order == other.order:
            if self._canon is not None and other._canon is not None:
                return self._canon == other._canon
            order = self.order
        else:
            order = _lcm(self.order, other.order)
        a, b = self.lift(order), other.lift(order)
        diff = dict(a._terms)
        for e, c in b._terms.items():
            s = diff.get(e, _ZERO) - c
            if s:
                diff[e] = s
            else:
                diff.pop(e, None)
        return root_combination_is_zero(order, diff)

    __hash__ = None  # mutable cache + cross-order equality; not a dict key

    def __bool__(self) -> bool:
        return not self.is_zero()

    # ----------------------------------------------------------------- output
    def to_complex(self) -> complex:
        """Float rendering; not certified (use exactnum.interval.embed for enclosures)."""
        re = im = 0.0
        for e, c in self._terms.items():
            ang = 2.0 * pi * e / self.order
            f = float(c)
            re += f * cos(ang)
            im += f * sin(ang)
        return complex(re, im)

    def to_literal(self) -> str:
        """Render in the cyclotomic literal grammar (zeta of this value's order)."""
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = -c if c < 0 else c
            if i == 0:
                term = str(mag)
            else:
                z = "zeta" if i == 1 else f"zeta^{i}"
                term = z if mag == 1 else f"{mag}*{z}"
            parts.append(("- " if c < 0 else "+ " if parts else "") + term)
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else ("-" + text[2:] if text.startswith("- ") else text)

    def __repr__(self) -> str:
        return f"CycloNumber(order={self.order}, {self.to_literal()!r})"


def _poly_divmod_frac(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    while len(b) > 1 and not b[-1]:
        b = b[:-1]
    db, da = len(b) - 1, len(a) - 1
    if da < db:
        return [_ZERO], a
    inv = 1 / b[-1]
    q = [_ZERO] * (da - db + 1)
    for i in range(da - db, -1, -1):
        c = a[i + db] * inv
        if c:
            q[i] = c
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    while len(a) > 1 and not a[-1]:
        a.pop()
    return q, a


def _poly_mul_frac(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub_frac(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_ZERO] * (n - len(a))
    for i, y in enumerate(b):
        a[i] -= y
    return a


_root_cache: dict[tuple[int, int], CycloNumber] = {}


def root_of_unity(order: int, k: int = 1) -> CycloNumber:
    """zeta_order^k = e^(2 pi i k / order), in canonical form."""
    if order < 1:
        raise ValueError("order must be >= 1")
    k %= order
    got = _root_cache.get((order, k))
    if got is None:
        got = CycloNumber(order, {k: _ONE})
        got.coeffs  # pre-canonicalize; shared instances make equality cheap
        with _lock:
            _root_cache[(order, k)] = got
    return got


def cyclo_lift(x: CycloNumber, order: int) -> CycloNumber:
    """Value-preserving embedding of x into Q(zeta_order); order of x must divide order."""
    return x.lift(order)


def is_zero(x: CycloNumber) -> bool:
    return x.is_zero()


ZERO = CycloNumber.from_rational(0)
ONE = CycloNumber.from_rational(1)
MINUS_ONE = CycloNumber.from_rational(-1)


def gaussian(re, im) -> CycloNumber:
    """re + im*i as an element of Q(zeta_4) (or Q after simplification)."""
    return CycloNumber.from_rational(re) + CycloNumber.from_rational(im) * root_of_unity(4, 1)
