"""Rational step functions on (0,1) and their jump data.

A step function is identified with its odd 2-periodic extension, so jumps
live on all of R with J(-x) = J(x) and J(x+2) = J(x); the boundary jumps
are J(0) = 2 phi(0+) and J(1) = -2 phi(1-).  Everything downstream (the
decision pipeline, the scans) consumes only the jump function sampled at
m/t, never pointwise values of phi.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .exactnum import CycloNumber, parse_cyclo, parse_rational, root_of_unity
from .periodic import PeriodicFn, fourier_transform, inverse_fourier_transform


class StepFunctionError(ValueError):
    pass


class DenominatorError(ValueError):
    pass


@dataclass
class StepFunction:
    """Piecewise constant on (0,1): value piece_values[i] on (breakpoints[i], breakpoints[i+1])."""

    breakpoints: tuple[Fraction, ...]
    piece_values: tuple[CycloNumber, ...]

    def __post_init__(self):
        bp, vals = self.breakpoints, self.piece_values
        if len(bp) != len(vals) + 1 or bp[0] != 0 or bp[-1] != 1:
            raise StepFunctionError("breakpoints must run 0 = x0 < ... < xL = 1")
        if any(bp[i] >= bp[i + 1] for i in range(len(bp) - 1)):
            raise StepFunctionError("breakpoints must be strictly increasing")
        self.piece_values = tuple(CycloNumber.coerce(v) for v in vals)

    # ----------------------------------------------------------------- basics
    @property
    def value_order(self) -> int:
        out = 1
        for v in self.piece_values:
            out = lcm(out, v.order)
        return out

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.piece_values)

    def is_real(self) -> bool:
        return all(v.is_real() for v in self.piece_values)

    @property
    def left_value(self) -> CycloNumber:
        """phi(0+)."""
        return self.piece_values[0]

    @property
    def right_value(self) -> CycloNumber:
        """phi(1-)."""
        return self.piece_values[-1]

    def interior_jumps(self) -> dict[Fraction, CycloNumber]:
        """Jump at each interior breakpoint (all nonzero by minimality)."""
        out = {}
        for i in range(1, len(self.breakpoints) - 1):
            out[self.breakpoints[i]] = self.piece_values[i] - self.piece_values[i - 1]
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, StepFunction):
            return NotImplemented
        return self.breakpoints == other.breakpoints and all(
            a == b for a, b in zip(self.piece_values, other.piece_values)
        )

    __hash__ = None

    def scale(self, c) -> "StepFunction":
        c = CycloNumber.coerce(c)
        if c.is_zero():
            return make_step([(Fraction(0), Fraction(1), CycloNumber.from_rational(0))])
        return StepFunction(self.breakpoints, tuple(c * v for v in self.piece_values))

    def __repr__(self) -> str:
        pieces = ", ".join(
            f"({self.breakpoints[i]},{self.breakpoints[i+1]}): {v.to_literal()}"
            for i, v in enumerate(self.piece_values)
        )
        return f"StepFunction[{pieces}]"


def make_step(pieces) -> StepFunction:
    """Build a canonical StepFunction from (from, to, value) pieces tiling (0,1).

    Pieces must be contiguous with rational endpoints; equal-valued
    neighbours are merged.  Gaps are rejected: a region where the function
    vanishes must be given explicitly with value 0.
    """
    if not pieces:
        raise StepFunctionError("no pieces given")
    norm = []
    for frm, to, val in pieces:
        try:
            frm, to = Fraction(frm), Fraction(to)
        except (ValueError, TypeError) as exc:
            raise StepFunctionError(f"non-rational endpoint in ({frm}, {to})") from exc
        if not (0 <= frm < to <= 1):
            raise StepFunctionError(f"piece ({frm}, {to}) does not sit inside (0,1)")
        norm.append((frm, to, CycloNumber.coerce(val)))
    norm.sort(key=lambda p: (p[0], p[1]))
    cursor = Fraction(0)
    for frm, to, _ in norm:
        if frm != cursor:
            kind = "overlap" if frm < cursor else "gap"
            raise StepFunctionError(f"{kind} at {min(frm, cursor)}")
        cursor = to
    if cursor != 1:
        raise StepFunctionError("pieces do not reach 1")
    # merge equal neighbours
    bps = [Fraction(0)]
    vals: list[CycloNumber] = []
    for frm, to, v in norm:
        if vals and vals[-1] == v:
            bps[-1] = to
        else:
            vals.append(v)
            bps.append(to)
    return StepFunction(tuple(bps), tuple(vals))


def indicator(a, b) -> StepFunction:
    """chi_(a,b) for rationals 0 <= a < b <= 1."""
    a, b = Fraction(a), Fraction(b)
    pieces = []
    if a > 0:
        pieces.append((Fraction(0), a, 0))
    pieces.append((a, b, 1))
    if b < 1:
        pieces.append((b, Fraction(1), 0))
    return make_step(pieces)


def indicator_of_cells(cells: list[tuple[Fraction, Fraction]]) -> StepFunction:
    """Characteristic function of a disjoint union of open intervals."""
    pieces = []
    cursor = Fraction(0)
    for a, b in sorted(cells):
        if a < cursor:
            raise StepFunctionError("cells overlap")
        if a > cursor:
            pieces.append((cursor, a, 0))
        pieces.append((a, b, 1))
        cursor = b
    if cursor < 1:
        pieces.append((cursor, Fraction(1), 0))
    return make_step(pieces)


def jump_table(phi: StepFunction):
    """A fast J(x) evaluator with the breakpoint jumps precomputed."""
    interior = phi.interior_jumps()
    at_zero = 2 * phi.left_value
    at_one = -2 * phi.right_value
    zero = CycloNumber.from_rational(0)

    def j(x) -> CycloNumber:
        x = Fraction(x) % 2
        if x == 0:
            return at_zero
        if x == 1:
            return at_one
        if x > 1:
            x = 2 - x
        return interior.get(x, zero)

    return j


def jump(phi: StepFunction, x) -> CycloNumber:
    """J(x) of the odd 2-periodic extension: J(-x) = J(x), J(x+2) = J(x)."""
    return jump_table(phi)(x)


def minimal_denominator(phi: StepFunction) -> int:
    """lcm of interior break denominators; 1 when phi jumps only at integers."""
    t = 1
    for bp in phi.breakpoints[1:-1]:
        t = lcm(t, bp.denominator)
    return t


@dataclass
class JumpData:
    """Sampled jump function g(m) = J(m/t) with period q = 2t."""

    t: int
    g: PeriodicFn

    @property
    def q(self) -> int:
        return self.g.period


def jump_data(phi: StepFunction, t: int | None = None) -> JumpData:
    """g(m) = J(m/t) for m = 1..2t; t must clear every breakpoint denominator."""
    tmin = minimal_denominator(phi)
    if t is None:
        t = tmin
    if t < 1 or t % tmin:
        raise DenominatorError(
            f"t = {t} is not a common denominator (needs a multiple of {tmin})"
        )
    q = 2 * t
    j = jump_table(phi)
    vals = [j(Fraction(m, t)) for m in range(1, q + 1)]
    return JumpData(t=t, g=PeriodicFn(q, tuple(vals)))


def sine_coeff_fn(phi: StepFunction, t: int | None = None) -> PeriodicFn:
    """f(n) = sum_{m=1}^{q} J(m/t) e^(2 pi i m n / q) = 2 pi n * (n-th sine coefficient) / ...

    f is q-periodic and satisfies T f = g exactly (checked here; failure
    would be an internal inconsistency).
    """
    jd = jump_data(phi, t)
    f = inverse_fourier_transform(jd.g)
    if not (fourier_transform(f) == jd.g):
        raise ArithmeticError("Fourier cross-check failed: T(f) != g (bug)")
    return f


_SQRT2_HALF = None


def _sqrt2_over_2() -> CycloNumber:
    # sqrt(2)/2 = (zeta_8 + zeta_8^-1)/2
    global _SQRT2_HALF
    if _SQRT2_HALF is None:
        _SQRT2_HALF = (root_of_unity(8, 1) + root_of_unity(8, 7)) * Fraction(1, 2)
    return _SQRT2_HALF


@dataclass(frozen=True)
class SineCoefficient:
    """n-th Fourier-sine coefficient a_n = pi_multiple / pi (exact), with float view."""

    n: int
    pi_multiple: CycloNumber
    approx: complex


def bw_coefficients(phi: StepFunction, N: int) -> list[SineCoefficient]:
    """First N sine coefficients of phi; a_n = f(n) sqrt(2) / (2 pi n).

    The returned pi_multiple c_n is exact with a_n = c_n / pi; c_n is also
    the coefficient of n^(-s), times pi, in the transformed series of phi.
    """
    if phi.is_zero():
        return [
            SineCoefficient(n=n, pi_multiple=CycloNumber.from_rational(0), approx=0j)
            for n in range(1, N + 1)
        ]
    f = sine_coeff_fn(phi)
    import math

    out = []
    for n in range(1, N + 1):
        c = f(n) * _sqrt2_over_2() * Fraction(1, n)
        out.append(SineCoefficient(n=n, pi_multiple=c, approx=c.to_complex() / math.pi))
    return out


def linear_combine(terms) -> StepFunction:
    """Pointwise sum of coefficient * step function, with merged representation."""
    terms = [(CycloNumber.coerce(c), phi) for c, phi in terms]
    if not terms:
        raise StepFunctionError("empty combination")
    cuts = sorted({bp for _, phi in terms for bp in phi.breakpoints})
    pieces = []
    for a, b in zip(cuts, cuts[1:]):
        acc = CycloNumber.from_rational(0)
        for c, phi in terms:
            if c.is_zero():
                continue
            # value of phi on (a, b): find the piece containing the midpoint
            mid = (a + b) / 2
            for i in range(len(phi.piece_values)):
                if phi.breakpoints[i] < mid < phi.breakpoints[i + 1]:
                    acc = acc + c * phi.piece_values[i]
                    break
        pieces.append((a, b, acc))
    return make_step(pieces)


# ----------------------------------------------------------------- file I/O

def to_json_dict(phi: StepFunction) -> dict:
    order = phi.value_order
    return {
        "zeta_order": order,
        "pieces": [
            {
                "from": str(phi.breakpoints[i]),
                "to": str(phi.breakpoints[i + 1]),
                "value": v.lift(order).to_literal() if v.order != order else v.to_literal(),
            }
            for i, v in enumerate(phi.piece_values)
        ],
    }


def dumps(phi: StepFunction) -> str:
    return json.dumps(to_json_dict(phi), indent=2)


def from_json_dict(doc: dict) -> StepFunction:
    try:
        order = int(doc.get("zeta_order", 1))
        raw = doc["pieces"]
    except (KeyError, TypeError, ValueError) as exc:
        raise StepFunctionError(f"bad step-function document: {exc}") from exc
    pieces = []
    for item in raw:
        frm = parse_rational(str(item["from"]))
        to = parse_rational(str(item["to"]))
        val = parse_cyclo(str(item["value"]), order)
        pieces.append((frm, to, val))
    return make_step(pieces)


def loads(text: str) -> StepFunction:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StepFunctionError(f"invalid JSON: {exc}") from exc
    return from_json_dict(doc)


def load_file(path) -> StepFunction:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def save_file(phi: StepFunction, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(phi) + "\n")
