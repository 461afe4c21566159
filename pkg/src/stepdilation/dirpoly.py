"""Dirichlet polynomials and their Bohr lifts.

A Dirichlet polynomial sum a_n n^(-s) lifts to an ordinary polynomial in
one variable per prime dividing its support, via n^(-s) -> prod z_j^(v_pj(n)).
Variables are indexed by the primes that actually occur (recorded in
prime_index), which keeps the lifted dimension minimal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import mpmath

from .arith import factorize
from .exactnum import CycloNumber, ComplexInterval, RatInterval
from .exactnum.interval import _iv_to_interval
from .characters import DirichletCharacter


class TwistError(ValueError):
    pass


def _coerce_coeffs(coeffs) -> dict[int, CycloNumber]:
    out = {}
    for n, c in coeffs.items():
        if n < 1:
            raise ValueError("Dirichlet polynomial indices must be >= 1")
        c = CycloNumber.coerce(c)
        if not c.is_zero():
            out[int(n)] = c
    return out


@dataclass
class DirichletPoly:
    """Finitely supported coefficient map n -> a_n representing sum a_n n^(-s)."""

    coeffs: dict[int, CycloNumber]

    def __post_init__(self):
        self.coeffs = _coerce_coeffs(self.coeffs)

    @property
    def support(self) -> list[int]:
        return sorted(self.coeffs)

    @property
    def constant_term(self) -> CycloNumber:
        return self.coeffs.get(1, CycloNumber.from_rational(0))

    @property
    def abscissa_of_absolute_convergence(self) -> float:
        """-inf for every polynomial; kept as a documented attribute."""
        return float("-inf")

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirichletPoly):
            return NotImplemented
        if set(self.coeffs) != set(other.coeffs):
            return False
        return all(self.coeffs[n] == other.coeffs[n] for n in self.coeffs)

    __hash__ = None

    def __add__(self, other: "DirichletPoly") -> "DirichletPoly":
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out[n] + c if n in out else c
        return DirichletPoly(out)

    def __mul__(self, other) -> "DirichletPoly":
        if isinstance(other, DirichletPoly):
            out: dict[int, CycloNumber] = {}
            for n1, c1 in self.coeffs.items():
                for n2, c2 in other.coeffs.items():
                    n = n1 * n2
                    p = c1 * c2
                    out[n] = out[n] + p if n in out else p
            return DirichletPoly(out)
        c = CycloNumber.coerce(other)
        return DirichletPoly({n: v * c for n, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __neg__(self) -> "DirichletPoly":
        return self * -1

    def scale(self, c) -> "DirichletPoly":
        return self * c

    def serialize(self) -> dict:
        return {
            "terms": {
                str(n): {"order": c.order, "value": c.to_literal()}
                for n, c in sorted(self.coeffs.items())
            }
        }

    def __repr__(self) -> str:
        if not self.coeffs:
            return "DirichletPoly(0)"
        parts = [
            f"({c.to_literal()})*{n}^-s" if n > 1 else f"({c.to_literal()})"
            for n, c in sorted(self.coeffs.items())
        ]
        return "DirichletPoly(" + " + ".join(parts) + ")"


@dataclass
class BohrPoly:
    """Polynomial in z_1..z_k; variable j stands for prime_index[j]^(-s)."""

    terms: dict[tuple[int, ...], CycloNumber]
    prime_index: tuple[int, ...]

    def __post_init__(self):
        clean = {}
        k = len(self.prime_index)
        for expv, c in self.terms.items():
            expv = tuple(expv)
            if len(expv) != k:
                raise ValueError("exponent vector length must match prime_index")
            c = CycloNumber.coerce(c)
            if not c.is_zero():
                clean[expv] = c
        self.terms = clean
        self.prime_index = tuple(self.prime_index)

    @property
    def num_variables(self) -> int:
        return len(self.prime_index)

    @property
    def constant_term(self) -> CycloNumber:
        zero = (0,) * self.num_variables
        return self.terms.get(zero, CycloNumber.from_rational(0))

    def degree_in(self, j: int) -> int:
        return max((e[j] for e in self.terms), default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BohrPoly):
            return NotImplemented
        if self.prime_index != other.prime_index or set(self.terms) != set(other.terms):
            return False
        return all(self.terms[e] == other.terms[e] for e in self.terms)

    __hash__ = None

    def __mul__(self, other: "BohrPoly") -> "BohrPoly":
        if self.prime_index != other.prime_index:
            raise ValueError("variable sets differ; align prime_index first")
        out: dict[tuple[int, ...], CycloNumber] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return BohrPoly(out, self.prime_index)

    def __sub__(self, other: "BohrPoly") -> "BohrPoly":
        if self.prime_index != other.prime_index:
            raise ValueError("variable sets differ; align prime_index first")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] - c if e in out else -c
        return BohrPoly(out, self.prime_index)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.terms.values())

    def evaluate_exact(self, point: tuple) -> CycloNumber:
        """Exact value at a point of CycloNumbers/rationals."""
        vals = [CycloNumber.coerce(p) for p in point]
        acc = CycloNumber.from_rational(0)
        for expv, c in self.terms.items():
            term = c
            for v, e in zip(vals, expv):
                if e:
                    term = term * v**e
            acc = acc + term
        return acc

    def evaluate_interval(self, point: tuple[ComplexInterval, ...], precision: int = 60) -> ComplexInterval:
        """Interval enclosure of the value over a box."""
        from .exactnum.interval import embed

        acc = ComplexInterval.point(0)
        for expv, c in self.terms.items():
            term = embed(c, precision)
            for box, e in zip(point, expv):
                for _ in range(e):
                    term = term * box
            acc = acc + term
        return acc

    def evaluate_complex(self, point) -> complex:
        acc = 0j
        for expv, c in self.terms.items():
            term = c.to_complex()
            for z, e in zip(point, expv):
                term *= z**e
            acc += term
        return acc

    def to_dirichlet(self) -> DirichletPoly:
        coeffs: dict[int, CycloNumber] = {}
        for expv, c in self.terms.items():
            n = 1
            for p, e in zip(self.prime_index, expv):
                n *= p**e
            coeffs[n] = coeffs[n] + c if n in coeffs else c
        return DirichletPoly(coeffs)

    def drop_unused_variables(self) -> "BohrPoly":
        used = [j for j in range(self.num_variables) if any(e[j] for e in self.terms)]
        if len(used) == self.num_variables:
            return self
        primes = tuple(self.prime_index[j] for j in used)
        terms = {tuple(e[j] for j in used): c for e, c in self.terms.items()}
        return BohrPoly(terms, primes)

    def serialize(self) -> dict:
        return {
            "primes": list(self.prime_index),
            "terms": {
                ",".join(map(str, e)): {"order": c.order, "value": c.to_literal()}
                for e, c in sorted(self.terms.items())
            },
        }


def bohr_lift(P: DirichletPoly) -> BohrPoly:
    """B(sum a_n n^(-s)) = sum a_n z^alpha(n), alpha(n) the prime exponent vector."""
    primes: set[int] = set()
    facts = {}
    for n in P.coeffs:
        f = factorize(n)
        facts[n] = f
        primes.update(f.primes)
    prime_index = tuple(sorted(primes))
    pos = {p: j for j, p in enumerate(prime_index)}
    terms: dict[tuple[int, ...], CycloNumber] = {}
    for n, c in P.coeffs.items():
        ev = [0] * len(prime_index)
        for p, e in facts[n].pairs:
            ev[pos[p]] = e
        terms[tuple(ev)] = c
    return BohrPoly(terms, prime_index)


def twist(P: DirichletPoly, rho: dict[int, CycloNumber]) -> DirichletPoly:
    """Coefficients a_n * rho(n) for a completely multiplicative |rho| <= 1 twist.

    rho is given on primes; missing primes in the support are an error.
    """
    from .exactnum.interval import sign_of_real

    rho = {p: CycloNumber.coerce(v) for p, v in rho.items()}
    for p, v in rho.items():
        d = CycloNumber.from_rational(1) - v.norm_sq()
        if not d.is_zero() and sign_of_real(d) < 0:
            raise TwistError(f"|rho({p})| > 1")
    out: dict[int, CycloNumber] = {}
    for n, c in P.coeffs.items():
        val = c
        dead = False
        for p, e in factorize(n).pairs:
            if p not in rho:
                raise TwistError(f"twist not defined at prime {p}")
            r = rho[p]
            if r.is_zero():
                dead = True
                break
            val = val * r**e
        if not dead:
            out[n] = out.get(n, CycloNumber.from_rational(0)) + val
    return DirichletPoly(out)


def _npow_interval(n: int, s: ComplexInterval, workprec: int) -> ComplexInterval:
    """Enclosure of n^(-s) for a complex interval s."""
    from .exactnum.interval import _mp_lock

    def to_iv(r: RatInterval):
        lo = mpmath.iv.mpf(r.lo.numerator) / r.lo.denominator
        hi = mpmath.iv.mpf(r.hi.numerator) / r.hi.denominator
        return mpmath.iv.mpf([lo.a, hi.b])

    with _mp_lock:
        saved = mpmath.iv.prec
        try:
            mpmath.iv.prec = workprec
            sigma = to_iv(s.re)
            tau = to_iv(s.im)
            ln_n = mpmath.iv.log(mpmath.iv.mpf(n))
            mag = mpmath.iv.exp(-sigma * ln_n)
            ang = tau * ln_n
            c, si = mpmath.iv.cos(ang), mpmath.iv.sin(ang)
            re = _iv_to_interval(mag * c)
            im = _iv_to_interval(-(mag * si))
        finally:
            mpmath.iv.prec = saved
    return ComplexInterval(re, im)


def evaluate(P: DirichletPoly, s: ComplexInterval, precision: int = 60) -> ComplexInterval:
    """Interval enclosure of P(s) = sum a_n n^(-s)."""
    from .exactnum.interval import embed

    workprec = precision + 16
    acc = ComplexInterval.point(0)
    for n, c in sorted(P.coeffs.items()):
        box = embed(c, precision)
        if n > 1:
            box = box * _npow_interval(n, s, workprec)
        acc = acc + box
    return acc


@dataclass(frozen=True)
class PartialSum:
    """Truncated L-series value with a rigorous tail magnitude bound."""

    value: ComplexInterval
    tail_bound: Fraction
    terms: int


def l_partial_sum(
    chi: DirichletCharacter, s: ComplexInterval, N: int, precision: int = 60
) -> PartialSum:
    """Enclosure of sum_{n <= N} chi(n) n^(-s) plus an integral tail bound.

    The tail bound sum_{n > N} n^(-sigma) <= N^(1-sigma)/(sigma-1) needs
    Re s > 1 to be meaningful; diagnostics only.
    """
    P = DirichletPoly({n: chi(n) for n in range(1, N + 1) if not chi(n).is_zero()})
    value = evaluate(P, s, precision)
    sigma = s.re.lo
    if sigma > 1:
        # N^(1-sigma) <= N^(1-floor) crudely via rational power with integer exponent
        expo = sigma - 1
        # bound N^(-expo) by N^(-floor(expo)) (expo >= floor >= 0)
        import math

        f = math.floor(expo)
        tail = Fraction(1, N**f) / expo if f >= 1 else Fraction(1) / expo
    else:
        tail = Fraction(-1)  # sentinel: no convergent bound
    return PartialSum(value=value, tail_bound=tail, terms=N)
