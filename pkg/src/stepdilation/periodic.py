"""The space H_q of q-periodic arithmetical functions.

H_q carries the inner product <f, g> = sum_{n=1}^{q} f(n) conj(g(n)) and an
orthogonal basis of q functions xi_chi (one per divisor d | q and character
chi mod q/d).  Grouping the xi by the primitive character inducing chi
splits H_q into orthogonal summands E_{q,psi}; membership of f in E_{q,psi}
is a finite check because both sides of the defining identity
f(n) = f(gcd(n, q/q0)) psi(n / gcd(n, q/q0)) are q-periodic in n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import divisors, euler_phi, mobius
from .characters import DirichletCharacter, enumerate_characters, induce, primitive_characters
from .exactnum import CycloNumber, root_of_unity


class MembershipError(ValueError):
    pass


@dataclass
class PeriodicFn:
    """A q-periodic arithmetical function given by its first q values."""

    period: int
    values: tuple[CycloNumber, ...]

    def __post_init__(self):
        if self.period < 1 or len(self.values) != self.period:
            raise ValueError("need exactly `period` values")
        self.values = tuple(CycloNumber.coerce(v) for v in self.values)

    @staticmethod
    def from_values(values) -> "PeriodicFn":
        vals = tuple(CycloNumber.coerce(v) for v in values)
        return PeriodicFn(len(vals), vals)

    def __call__(self, n: int) -> CycloNumber:
        if n < 1:
            raise ValueError("periodic functions are evaluated at n >= 1")
        return self.values[(n - 1) % self.period]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PeriodicFn):
            return NotImplemented
        if self.period != other.period:
            return False
        return all(a == b for a, b in zip(self.values, other.values))

    __hash__ = None

    def __add__(self, other: "PeriodicFn") -> "PeriodicFn":
        if self.period != other.period:
            raise ValueError("period mismatch")
        return PeriodicFn(self.period, tuple(a + b for a, b in zip(self.values, other.values)))

    def scale(self, c) -> "PeriodicFn":
        c = CycloNumber.coerce(c)
        return PeriodicFn(self.period, tuple(c * v for v in self.values))

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def inner(self, other: "PeriodicFn") -> CycloNumber:
        if self.period != other.period:
            raise ValueError("period mismatch")
        acc = CycloNumber.from_rational(0)
        for a, b in zip(self.values, other.values):
            acc = acc + a * b.conj()
        return acc


@dataclass(frozen=True)
class ESpaceTag:
    """Names the summand E_{q,psi}: modulus q plus the primitive psi."""

    modulus: int
    psi: DirichletCharacter

    def __post_init__(self):
        q0 = self.psi.modulus
        if self.modulus % q0:
            raise ValueError("conductor must divide the modulus")

    def __repr__(self) -> str:
        return f"ESpaceTag(q={self.modulus}, psi=mod {self.psi.modulus}#{self.psi.index})"


def fourier_transform(f: PeriodicFn) -> PeriodicFn:
    """(T f)(m) = (1/q) sum_n e^(-2 pi i m n / q) f(n); the transform on Z/qZ."""
    q = f.period
    inv_q = Fraction(1, q)
    out = []
    for m in range(1, q + 1):
        acc = CycloNumber.from_rational(0)
        for n in range(1, q + 1):
            v = f.values[n - 1]
            if v.is_zero():
                continue
            acc = acc + v * root_of_unity(q, -(m * n) % q)
        out.append(acc * inv_q)
    return PeriodicFn(q, tuple(out))


def inverse_fourier_transform(g: PeriodicFn) -> PeriodicFn:
    """f(n) = sum_m g(m) e^(2 pi i m n / q); inverse of :func:`fourier_transform`."""
    q = g.period
    out = []
    for n in range(1, q + 1):
        acc = CycloNumber.from_rational(0)
        for m in range(1, q + 1):
            v = g.values[m - 1]
            if v.is_zero():
                continue
            acc = acc + v * root_of_unity(q, (m * n) % q)
        out.append(acc)
    return PeriodicFn(q, tuple(out))


def xi_function(q: int, d: int, chi: DirichletCharacter) -> PeriodicFn:
    """xi_chi(n) = chi(n/d) if d | n else 0, for chi mod q/d."""
    if q % d or chi.modulus != q // d:
        raise ValueError("xi needs d | q and chi mod q/d")
    vals = []
    for n in range(1, q + 1):
        vals.append(chi(n // d) if n % d == 0 else CycloNumber.from_rational(0))
    return PeriodicFn(q, tuple(vals))


def xi_basis(q: int) -> list[PeriodicFn]:
    """The q functions xi_chi over all d | q, chi mod q/d; orthogonal basis of H_q."""
    out = []
    for d in divisors(q):
        for chi in enumerate_characters(q // d):
            out.append(xi_function(q, d, chi))
    return out


def e_membership(f: PeriodicFn, tag: ESpaceTag) -> bool:
    """Whether f(n) = f(n^) psi(n/n^) for all n, with n^ = gcd(n, q/q0)."""
    q = f.period
    if q != tag.modulus:
        raise ValueError("tag modulus must equal the function period")
    psi = tag.psi
    q0 = psi.modulus
    ratio = q // q0
    for n in range(1, q + 1):
        nh = gcd(n, ratio)
        if not (f(n) == f(nh) * psi(n // nh)):
            return False
    return True


def e_decompose(f: PeriodicFn) -> dict[ESpaceTag, PeriodicFn]:
    """Orthogonal decomposition of f into its nonzero E_{q,psi} components."""
    q = f.period
    out: dict[ESpaceTag, PeriodicFn] = {}
    for q0 in divisors(q):
        for psi in primitive_characters(q0):
            comp_vals = [CycloNumber.from_rational(0)] * q
            nonzero = False
            for d in divisors(q // q0):
                chi = induce(psi, q // d)
                xi = xi_function(q, d, chi)
                coeff = f.inner(xi)
                if coeff.is_zero():
                    continue
                coeff = coeff * Fraction(1, euler_phi(q // d))
                nonzero = True
                for i in range(q):
                    comp_vals[i] = comp_vals[i] + coeff * xi.values[i]
            if nonzero:
                comp = PeriodicFn(q, tuple(comp_vals))
                if not comp.is_zero():
                    out[ESpaceTag(q, psi)] = comp
    return out


def find_unique_component(f: PeriodicFn) -> ESpaceTag | None:
    """The tag of the single E-space containing f, if f is nonzero and pure."""
    if f.is_zero():
        return None
    comps = e_decompose(f)
    if len(comps) != 1:
        return None
    return next(iter(comps))


def find_membership_tag(f: PeriodicFn) -> ESpaceTag | None:
    """Direct search for the unique psi with f in E_{q,psi} (early-abort scans).

    Returns None if f is zero or no primitive character works.  Uniqueness
    for nonzero f follows from the orthogonal decomposition of H_q; the
    search still verifies it and raises on duplicates.
    """
    if f.is_zero():
        return None
    q = f.period
    matches: list[ESpaceTag] = []
    for q0 in divisors(q):
        for psi in primitive_characters(q0):
            tag = ESpaceTag(q, psi)
            if e_membership(f, tag):
                matches.append(tag)
    if len(matches) > 1:
        raise ArithmeticError(
            f"E-space membership is not unique for a nonzero function (bug): {matches}"
        )
    return matches[0] if matches else None


def poly_quotient(f: PeriodicFn, tag: ESpaceTag):
    """The Dirichlet polynomial P with D_f = P * L(s, psi); support in q/q0.

    Coefficient at d is (f * mu psi)(d), nonzero only for d | q/q0 once f
    lies in E_{q,psi}.
    """
    from .dirpoly import DirichletPoly

    if not e_membership(f, tag):
        raise MembershipError("function is not in the requested E-space")
    psi = tag.psi
    q0 = psi.modulus
    coeffs = {}
    for d in divisors(tag.modulus // q0):
        acc = CycloNumber.from_rational(0)
        for e in divisors(d):
            m = mobius(e)
            if m == 0:
                continue
            pv = psi(e)
            if pv.is_zero():
                continue
            acc = acc + f(d // e) * pv * m
        if not acc.is_zero():
            coeffs[d] = acc
    return DirichletPoly(coeffs)


def mu_psi_convolve(g: PeriodicFn, psi: DirichletCharacter, n: int) -> CycloNumber:
    """(g * mu psi)(n), exact."""
    q0 = psi.modulus
    acc = CycloNumber.from_rational(0)
    for e in divisors(n):
        m = mobius(e)
        if m == 0:
            continue
        pv = psi(e)
        if pv.is_zero():
            continue
        acc = acc + g(n // e) * pv * m
    return acc
