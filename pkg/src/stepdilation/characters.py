"""Dirichlet characters mod q: enumeration, conductors, induction, Gauss sums.

Characters are materialized as value tables indexed by residue.  The table
is built from the CRT decomposition of (Z/qZ)^x: a primitive root for each
odd prime power, the generators -1 and 5 for 2^k with k >= 3.  Characters
are ordered lexicographically by their CRT exponent tuples, so enumeration
order (and hence every certificate that names a character by index) is
reproducible across runs.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .arith import divisors, euler_phi, factorize, is_prime
from .exactnum import CycloNumber, root_of_unity


class CharacterError(ValueError):
    pass


def _primitive_root(q: int) -> int:
    """Primitive root mod q for q an odd prime power or 2 or 4."""
    phi = euler_phi(q)
    prime_factors = [p for p, _ in factorize(phi).pairs]
    for g in range(2, q):
        if gcd(g, q) != 1:
            continue
        if all(pow(g, phi // p, q) != 1 for p in prime_factors):
            return g
    raise ArithmeticError(f"no primitive root mod {q}")


def _group_structure(q: int) -> list[tuple[int, int]]:
    """(generator, order) pairs for (Z/qZ)^x via CRT; generators are mod q."""
    if q == 1:
        return []
    comps: list[tuple[int, int, int]] = []  # (modulus piece, generator mod piece, order)
    for p, e in factorize(q).pairs:
        pe = p**e
        if p == 2:
            if e == 1:
                continue  # trivial group
            if e == 2:
                comps.append((4, 3, 2))
            else:
                comps.append((pe, pe - 1, 2))  # -1
                comps.append((pe, 5, 1 << (e - 2)))
        else:
            comps.append((pe, _primitive_root(pe), euler_phi(pe)))
    out = []
    for piece, g, order in comps:
        rest = q // piece
        if rest == 1:
            out.append((g % q, order))
        else:
            # lift g to x = g mod piece, x = 1 mod rest
            inv = pow(rest, -1, piece)
            x = (1 + rest * ((g - 1) * inv % piece)) % q
            out.append((x, order))
    return out


@dataclass
class DirichletCharacter:
    """A Dirichlet character mod q as an explicit value table.

    vals[r] is chi(n) for n congruent to r mod q; chi(n) = 0 whenever
    gcd(n, q) > 1.  Nonzero values are roots of unity of order dividing
    the group exponent, stored exactly.
    """

    modulus: int
    vals: tuple[CycloNumber, ...]
    exponents: tuple[int, ...]
    value_order: int
    index: int
    _conductor: int | None = field(default=None, repr=False)
    _inducer_index: int | None = field(default=None, repr=False)

    def __call__(self, n: int) -> CycloNumber:
        return self.vals[n % self.modulus]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        return self.modulus == other.modulus and all(
            a == b for a, b in zip(self.vals, other.vals)
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.index))

    # ------------------------------------------------------------ properties
    @property
    def is_principal(self) -> bool:
        return not any(self.exponents)

    @property
    def parity(self) -> int:
        """chi(-1), +1 or -1."""
        v = self(self.modulus - 1) if self.modulus > 1 else self(0)
        f = v.as_fraction()
        return 1 if f == 1 else -1

    @property
    def order(self) -> int:
        """Multiplicative order of the character."""
        structure = _group_structure(self.modulus)
        out = 1
        for (_, comp_order), k in zip(structure, self.exponents):
            o = comp_order // gcd(comp_order, k)
            out = out * o // gcd(out, o)
        return out

    def conductor(self) -> tuple[int, "DirichletCharacter"]:
        """Smallest q0 | q and primitive psi mod q0 with chi = psi * chi_q."""
        if self._conductor is None:
            self._find_conductor()
        return self._conductor, enumerate_characters(self._conductor)[self._inducer_index]

    @property
    def is_primitive(self) -> bool:
        q0, _ = self.conductor()
        return q0 == self.modulus

    def _find_conductor(self):
        q = self.modulus
        for d in divisors(q):
            for psi in enumerate_characters(d):
                if all(
                    self.vals[n % q] == psi.vals[n % d]
                    for n in range(1, q + 1)
                    if gcd(n, q) == 1
                ):
                    self._conductor = d
                    self._inducer_index = psi.index
                    return
        raise ArithmeticError("character has no inducing character (bug)")

    def conj(self) -> "DirichletCharacter":
        """The complex-conjugate character, as the enumerated instance."""
        structure = _group_structure(self.modulus)
        exps = tuple(
            (-k) % order for (_, order), k in zip(structure, self.exponents)
        )
        for chi in enumerate_characters(self.modulus):
            if chi.exponents == exps:
                return chi
        raise ArithmeticError("conjugate character missing from enumeration (bug)")

    def serialize(self) -> dict:
        return {
            "modulus": self.modulus,
            "conductor": self.conductor()[0],
            "index": self.index,
            "values": {str(n): self(n).to_literal() for n in range(1, self.modulus + 1)},
        }


_enum_lock = threading.Lock()
_enum_cache: dict[int, list[DirichletCharacter]] = {}


def enumerate_characters(q: int) -> list[DirichletCharacter]:
    """All phi(q) characters mod q; index 0 is principal, order lex on exponents."""
    if q < 1:
        raise ValueError("modulus must be >= 1")
    got = _enum_cache.get(q)
    if got is not None:
        return got
    import itertools

    structure = _group_structure(q)
    exponent = 1
    for _, order in structure:
        exponent = exponent * order // gcd(exponent, order)
    one = CycloNumber.from_rational(1)
    zero = CycloNumber.from_rational(0)

    # discrete log table: residue -> exponent tuple over the generators
    ranges = [range(order) for _, order in structure]
    logs: dict[int, tuple[int, ...]] = {1 % q: tuple(0 for _ in structure)}
    for combo in itertools.product(*ranges):
        r = 1 % q
        for (g, _), k in zip(structure, combo):
            r = (r * pow(g, k, q)) % q
        logs[r] = combo

    chars: list[DirichletCharacter] = []
    for index, exps in enumerate(itertools.product(*ranges) if structure else [()]):
        vals = [zero] * q
        if q == 1:
            vals = [one]
        else:
            for r, combo in logs.items():
                e = 0
                for (_, order), k, a in zip(structure, exps, combo):
                    e += k * a * (exponent // order)
                vals[r] = root_of_unity(exponent, e) if e % exponent else one
        chars.append(
            DirichletCharacter(
                modulus=q,
                vals=tuple(vals),
                exponents=tuple(exps),
                value_order=exponent,
                index=index,
            )
        )
    with _enum_lock:
        _enum_cache[q] = chars
    return chars


def principal_character(q: int) -> DirichletCharacter:
    return enumerate_characters(q)[0]


_prim_cache: dict[int, list[DirichletCharacter]] = {}


def primitive_characters(q: int) -> list[DirichletCharacter]:
    got = _prim_cache.get(q)
    if got is None:
        got = [chi for chi in enumerate_characters(q) if chi.conductor()[0] == q]
        with _enum_lock:
            _prim_cache[q] = got
    return got


def conductor(chi: DirichletCharacter) -> tuple[int, DirichletCharacter]:
    return chi.conductor()


def induce(psi: DirichletCharacter, q: int) -> DirichletCharacter:
    """The character mod q induced by the primitive psi (pointwise psi * chi_q)."""
    q0 = psi.modulus
    if q % q0:
        raise CharacterError(f"conductor {q0} does not divide modulus {q}")
    if not psi.is_primitive:
        raise CharacterError("induce expects a primitive character")
    for chi in enumerate_characters(q):
        if all(
            chi.vals[n % q] == psi.vals[n % q0]
            for n in range(1, q + 1)
            if gcd(n, q) == 1
        ):
            return chi
    raise ArithmeticError("induced character missing from enumeration (bug)")


def legendre_symbol(n: int, p: int) -> int:
    """(n | p) for an odd prime p."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise CharacterError(f"{p} is not an odd prime")
    n %= p
    if n == 0:
        return 0
    r = pow(n, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def legendre_character(p: int) -> DirichletCharacter:
    """The Legendre symbol mod p as an enumerated character (primitive, real)."""
    if p < 3 or not is_prime(p):
        raise CharacterError(f"{p} is not an odd prime")
    for chi in enumerate_characters(p):
        if all(chi(n) == legendre_symbol(n, p) for n in range(1, p)):
            return chi
    raise ArithmeticError("Legendre character missing from enumeration (bug)")


def gauss_sum_direct(n: int, chi: DirichletCharacter) -> CycloNumber:
    """tau(n, chi) = sum_{m=1}^{q} chi(m) e^(2 pi i m n / q), exact."""
    q = chi.modulus
    order = q * chi.value_order // gcd(q, chi.value_order)
    terms: dict[int, Fraction] = {}
    step_q = order // q
    step_v = order // chi.value_order
    for m in range(1, q + 1):
        v = chi.vals[m % q]
        if not v._terms:
            continue
        base = (m * n % q) * step_q
        for e, c in v._terms.items():
            # v is a single root of unity times a rational (usually exactly one term)
            key = (base + e * (order // v.order)) % order
            terms[key] = terms.get(key, Fraction(0)) + c
    return CycloNumber.from_terms(order, terms)


_tau_cache: dict[tuple[int, int], CycloNumber] = {}


def gauss_sum(chi: DirichletCharacter) -> CycloNumber:
    """tau(chi) = tau(1, chi), cached."""
    key = (chi.modulus, chi.index)
    got = _tau_cache.get(key)
    if got is None:
        got = gauss_sum_direct(1, chi)
        with _enum_lock:
            _tau_cache[key] = got
    return got


def gauss_sum_formula(n: int, chi: DirichletCharacter) -> CycloNumber:
    """tau(n, chi) via the closed form through the inducing primitive character.

    tau(n, chi) = phi(q)/phi(q/n^) * mu(q/(n^ q0)) * psi(q/(n^ q0))
                  * conj(psi)(n/n^) * tau(psi),   n^ = gcd(n, q/q0).
    """
    from .arith import mobius

    q = chi.modulus
    q0, psi = chi.conductor()
    nh = gcd(n, q // q0)
    if (q // nh) % q0:
        # psi(q/(n^ q0)) is not even well formed; the sum vanishes
        return CycloNumber.from_rational(0)
    scale = Fraction(euler_phi(q), euler_phi(q // nh))
    m = mobius(q // (nh * q0))
    if m == 0:
        return CycloNumber.from_rational(0)
    a = psi(q // (nh * q0))
    b = psi(n // nh).conj()
    return (gauss_sum(psi) * a * b) * (scale * m)


def crt_split(
    psi: DirichletCharacter, q1: int, q2: int
) -> tuple[DirichletCharacter, DirichletCharacter]:
    """Split a primitive psi mod q1*q2 (coprime factors) as psi = psi1 * psi2."""
    q = psi.modulus
    if q1 * q2 != q or gcd(q1, q2) != 1:
        raise CharacterError("crt_split needs q = q1*q2 with gcd(q1, q2) = 1")
    if not psi.is_primitive:
        raise CharacterError("crt_split expects a primitive character")

    def component(qa: int, qb: int) -> DirichletCharacter:
        if qa == 1:
            return principal_character(1)
        # n = a mod qa, n = 1 mod qb
        inv = pow(qb, -1, qa)
        table = {}
        for a in range(qa):
            if gcd(a, qa) != 1:
                continue
            n = (1 + qb * ((a - 1) * inv % qa)) % q
            table[a] = psi(n)
        for cand in enumerate_characters(qa):
            if all(cand.vals[a] == v for a, v in table.items()):
                return cand
        raise ArithmeticError("CRT component missing from enumeration (bug)")

    psi1 = component(q1, q2)
    psi2 = component(q2, q1)
    for n in range(1, q + 1):
        if not (psi(n) == psi1(n) * psi2(n)):
            raise ArithmeticError("CRT split failed pointwise check (bug)")
    if psi1.conductor()[0] != q1 or psi2.conductor()[0] != q2:
        raise CharacterError("split components are not primitive")
    return psi1, psi2


def character_from_assignments(q: int, assignments: dict[int, CycloNumber]) -> DirichletCharacter:
    """The unique character mod q matching the given residue -> value assignments."""
    matches = [
        chi
        for chi in enumerate_characters(q)
        if all(chi(n) == v for n, v in assignments.items())
    ]
    if not matches:
        raise CharacterError(f"no character mod {q} matches {assignments}")
    if len(matches) > 1:
        raise CharacterError(
            f"{len(matches)} characters mod {q} match; give more values"
        )
    return matches[0]
