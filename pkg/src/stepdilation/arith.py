"""Classical arithmetic functions and Dirichlet convolution.

All moduli in this package stay at desk scale (a few thousand), so
factorization is trial division against a cached prime sieve.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

from .exactnum import CycloNumber

Value = Union[int, Fraction, CycloNumber]

_sieve_lock = threading.Lock()
_primes: list[int] = [2, 3, 5, 7, 11, 13]


def _primes_up_to(n: int) -> list[int]:
    global _primes
    if _primes[-1] >= n:
        return _primes
    with _sieve_lock:
        if _primes[-1] >= n:
            return _primes
        limit = max(n, 2 * _primes[-1])
        mark = bytearray([1]) * (limit + 1)
        mark[0:2] = b"\x00\x00"
        for p in range(2, int(limit**0.5) + 1):
            if mark[p]:
                mark[p * p :: p] = b"\x00" * len(mark[p * p :: p])
        _primes = [i for i in range(limit + 1) if mark[i]]
    return _primes


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _primes_up_to(max(int(n**0.5) + 1, 3)):
        if p * p > n:
            break
        if n % p == 0:
            return n == p
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs with primes ascending."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def value(self) -> int:
        n = 1
        for p, e in self.pairs:
            n *= p**e
        return n


def factorize(n: int) -> Factorization:
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    pairs = []
    rem = n
    for p in _primes_up_to(max(int(n**0.5) + 1, 3)):
        if p * p > rem:
            break
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            pairs.append((p, e))
    if rem > 1:
        pairs.append((rem, 1))
    return Factorization(tuple(pairs))


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius expects n >= 1")
    if n == 1:
        return 1
    f = factorize(n)
    if any(e > 1 for _, e in f.pairs):
        return 0
    return -1 if len(f.pairs) % 2 else 1


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi expects n >= 1")
    out = 1
    for p, e in factorize(n).pairs:
        out *= (p - 1) * p ** (e - 1)
    return out


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("divisors expects n >= 1")
    out = [1]
    for p, e in factorize(n).pairs:
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def divisor_count(n: int) -> int:
    out = 1
    for _, e in factorize(n).pairs:
        out *= e + 1
    return out


def prime_divisors(n: int) -> list[int]:
    return list(factorize(n).primes)


def squarefree_kernel(n: int) -> int:
    out = 1
    for p, _ in factorize(n).pairs:
        out *= p
    return out


@dataclass
class ArithFnView:
    """Evaluation contract n -> value, with optional period/support metadata.

    period 0 means aperiodic; support_bound b (if set) promises value(n) = 0
    for n > b.  Values may be int, Fraction or CycloNumber; convolution
    coerces as needed.
    """

    fn: Callable[[int], Value]
    period: int = 0
    support_bound: int | None = None
    name: str = ""

    def __call__(self, n: int) -> Value:
        if n < 1:
            raise ValueError("arithmetical functions are defined on n >= 1")
        if self.support_bound is not None and n > self.support_bound:
            return 0
        if self.period:
            n = (n - 1) % self.period + 1
        return self.fn(n)


MOBIUS = ArithFnView(mobius, name="mu")
ONE_FN = ArithFnView(lambda n: 1, name="1")
IDENTITY_AT_1 = ArithFnView(lambda n: 1 if n == 1 else 0, name="delta_1")


def principal_pattern(m: int) -> ArithFnView:
    """chi_m as a bare coprimality pattern: 1 if gcd(n, m) = 1 else 0."""
    from math import gcd

    return ArithFnView(lambda n: 1 if gcd(n, m) == 1 else 0, period=m, name=f"chi_{m}")


def dirichlet_convolve(f, g, n: int) -> CycloNumber:
    """(f * g)(n) = sum over d | n of f(n/d) g(d), exact."""
    if n < 1:
        raise ValueError("convolution expects n >= 1")
    acc = CycloNumber.from_rational(0)
    for d in divisors(n):
        fv = f(n // d)
        if isinstance(fv, (int, Fraction)) and not fv:
            continue
        gv = g(d)
        acc = acc + CycloNumber.coerce(fv) * CycloNumber.coerce(gv)
    return acc
