"""Completeness decisions for periodic dilation systems of rational step functions.

Pipeline: sample the jump function g(m) = J(m/t) with period q = 2t, search
the primitive Dirichlet characters psi of conductor q0 | q for the unique
one satisfying

    g(m) = g(gcd(m, q/q0)) * psi(m / gcd(m, q/q0))   for all m,

then decide whether the polynomial  sum_{d | q/q0} (g * mu psi)(q/(d q0)) d^(-s)
has nonzero constant term and no zeros on the open right half-plane.  The
verdict carries the character, the polynomial and the zero-freeness
certificate, and in certify mode every run re-derives the transform-side
identity (f * mu conj(psi))(d) = tau(psi) d (g * mu psi)(q/(d q0)) as a
guard against implementation drift.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .arith import divisors, euler_phi, factorize, is_prime, mobius, prime_divisors
from .characters import (
    DirichletCharacter,
    gauss_sum,
    primitive_characters,
)
from .dirpoly import DirichletPoly
from .exactnum import CycloNumber, sign_of_real
from .periodic import PeriodicFn, mu_psi_convolve
from .stepfn import StepFunction, jump_data, jump_table, minimal_denominator
from .zerofree import Certificate, ConstantTermError, ZeroFreeVerdict, decide_zero_free


class InternalCheckError(RuntimeError):
    """A cross-check that should hold mathematically failed: implementation bug."""


@dataclass(frozen=True)
class Violation:
    name: str
    detail: str


@dataclass
class CompletenessVerdict:
    status: str  # Complete | Incomplete | Undetermined
    character: tuple[int, DirichletCharacter] | None = None
    theorem_polynomial: DirichletPoly | None = None
    zero_verdict: ZeroFreeVerdict | None = None
    incompleteness_reason: str | None = None
    prefilter_violations: list[Violation] = field(default_factory=list)
    t_used: int = 0
    mode: str = "certify"

    def to_json_dict(self) -> dict:
        doc: dict = {"status": self.status, "t": self.t_used, "mode": self.mode}
        if self.character is not None:
            q0, psi = self.character
            doc["character"] = psi.serialize()
        if self.theorem_polynomial is not None:
            doc["polynomial"] = self.theorem_polynomial.serialize()
        if self.zero_verdict is not None:
            doc["zero_verdict"] = self.zero_verdict.to_json_dict()
        if self.incompleteness_reason is not None:
            doc["reason"] = self.incompleteness_reason
        if self.prefilter_violations:
            doc["prefilter_violations"] = [
                {"name": v.name, "detail": v.detail} for v in self.prefilter_violations
            ]
        return doc


# --------------------------------------------------------------------------
# condition (1): the character search


def condition1_matches(g: PeriodicFn) -> list[DirichletCharacter]:
    """All primitive psi (conductor dividing q) with g(m) = g(m^) psi(m/m^)."""
    q = g.period
    out = []
    for q0 in divisors(q):
        for psi in primitive_characters(q0):
            ratio = q // q0
            vals = g.values
            pv = psi.vals
            ok = True
            for m in range(1, q + 1):
                mh = gcd(m, ratio)
                if mh == m:
                    continue
                if not (vals[m - 1] == vals[mh - 1] * pv[(m // mh) % q0]):
                    ok = False
                    break
            if ok:
                out.append(psi)
    return out


def associated_character(phi: StepFunction) -> tuple[int, DirichletCharacter] | None:
    """The unique primitive psi with g in E_{q,psi}; denominator-independent.

    Computed at the minimal denominator and re-derived at twice it; the two
    must agree (the associated character does not depend on the choice of
    common denominator).
    """
    if phi.is_zero():
        return None
    t = minimal_denominator(phi)
    results = []
    for tt in (t, 2 * t):
        matches = condition1_matches(jump_data(phi, tt).g)
        if len(matches) > 1:
            raise InternalCheckError(f"condition (1) matched {len(matches)} characters")
        results.append(matches[0] if matches else None)
    a, b = results
    if (a is None) != (b is None) or (a is not None and not (a == b)):
        raise InternalCheckError("associated character changed under denominator doubling")
    return (a.modulus, a) if a is not None else None


# --------------------------------------------------------------------------
# the theorem polynomial and the transform-side identity


def theorem_polynomial(phi: StepFunction, psi: DirichletCharacter, t: int | None = None) -> DirichletPoly:
    """sum_{d | q/q0} (g * mu psi)(q/(d q0)) d^(-s) for the matched psi."""
    jd = jump_data(phi, t)
    g, q = jd.g, jd.q
    q0 = psi.modulus
    if q % q0:
        raise ValueError("character conductor must divide q = 2t")
    ratio = q // q0
    matches = condition1_matches(g)
    if not any(m == psi for m in matches):
        raise ValueError("character does not satisfy condition (1) for this function")
    coeffs = {}
    for d in divisors(ratio):
        v = mu_psi_convolve(g, psi, q // (d * q0))
        if not v.is_zero():
            coeffs[d] = v
    P = DirichletPoly(coeffs)
    verify_transform_identity(g, psi)
    return P


def _f_value(g: PeriodicFn, k: int, order: int) -> CycloNumber:
    """f(k) = sum_{m=1}^{q} g(m) e^(2 pi i m k / q), assembled sparsely."""
    q = g.period
    step = order // q
    terms: dict[int, Fraction] = {}
    for m in range(1, q + 1):
        v = g.values[m - 1]
        if not v._terms:
            continue
        base = (m * k % q) * step
        vstep = order // v.order
        for e, c in v._terms.items():
            key = (base + e * vstep) % order
            s = terms.get(key, Fraction(0)) + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
    return CycloNumber(order, terms)


def verify_transform_identity(g: PeriodicFn, psi: DirichletCharacter) -> None:
    """Assert (f * mu conj(psi))(d) = tau(psi) d (g * mu psi)(q/(d q0)) for d | q/q0.

    f is the inverse Fourier transform of g; the identity ties the
    coefficient pipeline on the jump side to the sine-coefficient side and
    holds whenever condition (1) does.  Failure is an implementation bug.
    """
    q = g.period
    q0 = psi.modulus
    ratio = q // q0
    psibar = psi.conj()
    tau = gauss_sum(psi)
    order = q
    for v in g.values:
        order = lcm(order, v.order)
    order = lcm(order, psi.value_order)
    fcache: dict[int, CycloNumber] = {}

    def f(k: int) -> CycloNumber:
        if k not in fcache:
            fcache[k] = _f_value(g, k, order)
        return fcache[k]

    for d in divisors(ratio):
        lhs = CycloNumber.from_rational(0)
        for k in divisors(d):
            m = mobius(d // k)
            if m == 0:
                continue
            pv = psibar(d // k)
            if pv.is_zero():
                continue
            lhs = lhs + f(k) * pv * m
        rhs = tau * d * mu_psi_convolve(g, psi, q // (d * q0))
        if not (lhs == rhs):
            raise InternalCheckError(
                f"transform identity failed at d={d} (q={q}, q0={q0})"
            )


# --------------------------------------------------------------------------
# necessary conditions (prefilters)


@dataclass
class CensusReport:
    actual: set[Fraction]
    expected: set[Fraction]
    count: int
    formula_count: int

    @property
    def consistent(self) -> bool:
        return self.actual == self.expected and self.count == self.formula_count


def jump_census(phi: StepFunction) -> CensusReport:
    """Group jump discontinuities as a disjoint union of {2m/n : gcd(m,n)=1}.

    A complete function's jump set must be exactly the union over n >= 3
    with J(2/n) != 0, and its size must match half the totient sum.
    """
    t = minimal_denominator(phi)
    j = jump_table(phi)
    actual = {bp for bp, v in phi.interior_jumps().items() if not v.is_zero()}
    expected: set[Fraction] = set()
    formula = 0
    for n in range(3, 2 * t + 1):
        if j(Fraction(2, n)).is_zero():
            continue
        expected.update(
            Fraction(2 * m, n) for m in range(1, (n + 1) // 2) if gcd(m, n) == 1
        )
        formula += euler_phi(n)
    return CensusReport(actual, expected, len(actual), formula // 2)


def _jump_denominator_bound(N: int) -> int:
    """t(N) = prod over primes p <= 2N+1 of p^floor(log_p(3N))."""
    if N < 1:
        return 1
    out = 1
    for p in range(2, 2 * N + 2):
        if not is_prime(p):
            continue
        e = 0
        while p ** (e + 1) <= 3 * N:
            e += 1
        out *= p**e
    return out


def necessary_prefilters(phi: StepFunction, t: int | None = None) -> list[Violation]:
    """Necessary conditions for completeness; any violation certifies Incomplete.

    Real-only filters: the inclusion-exclusion jump inequality at 0+, sign
    coherence of J(2/p) when phi(0+) = 0, and the p = 3 (mod 4) jump
    equalities.  For all functions: |J(s0/t0)| = |J(gcd(s0,2)/t0)|, the
    jump census, and the denominator bound t(N).
    """
    out: list[Violation] = []
    if phi.is_zero():
        return out
    if t is None:
        t = minimal_denominator(phi)
    q = 2 * t
    j = jump_table(phi)

    if phi.is_real():
        s0 = sign_of_real(phi.left_value) if not phi.left_value.is_zero() else 0
        primes = prime_divisors(q)
        if s0 != 0:
            target = 2 * phi.left_value
            for mask in range(1, 1 << len(primes)):
                subset = [p for i, p in enumerate(primes) if mask & (1 << i)]
                total = CycloNumber.from_rational(0)
                for sub in range(1, 1 << len(subset)):
                    prod = 1
                    bits = 0
                    for i, p in enumerate(subset):
                        if sub & (1 << i):
                            prod *= p
                            bits += 1
                    term = j(Fraction(2, prod))
                    total = total + (term if bits % 2 else -term)
                diff = sign_of_real(target - total) if not (target - total).is_zero() else 0
                if (s0 > 0 and diff <= 0) or (s0 < 0 and diff >= 0):
                    out.append(
                        Violation(
                            "jump-inequality",
                            f"2 phi(0+) vs inclusion-exclusion sum over primes {subset}",
                        )
                    )
                    break
        else:
            signs = set()
            for p in primes:
                v = j(Fraction(2, p))
                if not v.is_zero():
                    signs.add(sign_of_real(v))
            if signs == {1, -1}:
                out.append(
                    Violation("jump-sign-coherence", "J(2/p) changes sign across primes")
                )
        for p, e in factorize(t).pairs:
            if p % 4 != 3:
                continue
            for k in range(1, e + 1):
                pk = p**k
                ref: dict[int, CycloNumber] = {}
                for m in range(1, pk):
                    if m % p == 0:
                        continue
                    v = j(Fraction(m, pk))
                    parity = m % 2
                    if parity in ref:
                        if not (ref[parity] == v):
                            out.append(
                                Violation(
                                    "jump-equality-3mod4",
                                    f"J(m/{pk}) differs within parity class",
                                )
                            )
                            break
                    else:
                        ref[parity] = v
                else:
                    continue
                break

    # modulus equalities |J(s0/t0)| = |J(gcd(s0,2)/t0)| for all reduced fractions
    for t0 in divisors(t):
        if t0 == 1:
            continue
        for s in range(1, 2 * t0):
            if gcd(s, t0) != 1:
                continue
            a = j(Fraction(s, t0))
            b = j(Fraction(gcd(s, 2), t0))
            if not (a.norm_sq() == b.norm_sq()):
                out.append(
                    Violation("jump-modulus", f"|J({s}/{t0})| != |J({gcd(s, 2)}/{t0})|")
                )
                break
        else:
            continue
        break

    census = jump_census(phi)
    if not census.consistent:
        out.append(
            Violation(
                "jump-census",
                f"jump set/count mismatch: {census.count} vs {census.formula_count}",
            )
        )

    N = census.count
    bound = _jump_denominator_bound(N)
    for bp in phi.breakpoints[1:-1]:
        if bound % bp.denominator:
            out.append(
                Violation("denominator-bound", f"breakpoint {bp} outside s/t({N}) form")
            )
            break
    return out


# --------------------------------------------------------------------------
# the decision


def decide_completeness(
    phi: StepFunction,
    t: int | None = None,
    mode: str = "certify",
    margin: Fraction = Fraction(1, 10),
    precision: int = 60,
    seed: int = 0,
) -> CompletenessVerdict:
    """Decide whether the periodic dilation system of phi is complete in L^2(0,1)."""
    if mode not in ("fast", "certify"):
        raise ValueError("mode must be 'fast' or 'certify'")
    if phi.is_zero():
        return CompletenessVerdict(
            status="Incomplete", incompleteness_reason="ZeroFunction", t_used=0, mode=mode
        )
    jd = jump_data(phi, t)
    g, q, t_used = jd.g, jd.q, jd.t

    violations: list[Violation] = []
    if mode == "fast":
        violations = necessary_prefilters(phi, t_used)
        if violations:
            return CompletenessVerdict(
                status="Incomplete",
                incompleteness_reason=f"PrefilterViolation({violations[0].name})",
                prefilter_violations=violations,
                t_used=t_used,
                mode=mode,
            )

    matches = condition1_matches(g)
    if len(matches) > 1:
        raise InternalCheckError(
            f"condition (1) matched {len(matches)} characters for a nonzero function"
        )
    if not matches:
        verdict = CompletenessVerdict(
            status="Incomplete",
            incompleteness_reason="NoCharacterCondition1",
            t_used=t_used,
            mode=mode,
        )
        return _crosscheck(phi, verdict, mode, t_used)
    psi = matches[0]
    q0 = psi.modulus

    coeffs = {}
    for d in divisors(q // q0):
        v = mu_psi_convolve(g, psi, q // (d * q0))
        if not v.is_zero():
            coeffs[d] = v
    P = DirichletPoly(coeffs)

    if mode == "certify":
        verify_transform_identity(g, psi)

    if P.constant_term.is_zero():
        verdict = CompletenessVerdict(
            status="Incomplete",
            incompleteness_reason="ZeroConstantTerm",
            character=(q0, psi),
            theorem_polynomial=P,
            t_used=t_used,
            mode=mode,
        )
        return _crosscheck(phi, verdict, mode, t_used)

    zv = decide_zero_free(P, margin=margin, precision=precision, seed=seed)
    if (
        mode == "certify"
        and zv.status == "HasZero"
        and zv.certificate.kind == "InteriorWitness"
        and not zv.certificate.payload.get("certified", False)
    ):
        zv = ZeroFreeVerdict(
            "Undetermined", Certificate("None", {"reason": "uncertified witness in certify mode"})
        )
    status = {"ZeroFreeOpen": "Complete", "HasZero": "Incomplete", "Undetermined": "Undetermined"}[
        zv.status
    ]
    verdict = CompletenessVerdict(
        status=status,
        character=(q0, psi),
        theorem_polynomial=P,
        zero_verdict=zv,
        incompleteness_reason="HasZeroInC0" if status == "Incomplete" else None,
        t_used=t_used,
        mode=mode,
    )
    if status == "Complete" and psi.parity != 1:
        raise InternalCheckError("complete verdict with psi(-1) != 1")
    return _crosscheck(phi, verdict, mode, t_used)


def _crosscheck(
    phi: StepFunction, verdict: CompletenessVerdict, mode: str, t_used: int
) -> CompletenessVerdict:
    if mode != "certify":
        return verdict
    violations = necessary_prefilters(phi, t_used)
    verdict.prefilter_violations = violations
    if violations and verdict.status == "Complete":
        raise InternalCheckError(
            f"prefilter violation on a Complete verdict: {violations[0].name}"
        )
    return verdict
