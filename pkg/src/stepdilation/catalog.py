"""Constructions and exhaustive scans over families of step functions.

Builders: the character combs S_n, the alternating-interval combs, the
staircase ("ladder") family, and positive combinations with matching jump
profiles.  Scanners: all rational intervals up to a Farey bound, the
characteristic-function-of-(0,r) family, and prime-power cell unions.
Scans shard across processes when jobs > 1, with a deterministic merge.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .arith import divisor_count, divisors, is_prime
from .characters import DirichletCharacter, primitive_characters
from .decide import CompletenessVerdict, decide_completeness
from .exactnum import CycloNumber, sign_of_real
from .stepfn import (
    StepFunction,
    indicator,
    indicator_of_cells,
    jump_table,
    linear_combine,
    make_step,
    minimal_denominator,
)


class ConstructionError(ValueError):
    pass


# --------------------------------------------------------------------------
# builders


def build_sn(psi: DirichletCharacter, n: int) -> StepFunction:
    """S_n = sum over 1 <= m <= (nq-1)/2, gcd(m,n) = 1, of psi(m) chi_(2m/(nq), 1)."""
    q = psi.modulus
    if q <= 1 or not psi.is_primitive:
        raise ConstructionError("need a primitive character of modulus > 1")
    if psi.parity != 1:
        raise ConstructionError("need psi(-1) = 1")
    if n < 1:
        raise ConstructionError("n must be >= 1")
    terms = []
    for m in range(1, (n * q - 1) // 2 + 1):
        if gcd(m, n) != 1:
            continue
        v = psi(m)
        if v.is_zero():
            continue
        terms.append((v, indicator(Fraction(2 * m, n * q), 1)))
    if not terms:
        raise ConstructionError("empty construction (no coprime residues)")
    return linear_combine(terms)


def sn_combination(
    psi: DirichletCharacter, u: int, coefficients: dict[int, CycloNumber]
) -> tuple[StepFunction, bool, CompletenessVerdict]:
    """sum over d | u of c_d S_d, plus the sufficient-completeness hypothesis.

    Hypothesis: |c_1| > (d(u u') - 1) * max |c_d| over d | u, d > 1, where
    u' is the largest divisor of u coprime to the character modulus.  When
    it holds, the combination is complete; the verdict is re-derived by the
    full pipeline as a cross-check either way.
    """
    if u < 2 or u % 2:
        raise ConstructionError("u must be a positive even integer")
    q = psi.modulus
    coeffs = {d: CycloNumber.coerce(coefficients.get(d, 0)) for d in divisors(u)}
    terms = [(c, build_sn(psi, d)) for d, c in coeffs.items() if not c.is_zero()]
    if not terms:
        raise ConstructionError("all coefficients vanish")
    combo = linear_combine(terms)

    u_prime = max(d for d in divisors(u) if gcd(d, q) == 1)
    bound = divisor_count(u * u_prime) - 1
    tail = [c for d, c in coeffs.items() if d > 1 and not c.is_zero()]
    c1 = coeffs.get(1, CycloNumber.from_rational(0))
    hypothesis = False
    if tail:
        # |c1|^2 > bound^2 * max |c_d|^2, exact comparison of real cyclotomics
        max_sq = tail[0].norm_sq()
        for c in tail[1:]:
            if sign_of_real(c.norm_sq() - max_sq) > 0:
                max_sq = c.norm_sq()
        diff = c1.norm_sq() - max_sq * (bound * bound)
        hypothesis = (not diff.is_zero()) and sign_of_real(diff) > 0
    else:
        hypothesis = not c1.is_zero()
    verdict = decide_completeness(combo)
    return combo, hypothesis, verdict


def build_comb(t: int, variant: str) -> StepFunction:
    """Alternating cell unions: V, its complement (odd t), or the even-t comb."""
    if variant in ("V", "V_complement"):
        if t < 3 or t % 2 == 0:
            raise ConstructionError("variants V / V_complement need odd t >= 3")
        cells = [(Fraction(k, t), Fraction(k + 1, t)) for k in range(0, t, 2)]
        if variant == "V":
            return indicator_of_cells(cells)
        comp = [(Fraction(k, t), Fraction(k + 1, t)) for k in range(1, t, 2)]
        return indicator_of_cells(comp)
    if variant == "even_t":
        if t < 4 or t % 2:
            raise ConstructionError("variant even_t needs even t >= 4")
        cells = [(Fraction(k, t), Fraction(k + 1, t)) for k in range(0, t - 1, 2)]
        return indicator_of_cells(cells)
    raise ConstructionError(f"unknown variant {variant!r}")


def build_ladder(t: int) -> StepFunction:
    """chi_(0,1) + chi_(2/t,1) + chi_(4/t,1) + ... + chi_((t-1)/t,1), odd t >= 3."""
    if t < 3 or t % 2 == 0:
        raise ConstructionError("ladder needs odd t >= 3")
    terms = [(CycloNumber.from_rational(1), indicator(0, 1))]
    for k in range(2, t, 2):
        terms.append((CycloNumber.from_rational(1), indicator(Fraction(k, t), 1)))
    return linear_combine(terms)


# --------------------------------------------------------------------------
# scan reports


@dataclass
class ScanEntry:
    descriptor: str
    verdict: CompletenessVerdict
    extra: dict = field(default_factory=dict)


@dataclass
class ScanReport:
    kind: str
    parameters: dict
    entries: list[ScanEntry]

    @property
    def examined(self) -> int:
        return len(self.entries)

    @property
    def complete(self) -> list[str]:
        return [e.descriptor for e in self.entries if e.verdict.status == "Complete"]

    @property
    def incomplete(self) -> list[str]:
        return [e.descriptor for e in self.entries if e.verdict.status == "Incomplete"]

    @property
    def undetermined(self) -> list[str]:
        return [e.descriptor for e in self.entries if e.verdict.status == "Undetermined"]

    def entry(self, descriptor: str) -> ScanEntry:
        for e in self.entries:
            if e.descriptor == descriptor:
                return e
        raise KeyError(descriptor)

    def summary(self) -> dict:
        return {
            "kind": self.kind,
            "parameters": self.parameters,
            "examined": self.examined,
            "complete": len(self.complete),
            "incomplete": len(self.incomplete),
            "undetermined": len(self.undetermined),
        }

    def to_json_dict(self, full: bool = True) -> dict:
        doc = self.summary()
        doc["complete_descriptors"] = self.complete
        if full:
            doc["entries"] = [
                {
                    "descriptor": e.descriptor,
                    **e.verdict.to_json_dict(),
                    **({"extra": e.extra} if e.extra else {}),
                }
                for e in self.entries
            ]
        return doc

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["descriptor", "status", "certificate"])
        for e in self.entries:
            cert = ""
            if e.verdict.zero_verdict is not None:
                cert = e.verdict.zero_verdict.certificate.kind
            elif e.verdict.incompleteness_reason:
                cert = e.verdict.incompleteness_reason
            w.writerow([e.descriptor, e.verdict.status, cert])
        return buf.getvalue()

    def to_table(self) -> str:
        width = max((len(e.descriptor) for e in self.entries), default=10)
        lines = [f"{'descriptor':<{width}}  status        detail"]
        for e in self.entries:
            detail = e.verdict.incompleteness_reason or (
                e.verdict.zero_verdict.certificate.kind if e.verdict.zero_verdict else ""
            )
            lines.append(f"{e.descriptor:<{width}}  {e.verdict.status:<12}  {detail}")
        s = self.summary()
        lines.append(
            f"examined={s['examined']} complete={s['complete']} "
            f"incomplete={s['incomplete']} undetermined={s['undetermined']}"
        )
        return "\n".join(lines)


# --------------------------------------------------------------------------
# scan drivers


def _decide_payload(item):
    descriptor, doc, opts = item
    from .stepfn import from_json_dict

    phi = from_json_dict(doc)
    verdict = decide_completeness(phi, **opts)
    return descriptor, verdict


def _run_scan(items, jobs: int):
    """items: list of (descriptor, phi, opts); deterministic order is preserved."""
    from .stepfn import to_json_dict

    if jobs <= 1:
        out = []
        for desc, phi, opts in items:
            out.append((desc, decide_completeness(phi, **opts)))
        return out
    import multiprocessing as mp

    payload = [(desc, to_json_dict(phi), opts) for desc, phi, opts in items]
    with mp.Pool(jobs) as pool:
        return pool.map(_decide_payload, payload)


def farey_fractions(max_denominator: int) -> list[Fraction]:
    out = {Fraction(0), Fraction(1)}
    for den in range(1, max_denominator + 1):
        for num in range(1, den):
            out.add(Fraction(num, den))
    return sorted(out)


def scan_intervals(
    max_denominator: int, mode: str = "certify", jobs: int = 1, **opts
) -> ScanReport:
    """Decide chi_(a,b) for every Farey pair 0 <= a < b <= 1."""
    if max_denominator < 1:
        raise ValueError("max_denominator must be >= 1")
    fr = farey_fractions(max_denominator)
    items = []
    for i, a in enumerate(fr):
        for b in fr[i + 1 :]:
            items.append((f"({a},{b})", indicator(a, b), {"mode": mode, **opts}))
    results = _run_scan(items, jobs)
    return ScanReport(
        "intervals",
        {"max_denominator": max_denominator, "mode": mode},
        [ScanEntry(d, v) for d, v in results],
    )


def kozlov_scan(max_denominator: int, mode: str = "certify", jobs: int = 1, **opts) -> ScanReport:
    """Decide chi_(0,r) for every rational r in (0,1] with denominator <= bound."""
    rs = sorted(
        {Fraction(num, den) for den in range(1, max_denominator + 1) for num in range(1, den + 1)}
    )
    items = [(str(r), indicator(0, r), {"mode": mode, **opts}) for r in rs]
    results = _run_scan(items, jobs)
    return ScanReport(
        "kozlov",
        {"max_denominator": max_denominator, "mode": mode},
        [ScanEntry(d, v) for d, v in results],
    )


def _pl_candidates(p: int, l: int):
    """Proper, non-degenerate cell unions with denominator p^l and the gcd filter."""
    cells = p**l
    for mask in range(1, (1 << cells) - 1):
        runs = []
        start = None
        for i in range(cells):
            if mask & (1 << i):
                if start is None:
                    start = i
            elif start is not None:
                runs.append((start, i))
                start = None
        if start is not None:
            runs.append((start, cells))
        numerators = set()
        for a, b in runs:
            numerators.update((a, b))
        g = 0
        for s in numerators:
            g = gcd(g, s)
        if g % p == 0:
            continue  # denominator p^l is not minimal for this V
        intervals = [(Fraction(a, cells), Fraction(b, cells)) for a, b in runs]
        yield mask, intervals


def enumerate_pl(p: int, l: int, mode: str = "certify", jobs: int = 1, **opts) -> ScanReport:
    """Decide chi_V for every proper non-degenerate V with cell denominator p^l.

    Adjacent chosen cells merge (so the complement never has isolated
    points); candidates whose boundary numerators are all divisible by p
    are excluded (their natural denominator is p^(l-1)).  Runnable at any
    prime p, including the small primes where the two-comb pattern fails.
    """
    if not is_prime(p):
        raise ValueError("p must be prime")
    if l < 1:
        raise ValueError("l must be >= 1")
    items = []
    for mask, intervals in _pl_candidates(p, l):
        desc = "+".join(f"({a},{b})" for a, b in intervals)
        items.append((desc, indicator_of_cells(intervals), {"mode": mode, **opts}))
    results = _run_scan(items, jobs)
    return ScanReport(
        "pl", {"p": p, "l": l, "mode": mode}, [ScanEntry(d, v) for d, v in results]
    )


def pl_expected_combs(p: int, l: int) -> list[str]:
    """Descriptors of the two alternating combs for modulus p^l."""
    cells = p**l
    odd = [(Fraction(k, cells), Fraction(k + 1, cells)) for k in range(1, cells - 1, 2)]
    even = [(Fraction(k, cells), Fraction(k + 1, cells)) for k in range(0, cells, 2)]
    return [
        "+".join(f"({a},{b})" for a, b in odd),
        "+".join(f"({a},{b})" for a, b in even),
    ]


# --------------------------------------------------------------------------
# coefficient families and sums


_FAMILIES = {
    "half": {
        "build": lambda c1, c2: linear_combine(
            [(c1, indicator(0, Fraction(1, 2))), (c2, indicator(Fraction(1, 2), 1))]
        ),
        # complete iff |c1+c2| >= |c1-c2|
        "law": lambda c1, c2: _abs_ge(c1 + c2, c1 - c2),
        "text": "|c1+c2| >= |c1-c2|",
    },
    "thirds": {
        "build": lambda c1, c2: linear_combine(
            [(c1, indicator(0, Fraction(2, 3))), (c2, indicator(Fraction(1, 3), 1))]
        ),
        "law": lambda c1, c2: _abs_ge(c1 + c2, c2),
        "text": "|c1+c2| >= |c2|",
    },
}


def _abs_ge(a: CycloNumber, b: CycloNumber) -> bool:
    diff = a.norm_sq() - b.norm_sq()
    if diff.is_zero():
        return True
    return sign_of_real(diff) > 0


def coefficient_family_sweep(
    family: str, grid: list[tuple], mode: str = "certify", jobs: int = 1, **opts
) -> ScanReport:
    """Decide a two-parameter family across a coefficient grid vs its exact law."""
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}; have {sorted(_FAMILIES)}")
    spec = _FAMILIES[family]
    items = []
    law_by_desc = {}
    for c1, c2 in grid:
        c1 = CycloNumber.coerce(c1)
        c2 = CycloNumber.coerce(c2)
        if c1.is_zero() and c2.is_zero():
            continue
        desc = f"({c1.to_literal()},{c2.to_literal()})"
        law_by_desc[desc] = spec["law"](c1, c2)
        items.append((desc, spec["build"](c1, c2), {"mode": mode, **opts}))
    results = _run_scan(items, jobs)
    entries = []
    for desc, verdict in results:
        law = law_by_desc[desc]
        entries.append(
            ScanEntry(
                desc,
                verdict,
                {
                    "law_predicts_complete": law,
                    "law": spec["text"],
                    "match": (verdict.status == "Complete") == law,
                },
            )
        )
    return ScanReport("sweep", {"family": family, "mode": mode}, entries)


def default_sweep_grid(lo: int = -3, hi: int = 3) -> list[tuple[Fraction, Fraction]]:
    return [
        (Fraction(a), Fraction(b))
        for a in range(lo, hi + 1)
        for b in range(lo, hi + 1)
        if not (a == 0 and b == 0)
    ]


def sum_family_check(phis: list[StepFunction], cs: list, **opts) -> tuple[bool, CompletenessVerdict]:
    """Verify the matching-jump-profile hypothesis and decide the positive sum.

    Requires an odd common denominator t for every jump discontinuity.  The
    hypothesis asks that h_i(m) = J_{phi_i}(2m/t) agree across all i and
    not vanish identically; with positive coefficients the sum must then be
    complete, and the verdict is asserted against that.
    """
    if len(phis) < 2 or len(phis) != len(cs):
        raise ValueError("need n >= 2 functions with matching coefficients")
    t = 1
    for phi in phis:
        t = lcm(t, minimal_denominator(phi))
    if t % 2 == 0:
        raise ConstructionError("no common odd denominator; hypothesis inapplicable")
    tables = [jump_table(phi) for phi in phis]
    profiles = []
    for j in tables:
        profiles.append([j(Fraction(2 * m, t)) for m in range(1, t + 1)])
    hypothesis = all(
        all(profiles[0][m] == profiles[i][m] for m in range(t)) for i in range(1, len(phis))
    ) and any(not v.is_zero() for v in profiles[0])
    coeffs = [CycloNumber.coerce(c) for c in cs]
    positive = all(c.is_real() and sign_of_real(c) > 0 for c in coeffs)
    combo = linear_combine(list(zip(coeffs, phis)))
    verdict = decide_completeness(combo, **opts)
    if hypothesis and positive and verdict.status != "Complete":
        raise ArithmeticError(
            "matching-profile hypothesis held but the sum was not judged complete (bug)"
        )
    return hypothesis, verdict
