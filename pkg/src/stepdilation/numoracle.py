"""Numerical cross-check: truncated least-squares span of the first sine mode.

The dilation of a function multiplies its transformed series by k^(-s), so
the k-th dilate's sine coefficients sit on the arithmetic progression
n*k.  The residual measures how far the first unit vector e_1 is from the
span of the first K dilate columns inside an N-term truncation.  This is a
heuristic: it never overrides the exact verdicts, and its thresholds are
calibrated per environment rather than hard-coded.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np

from .stepfn import StepFunction, minimal_denominator, sine_coeff_fn


class IllConditionedError(RuntimeError):
    pass


def _sine_coefficients(phi: StepFunction, N: int) -> np.ndarray:
    """a_n = f(n) sqrt(2) / (2 pi n) for n = 1..N, as complex floats."""
    if phi.is_zero():
        return np.zeros(N, dtype=complex)
    f = sine_coeff_fn(phi)
    period_vals = np.array([v.to_complex() for v in f.values])
    ns = np.arange(1, N + 1)
    vals = period_vals[(ns - 1) % f.period]
    return vals * (math.sqrt(2) / (2 * math.pi)) / ns


def dilation_matrix(phi: StepFunction, K: int, N: int) -> np.ndarray:
    """N x K matrix; column k holds the sine coefficients of phi(k x)."""
    if K < 1 or N < K:
        raise ValueError("need 1 <= K <= N")
    a = _sine_coefficients(phi, N)
    A = np.zeros((N, K), dtype=complex)
    for k in range(1, K + 1):
        rows = np.arange(k, N + 1, k)
        A[rows - 1, k - 1] = a[rows // k - 1]
    return A


def residual(phi: StepFunction, K: int, N: int, relax_guard: bool = False) -> float:
    """Least-squares distance from e_1 to the span of the first K dilate columns."""
    if not relax_guard and N < 4 * K:
        raise ValueError("N >= 4K required (truncation guard); pass relax_guard to override")
    A = dilation_matrix(phi, K, N)
    b = np.zeros(N, dtype=complex)
    b[0] = 1.0
    try:
        x, *_ = np.linalg.lstsq(A, b, rcond=None)
    except np.linalg.LinAlgError as exc:
        raise IllConditionedError(f"least-squares solve failed: {exc}") from exc
    return float(np.linalg.norm(A @ x - b))


@dataclass
class ResidualCurve:
    descriptor: str
    truncation: int
    ks: list[int]
    residuals: list[float]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["K", "residual"])
        for k, r in zip(self.ks, self.residuals):
            w.writerow([k, format(r, ".17g")])
        return buf.getvalue()


def residual_curve(
    phi: StepFunction, ks: list[int], N: int, descriptor: str = "", relax_guard: bool = False
) -> ResidualCurve:
    res = [residual(phi, k, N, relax_guard=relax_guard) for k in ks]
    return ResidualCurve(descriptor=descriptor, truncation=N, ks=list(ks), residuals=res)


# --------------------------------------------------------------------------
# calibration


@dataclass
class Thresholds:
    K: int
    N: int
    seed: int
    complete_ceiling: float
    incomplete_floor: float

    @property
    def separated(self) -> bool:
        return self.complete_ceiling < self.incomplete_floor

    def to_json(self) -> str:
        return json.dumps(
            {
                "K": self.K,
                "N": self.N,
                "seed": self.seed,
                "complete_ceiling": format(self.complete_ceiling, ".17g"),
                "incomplete_floor": format(self.incomplete_floor, ".17g"),
                "separated": self.separated,
            },
            indent=2,
            sort_keys=True,
        )

    @staticmethod
    def from_json(text: str) -> "Thresholds":
        doc = json.loads(text)
        return Thresholds(
            K=int(doc["K"]),
            N=int(doc["N"]),
            seed=int(doc["seed"]),
            complete_ceiling=float(doc["complete_ceiling"]),
            incomplete_floor=float(doc["incomplete_floor"]),
        )


def calibrate(
    complete: list[tuple[str, StepFunction]],
    incomplete: list[tuple[str, StepFunction]],
    K: int = 64,
    N: int = 512,
    seed: int = 0,
) -> tuple[Thresholds, str]:
    """Residuals for both populations plus stored floor/ceiling thresholds.

    Returns the thresholds and a CSV (descriptor, class, residual) whose
    bytes are reproducible for a fixed seed and environment.
    """
    rows = []
    ceiling = 0.0
    floor = float("inf")
    for desc, phi in complete:
        r = residual(phi, K, N)
        ceiling = max(ceiling, r)
        rows.append((desc, "complete", r))
    for desc, phi in incomplete:
        r = residual(phi, K, N)
        floor = min(floor, r)
        rows.append((desc, "incomplete", r))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["descriptor", "class", "residual"])
    for desc, cls, r in rows:
        w.writerow([desc, cls, format(r, ".17g")])
    th = Thresholds(
        K=K, N=N, seed=seed, complete_ceiling=ceiling, incomplete_floor=floor
    )
    return th, buf.getvalue()
