"""Closed-form security quantities for the one-step block scheme.

The measure-resend numbers all derive from the two-layout geometry: a wrong
layout guess (probability 1/2) still reads the right bits 1/4 of the time
and disturbs the receiver 3/4 of the time, giving an eavesdropper accuracy
of 5/8 and a per-attacked-block detection probability of 3/8. On top of
those sit the mutual-information curves, their crossing point, and the
tolerable error rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence, Union

Number = Union[int, float, Fraction]

# Per-attacked-block rates from the exact measurement algebra.
DETECTION_RATE = Fraction(3, 8)
EVE_ACCURACY = Fraction(5, 8)
EVE_OUTCOME_PROBS = (Fraction(5, 8), Fraction(1, 8), Fraction(1, 8), Fraction(1, 8))
# The original analysis of the scheme asserted that an intercepted block
# reaches the receiver wrong with probability 15/16; the simulator exists to
# show 3/8 is the correct figure.
CLAIMED_INCORRECT_RATE = Fraction(15, 16)


def binary_entropy(u: float) -> float:
    """Shannon binary entropy in bits, with H(0) = H(1) = 0 by continuity."""
    if not 0.0 <= u <= 1.0:
        raise ValueError(f"binary_entropy domain is [0, 1], got {u}")
    if u in (0.0, 1.0):
        return 0.0
    return -u * math.log2(u) - (1.0 - u) * math.log2(1.0 - u)


def distribution_entropy(probs: Sequence[Number]) -> float:
    """Entropy in bits of a discrete distribution (zero masses allowed)."""
    total = float(sum(probs))
    if not math.isclose(total, 1.0, abs_tol=1e-12):
        raise ValueError(f"probabilities must sum to 1, got {total}")
    return -sum(float(p) * math.log2(float(p)) for p in probs if p > 0)


def _check_fraction(f: float) -> None:
    if not 0.0 <= f <= 1.0:
        raise ValueError(f"attack fraction must be in [0, 1], got {f}")


def eve_info(f: float) -> float:
    """Information extracted by the eavesdropper at attack fraction f: 5f/8.

    This is the success-probability accounting (fraction attacked times the
    probability of reading the right bits), not the Shannon mutual
    information of the block channel; see ``eve_channel_mi_per_bit``.
    """
    _check_fraction(f)
    return 5.0 * f / 8.0


def ab_info(f: float) -> float:
    """Legitimate mutual information 1 - H[3f/8] at attack fraction f."""
    _check_fraction(f)
    return 1.0 - binary_entropy(3.0 * f / 8.0)


def margin(f: float) -> float:
    """Security margin ab_info - eve_info; positive means defensible."""
    return ab_info(f) - eve_info(f)


def eve_ignorance_bits() -> float:
    """Entropy of the eavesdropper's outcome distribution {5/8, 1/8 x3} for
    one attacked block: about 1.54879 of the 4 bits sent stay unknown to
    her."""
    return distribution_entropy(EVE_OUTCOME_PROBS)


def eve_channel_mi_per_bit() -> float:
    """Shannon mutual information of the attacked-block channel, per key bit:
    (4 - H[{5/8, 1/8 x3}]) / 4 = 0.61280. Close to, but distinct from, the
    5/8 success-probability figure."""
    return (4.0 - eve_ignorance_bits()) / 4.0


class Threshold(NamedTuple):
    f_star: float
    e_max: float


def security_threshold(tol: float = 1e-9) -> Threshold:
    """Crossing point of the two information curves, and the error rate it
    tolerates.

    Bisection of margin() on (0, 1); the margin is smooth and strictly
    decreasing there, so a sign change is guaranteed and the root is unique.
    e_max = (3/8) * f_star, the detection rate at the threshold fraction,
    expressed as a fraction (renderers may show percent).
    """
    lo, hi = 1e-6, 1.0 - 1e-6
    m_lo, m_hi = margin(lo), margin(hi)
    if m_lo <= 0.0 or m_hi >= 0.0:
        raise RuntimeError(
            f"no sign change on the bracket: margin({lo}) = {m_lo}, margin({hi}) = {m_hi}"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if margin(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    f_star = 0.5 * (lo + hi)
    return Threshold(f_star=f_star, e_max=0.375 * f_star)


def pop_eve_info(f: Number, n_qubits: int) -> Number:
    """Leakage under the permuted N-qubit sequence: 5f / (N(N-1)).

    Exact when given exact inputs (int or Fraction f stays Fraction), so the
    algebraic identity pop_eve_info(f, N) * N(N-1) / f == 5 holds with no
    rounding. Strictly decreasing in N and vanishing as N grows.
    """
    if n_qubits < 4 or n_qubits % 2:
        raise ValueError("n_qubits must be even and >= 4")
    if not 0 <= f <= 1:
        raise ValueError(f"attack fraction must be in [0, 1], got {f}")
    if isinstance(f, float):
        return 5.0 * f / (n_qubits * (n_qubits - 1))
    return Fraction(5) * f / (n_qubits * (n_qubits - 1))


def reference_constants() -> dict[str, float]:
    """Tolerable-error comparison table. The first three rows are citation
    constants, not derivations; the last is this model's own threshold."""
    return {
        "bb84_arbitrary_attack": 0.11,
        "gv_measure_resend": 0.26,
        "one_step_scheme_claimed": 0.11,
        "this_work_measure_resend": security_threshold().e_max,
    }


@dataclass(frozen=True)
class SecurityCurve:
    """The two information curves and their margin on a grid of attack
    fractions."""

    f: tuple[float, ...]
    i_ab: tuple[float, ...]
    i_ae: tuple[float, ...]
    margin: tuple[float, ...]

    @classmethod
    def compute(cls, n_points: int = 101) -> "SecurityCurve":
        if n_points < 2:
            raise ValueError("need at least 2 grid points")
        grid = tuple(i / (n_points - 1) for i in range(n_points))
        i_ab_vals = tuple(ab_info(f) for f in grid)
        i_ae_vals = tuple(eve_info(f) for f in grid)
        return cls(
            f=grid,
            i_ab=i_ab_vals,
            i_ae=i_ae_vals,
            margin=tuple(ab - ae for ab, ae in zip(i_ab_vals, i_ae_vals)),
        )

    CSV_HEADER = "f,i_ab,i_ae,margin"

    def csv_rows(self) -> list[str]:
        rows = [self.CSV_HEADER]
        for f, ab, ae, m in zip(self.f, self.i_ab, self.i_ae, self.margin):
            rows.append(f"{f:.6f},{ab:.9f},{ae:.9f},{m:.9f}")
        return rows
