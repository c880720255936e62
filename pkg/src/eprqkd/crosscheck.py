"""Equivalence suite between the closed-form algebra and the statevector path.

This is the machinery behind the ``verify`` CLI subcommand: every (label
pair, pairing) product is built as an explicit vector, projected onto both
Bell-product bases, and compared term-for-term (including signs) against
``swap_decompose``. The known four-term regroupings of the mixed phi/psi
products are additionally pinned as literal tables, and the impossible
outcomes of chained measurements are checked to carry exactly zero weight.

``decompose_fn`` is injectable so a deliberately corrupted table can be used
as a negative control in tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .bell import (
    LABELS,
    BellLabel,
    Decomposition,
    Pairing,
    measurement_distribution,
    swap_decompose,
    two_step_distribution,
)
from .statevec import BellProductBasis, build_pair_product, project

DecomposeFn = Callable[[BellLabel, BellLabel, Pairing, Pairing], Decomposition]

_HALF = Fraction(1, 2)
_PP, _PM, _SP, _SM = (
    BellLabel.PHI_PLUS,
    BellLabel.PHI_MINUS,
    BellLabel.PSI_PLUS,
    BellLabel.PSI_MINUS,
)

# The four mixed phi/psi regroupings, pinned term-for-term. Keys are
# (first, second, from, to); values map outcome label pairs to coefficients.
PINNED_MIXED_REGROUPINGS = {
    (_PP, _SP, Pairing.SEQUENTIAL, Pairing.CROSSED): {
        (_PP, _SP): _HALF,
        (_PM, _SM): _HALF,
        (_SP, _PP): _HALF,
        (_SM, _PM): _HALF,
    },
    (_PM, _SM, Pairing.CROSSED, Pairing.SEQUENTIAL): {
        (_PP, _SP): _HALF,
        (_PM, _SM): _HALF,
        (_SP, _PP): -_HALF,
        (_SM, _PM): -_HALF,
    },
    (_SP, _PP, Pairing.CROSSED, Pairing.SEQUENTIAL): {
        (_PP, _SP): _HALF,
        (_PM, _SM): -_HALF,
        (_SP, _PP): _HALF,
        (_SM, _PM): -_HALF,
    },
    (_SM, _PM, Pairing.CROSSED, Pairing.SEQUENTIAL): {
        (_PP, _SP): _HALF,
        (_PM, _SM): -_HALF,
        (_SP, _PP): -_HALF,
        (_SM, _PM): _HALF,
    },
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        suffix = f"  ({self.detail})" if (self.detail and not self.passed) else ""
        return f"{status}  {self.name}{suffix}"


@dataclass
class VerificationReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def n_passed(self) -> int:
        return sum(r.passed for r in self.results)

    def lines(self) -> Iterable[str]:
        for result in self.results:
            yield result.line()
        yield f"{self.n_passed}/{len(self.results)} checks passed"


def _as_table(decomposition: Decomposition) -> dict:
    return {product.labels: coeff for product, coeff in decomposition.terms}


def oracle_equivalence_checks(decompose_fn: DecomposeFn = swap_decompose) -> list[CheckResult]:
    """One case per (label pair, prepared pairing): project onto both bases
    and require bit-exact agreement with the closed form."""
    bases = {pairing: BellProductBasis.for_pairing(pairing) for pairing in Pairing}
    results = []
    for prepared in Pairing:
        for a in LABELS:
            for b in LABELS:
                state = build_pair_product(a, b, prepared)
                mismatches = []
                for target in Pairing:
                    expected = project(state, bases[target])
                    got = decompose_fn(a, b, prepared, target)
                    if _as_table(got) != _as_table(expected):
                        mismatches.append(
                            f"{prepared}->{target}: closed form {got} != oracle {expected}"
                        )
                results.append(
                    CheckResult(
                        name=f"oracle-equivalence {a}*{b} prepared {prepared}",
                        passed=not mismatches,
                        detail="; ".join(mismatches),
                    )
                )
    return results


def pinned_regrouping_checks(decompose_fn: DecomposeFn = swap_decompose) -> list[CheckResult]:
    """The four mixed phi/psi tables, checked sign by sign."""
    results = []
    for (a, b, frm, to), expected in PINNED_MIXED_REGROUPINGS.items():
        got = _as_table(decompose_fn(a, b, frm, to))
        results.append(
            CheckResult(
                name=f"pinned-regrouping {a}*{b} {frm}->{to}",
                passed=got == expected,
                detail="" if got == expected else f"got {got}",
            )
        )
    return results


def forbidden_outcome_checks() -> list[CheckResult]:
    """Impossible outcomes must carry probability exactly zero (dyadic, no
    tolerance): a crossed measurement of phi+ x psi+ never yields
    (psi+, psi-), and no crossed-then-sequential chain yields (psi+, phi-)."""
    results = []

    one_step = measurement_distribution(
        _PP, _SP, Pairing.SEQUENTIAL, Pairing.CROSSED
    )
    weight = one_step.get((_SP, _SM), Fraction(0))
    results.append(
        CheckResult(
            name="forbidden one-step psi+*psi- from phi+*psi+",
            passed=weight == 0 and (_SP, _SM) not in one_step,
            detail=f"weight {weight}",
        )
    )

    two_step = two_step_distribution(
        _PP, _SP, Pairing.SEQUENTIAL, Pairing.CROSSED, Pairing.SEQUENTIAL
    )
    weight = two_step.get((_SP, _PM), Fraction(0))
    results.append(
        CheckResult(
            name="forbidden two-step psi+*phi- from phi+*psi+",
            passed=weight == 0 and (_SP, _PM) not in two_step,
            detail=f"weight {weight}",
        )
    )

    violations = []
    for a in LABELS:
        for b in LABELS:
            for first in Pairing:
                for second in Pairing:
                    dist = two_step_distribution(a, b, Pairing.SEQUENTIAL, first, second)
                    for (a2, b2), p in dist.items():
                        if p == 0:
                            continue
                        if (a2.flip ^ b2.flip) != (a.flip ^ b.flip) or (
                            a2.phase ^ b2.phase
                        ) != (a.phase ^ b.phase):
                            violations.append(f"{a}*{b} -> {a2}*{b2} p={p}")
    results.append(
        CheckResult(
            name="xor-conservation over all two-step trees",
            passed=not violations,
            detail="; ".join(violations[:4]),
        )
    )
    return results


def basis_checks() -> list[CheckResult]:
    """Each Bell-product basis must be exactly orthonormal (16x16 Gram = I)."""
    results = []
    for pairing in Pairing:
        basis = BellProductBasis.for_pairing(pairing)
        bad = []
        for i, (labels_i, v_i) in enumerate(basis.vectors):
            for j, (labels_j, v_j) in enumerate(basis.vectors):
                expected = Fraction(1) if i == j else Fraction(0)
                if v_i.inner(v_j) != expected:
                    bad.append(f"<{labels_i}|{labels_j}> = {v_i.inner(v_j)}")
        results.append(
            CheckResult(
                name=f"basis-orthonormality {pairing}",
                passed=not bad,
                detail="; ".join(bad[:4]),
            )
        )
    return results


def run_all_checks(decompose_fn: DecomposeFn = swap_decompose) -> VerificationReport:
    report = VerificationReport()
    report.results.extend(basis_checks())
    report.results.extend(pinned_regrouping_checks(decompose_fn))
    report.results.extend(oracle_equivalence_checks(decompose_fn))
    report.results.extend(forbidden_outcome_checks())
    return report
