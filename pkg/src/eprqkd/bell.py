"""Exact algebra of Bell states over four qubits.

Everything here is closed-form and exact: Bell labels are two parity bits,
amplitudes are dyadic rationals (``fractions.Fraction`` with power-of-two
denominators), and regrouping a product of two Bell pairs from one pairing
layout to the other is a frozen 16-entry table realised as a sign rule.

Conventions: phi+/- = (|00> +/- |11>)/sqrt2, psi+/- = (|01> +/- |10>)/sqrt2.
The sign rule below was frozen against the brute-force statevector module
(see ``statevec.py``), which rederives every decomposition from tensor
products and inner products.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class BellLabel(Enum):
    """One of the four Bell states, encoded as (bit-flip, phase) parity bits."""

    PHI_PLUS = (0, 0)
    PHI_MINUS = (0, 1)
    PSI_PLUS = (1, 0)
    PSI_MINUS = (1, 1)

    @property
    def flip(self) -> int:
        """0 for phi-type (correlated bits), 1 for psi-type (anticorrelated)."""
        return self.value[0]

    @property
    def phase(self) -> int:
        """0 for the + superposition, 1 for the - superposition."""
        return self.value[1]

    @property
    def ascii(self) -> str:
        return _ASCII_BY_LABEL[self]

    @property
    def index(self) -> int:
        """Stable 2-bit index flip<<1 | phase; also the key-bit encoding."""
        return (self.flip << 1) | self.phase

    def __str__(self) -> str:
        return self.ascii


_ASCII_BY_LABEL = {
    BellLabel.PHI_PLUS: "phi+",
    BellLabel.PHI_MINUS: "phi-",
    BellLabel.PSI_PLUS: "psi+",
    BellLabel.PSI_MINUS: "psi-",
}

LABEL_BY_ASCII = {name: label for label, name in _ASCII_BY_LABEL.items()}

# Enum order doubles as the canonical index order everywhere (tables, RNG
# outcome selectors, histograms).
LABELS = tuple(BellLabel)


class Pairing(Enum):
    """Which wire slots are entangled with each other.

    Only the two layouts below are constructible; {(1,4),(2,3)} is not a
    reachable arrangement in any protocol in scope.
    """

    SEQUENTIAL = "seq"
    CROSSED = "crossed"

    @property
    def slot_pairs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Entangled slot pairs, 1-based."""
        if self is Pairing.SEQUENTIAL:
            return ((1, 2), (3, 4))
        return ((1, 3), (2, 4))

    @property
    def other(self) -> "Pairing":
        return Pairing.CROSSED if self is Pairing.SEQUENTIAL else Pairing.SEQUENTIAL

    @property
    def ascii(self) -> str:
        return self.value

    def __str__(self) -> str:
        return self.value


PAIRING_BY_ASCII = {p.value: p for p in Pairing}


class Pauli(Enum):
    """Encoding operations applied to the second qubit of a Bell pair."""

    I = "I"
    Z = "Z"
    X = "X"
    IY = "iY"


@dataclass(frozen=True)
class PairProduct:
    """An ordered product of two Bell labels on a pairing layout.

    ``sign`` carries an overall factor of +/-1; every coefficient in scope is
    real, so no richer phase is ever needed.
    """

    first: BellLabel
    second: BellLabel
    pairing: Pairing
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def labels(self) -> tuple[BellLabel, BellLabel]:
        return (self.first, self.second)

    def __str__(self) -> str:
        prefix = "-" if self.sign < 0 else ""
        (i, j), (k, l) = self.pairing.slot_pairs
        return f"{prefix}{self.first}({i},{j}){self.second}({k},{l})"


@dataclass(frozen=True)
class Decomposition:
    """A sum of pair products with exact dyadic coefficients.

    Signs live in the coefficients; the embedded PairProducts keep sign +1.
    All terms share one pairing layout and the squared coefficients sum to 1.
    """

    terms: tuple[tuple[PairProduct, Fraction], ...]

    def coefficient(self, first: BellLabel, second: BellLabel) -> Fraction:
        for product, coeff in self.terms:
            if product.first is first and product.second is second:
                return coeff
        return Fraction(0)

    @property
    def pairing(self) -> Pairing:
        return self.terms[0][0].pairing

    def support(self) -> tuple[tuple[BellLabel, BellLabel], ...]:
        return tuple(product.labels for product, _ in self.terms)

    def squared_norm(self) -> Fraction:
        return sum((coeff * coeff for _, coeff in self.terms), Fraction(0))

    def __str__(self) -> str:
        parts = []
        for product, coeff in self.terms:
            sign = "-" if coeff < 0 else "+"
            mag = -coeff if coeff < 0 else coeff
            parts.append(f"{sign} {mag} * {product}")
        return " ".join(parts)


def bell_from_bits(b1: int, b2: int) -> BellLabel:
    """Map a 2-bit value to its Bell label: 00, 01, 10, 11 -> phi+, phi-, psi+, psi-."""
    if b1 not in (0, 1) or b2 not in (0, 1):
        raise ValueError(f"bits must be 0 or 1, got ({b1}, {b2})")
    return LABELS[(b1 << 1) | b2]


def bits_from_bell(label: BellLabel) -> tuple[int, int]:
    """Inverse of :func:`bell_from_bits`."""
    return (label.flip, label.phase)


def pauli_encode(op: Pauli, state: BellLabel) -> BellLabel:
    """Relabel a Bell state under a Pauli on its second qubit.

    I fixes the label, Z flips the phase bit, X flips the flip bit, iY flips
    both. Global phase is discarded: iY on a psi-type state produces an
    overall -1 that no protocol in scope can observe.
    """
    flip_delta, phase_delta = {
        Pauli.I: (0, 0),
        Pauli.Z: (0, 1),
        Pauli.X: (1, 0),
        Pauli.IY: (1, 1),
    }[op]
    return LABELS[((state.flip ^ flip_delta) << 1) | (state.phase ^ phase_delta)]


def _swap_sign(a: BellLabel, b: BellLabel, a2: BellLabel, b2: BellLabel) -> int:
    # Frozen from the statevector oracle; symmetric under exchanging the
    # input pair with the output pair, so one rule serves both directions.
    return -1 if ((b.phase & a2.flip) ^ (b2.phase & a.flip)) else 1


def swap_decompose(
    a: BellLabel, b: BellLabel, from_pairing: Pairing, to_pairing: Pairing
) -> Decomposition:
    """Regroup a two-pair product onto the other pairing layout.

    Identical layouts return the single original term with coefficient +1.
    Different layouts return exactly four terms with coefficients +/-1/2,
    supported on the label pairs that conserve both XOR parities:
    a'.flip ^ b'.flip == a.flip ^ b.flip and likewise for phase.
    """
    if from_pairing is to_pairing:
        return Decomposition(((PairProduct(a, b, to_pairing), Fraction(1)),))

    flip_parity = a.flip ^ b.flip
    phase_parity = a.phase ^ b.phase
    terms = []
    for a2 in LABELS:
        for b2 in LABELS:
            if a2.flip ^ b2.flip != flip_parity:
                continue
            if a2.phase ^ b2.phase != phase_parity:
                continue
            coeff = Fraction(_swap_sign(a, b, a2, b2), 2)
            terms.append((PairProduct(a2, b2, to_pairing), coeff))
    return Decomposition(tuple(terms))


def measurement_distribution(
    a: BellLabel, b: BellLabel, prepared_in: Pairing, measured_in: Pairing
) -> dict[tuple[BellLabel, BellLabel], Fraction]:
    """Outcome probabilities of a Bell-basis measurement in ``measured_in``.

    Squares the regrouping coefficients: a matching layout yields a point
    mass on (a, b); the other layout yields 1/4 on each of the four
    parity-conserving outcomes.
    """
    dist: dict[tuple[BellLabel, BellLabel], Fraction] = {}
    for product, coeff in swap_decompose(a, b, prepared_in, measured_in).terms:
        dist[product.labels] = coeff * coeff
    return dist


def two_step_distribution(
    a: BellLabel,
    b: BellLabel,
    prepared_in: Pairing,
    first_measured_in: Pairing,
    second_measured_in: Pairing,
) -> dict[tuple[BellLabel, BellLabel], Fraction]:
    """Exact outcome distribution of the second of two chained measurements.

    The first measurement collapses the product onto its own layout; the
    second measurement then acts on that ensemble. Probabilities stay dyadic
    throughout, so cancellations and impossible outcomes are exact.
    """
    final: dict[tuple[BellLabel, BellLabel], Fraction] = {}
    first = measurement_distribution(a, b, prepared_in, first_measured_in)
    for (a1, b1), p1 in first.items():
        second = measurement_distribution(a1, b1, first_measured_in, second_measured_in)
        for outcome, p2 in second.items():
            final[outcome] = final.get(outcome, Fraction(0)) + p1 * p2
    return final
