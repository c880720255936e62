"""Brute-force four-qubit statevector arithmetic.

Independent verifier for the closed-form algebra in ``bell.py``: states are
explicit 16-amplitude vectors over |q1 q2 q3 q4> (q1 most significant) and
decompositions are obtained by projecting onto Bell-product bases. Nothing
here consults the sign rule or tables in ``bell.py`` -- only the shared label
and pairing types -- which is what makes the cross-check meaningful.

Amplitudes are exact dyadic rationals: a product of two Bell pairs has four
nonzero amplitudes of +/-1/2 (the two 1/sqrt2 factors combine to 1/2), and
inner products of such vectors stay dyadic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bell import LABELS, BellLabel, Decomposition, PairProduct, Pairing

_ZERO = Fraction(0)


@dataclass(frozen=True)
class FourQubitState:
    """Exact state vector over the computational basis |q1 q2 q3 q4>."""

    amplitudes: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.amplitudes) != 16:
            raise ValueError("need exactly 16 amplitudes")

    def inner(self, other: "FourQubitState") -> Fraction:
        return sum((x * y for x, y in zip(self.amplitudes, other.amplitudes)), _ZERO)

    def norm_squared(self) -> Fraction:
        return self.inner(self)


def build_pair_product(a: BellLabel, b: BellLabel, pairing: Pairing) -> FourQubitState:
    """Tensor-expand two Bell pairs onto the qubits dictated by ``pairing``.

    A Bell pair with label (f, p) on qubits (i, j) contributes the kets
    |x>_i |x^f>_j with sign (-1)^(p*x) for x in {0, 1}.
    """
    (i1, j1), (i2, j2) = pairing.slot_pairs
    amps = [_ZERO] * 16
    for x in (0, 1):
        for y in (0, 1):
            sign = -1 if ((a.phase & x) ^ (b.phase & y)) else 1
            bits = {i1: x, j1: x ^ a.flip, i2: y, j2: y ^ b.flip}
            index = (bits[1] << 3) | (bits[2] << 2) | (bits[3] << 1) | bits[4]
            amps[index] = Fraction(sign, 2)
    return FourQubitState(tuple(amps))


@dataclass(frozen=True)
class BellProductBasis:
    """All 16 two-pair product vectors for one pairing layout."""

    pairing: Pairing
    vectors: tuple[tuple[tuple[BellLabel, BellLabel], FourQubitState], ...]

    @classmethod
    def for_pairing(cls, pairing: Pairing) -> "BellProductBasis":
        vectors = tuple(
            ((a, b), build_pair_product(a, b, pairing)) for a in LABELS for b in LABELS
        )
        return cls(pairing=pairing, vectors=vectors)


def project(state: FourQubitState, basis: BellProductBasis) -> Decomposition:
    """Expand ``state`` over ``basis`` by inner products, dropping exact zeros."""
    terms = []
    for (a, b), vector in basis.vectors:
        coeff = vector.inner(state)
        if coeff != 0:
            terms.append((PairProduct(a, b, basis.pairing), coeff))
    return Decomposition(tuple(terms))
