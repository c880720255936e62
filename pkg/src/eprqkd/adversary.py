"""Eavesdropper models.

Two attacks are in scope: a Bell-basis measure-resend on a chosen fraction
of 4-qubit blocks (the eavesdropper guesses the hidden pairing layout, since
nothing on the wire reveals it), and a two-qubit interceptor against an
N-qubit permuted sequence. Coherent or ancilla-based attacks are not
modeled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .bell import (
    LABELS,
    BellLabel,
    Pairing,
    bits_from_bell,
    measurement_distribution,
)
from .protocols import Labels, PopSequence, WireBlock


@dataclass(frozen=True)
class AttackConfig:
    """Measure-resend attack parameters: attack round(f * n) of n blocks,
    chosen uniformly without replacement, guessing the pairing uniformly."""

    f: float
    seed: Optional[int] = None
    policy: str = "uniform"

    def __post_init__(self) -> None:
        if not 0.0 <= self.f <= 1.0:
            raise ValueError(f"attack fraction must be in [0, 1], got {self.f}")
        if self.policy != "uniform":
            raise ValueError(f"unsupported pairing-guess policy {self.policy!r}")

    def n_attacked(self, n_blocks: int) -> int:
        return round(self.f * n_blocks)

    @classmethod
    def from_dict(cls, raw: dict) -> "AttackConfig":
        known = {"f", "seed", "policy"}
        unknown = set(raw) - known
        if unknown:
            raise ValueError(f"unknown attack config keys: {sorted(unknown)}")
        return cls(**raw)


def choose_attacked_blocks(n_blocks: int, f: float, rng: np.random.Generator) -> np.ndarray:
    """Boolean mask with exactly round(f * n) True entries, uniform without
    replacement."""
    mask = np.zeros(n_blocks, dtype=bool)
    m = round(f * n_blocks)
    if m:
        mask[rng.permutation(n_blocks)[:m]] = True
    return mask


@dataclass
class EveRecord:
    """One intercepted block: the guess, the Bell outcome, and the 4 bits the
    eavesdropper writes down by reading the outcome labels in slot order."""

    block_index: int
    pairing_guess: Pairing
    outcome: Labels
    inferred_bits: tuple[int, int, int, int] = field(init=False)

    def __post_init__(self) -> None:
        first, second = self.outcome
        self.inferred_bits = bits_from_bell(first) + bits_from_bell(second)


def measure_resend(
    wire: WireBlock,
    guess: Pairing,
    u: Optional[float] = None,
    rng: Optional[np.random.Generator] = None,
    block_index: int = 0,
) -> tuple[EveRecord, WireBlock]:
    """Measure the block in the guessed pairing and forward the collapsed
    state. A correct guess is invisible and reads the true bits; a wrong
    guess swaps the entanglement and commits the wire to the wrong layout."""
    outcome, resent = wire.measure(guess, u=u, rng=rng)
    record = EveRecord(block_index=block_index, pairing_guess=guess, outcome=outcome)
    return record, resent


def eve_outcome_distribution(initial: Labels) -> dict[tuple[int, int, int, int], Fraction]:
    """Exact distribution of the eavesdropper's inferred 4-bit value for one
    attacked block, marginalized over the true pairing and a uniform guess.

    Comes out as 5/8 on the true bits and 1/8 on each of the three
    parity-compatible alternatives, for every initial label pair.
    """
    a, b = initial
    half = Fraction(1, 2)
    dist: dict[tuple[int, int, int, int], Fraction] = {}
    for true_pairing in Pairing:
        for guess in Pairing:
            weight = half * half
            for (a2, b2), p in measurement_distribution(a, b, true_pairing, guess).items():
                bits = bits_from_bell(a2) + bits_from_bell(b2)
                dist[bits] = dist.get(bits, Fraction(0)) + weight * p
    return {bits: p for bits, p in dist.items() if p != 0}


@dataclass
class PopInterceptResult:
    picks: tuple[int, int]
    pair_hit: bool          # the two slots were entangled with each other
    target_hit: bool        # and they were one of the target block's pairs
    outcome: BellLabel
    disturbed: bool

    @property
    def inferred_bits(self) -> tuple[int, int]:
        return bits_from_bell(self.outcome)


def pop_intercept(
    seq: PopSequence, picks: tuple[int, int], rng: np.random.Generator
) -> PopInterceptResult:
    """Bell-measure two picked slots of a permuted N-qubit sequence.

    Picking a genuinely entangled pair reveals its label. Picking halves of
    two different pairs yields a uniformly random label carrying no key
    information and swaps entanglement across the sequence, which is flagged
    as a disturbance.
    """
    s1, s2 = picks
    if s1 == s2:
        raise ValueError("picks must be two distinct slots")
    for s in picks:
        if not 0 <= s < seq.n_qubits:
            raise ValueError(f"slot {s} out of range for {seq.n_qubits} qubits")
    pair1, pair2 = seq.pair_of_slot(s1), seq.pair_of_slot(s2)
    if pair1 == pair2:
        return PopInterceptResult(
            picks=picks,
            pair_hit=True,
            target_hit=pair1 in seq.target_pairs,
            outcome=seq.pair_labels[pair1],
            disturbed=False,
        )
    return PopInterceptResult(
        picks=picks,
        pair_hit=False,
        target_hit=False,
        outcome=LABELS[int(rng.integers(0, 4))],
        disturbed=True,
    )
