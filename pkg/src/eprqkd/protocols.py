"""Executable machinery for the EPR-based key distribution schemes.

Four arrangements are covered: the memory-based scheme that permutes the
whole pair string (protocol 1), the one-step scheme that hides a per-block
pairing choice (protocol 2), an EPR-pair BB84 baseline, and the generalized
particle-order-permutation (PoP) sequence over N qubits.

The channel abstraction is :class:`WireBlock`: four qubit slots in flight
whose only public operation is a Bell-basis measurement. The preparation
pairing is intentionally unreadable from the wire -- that structural gap is
the eavesdropper's whole problem.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .bell import LABELS, BellLabel, Pairing, bell_from_bits, bits_from_bell

Labels = tuple[BellLabel, BellLabel]


class Role(Enum):
    DATA = "data"
    DECOY = "decoy"


def validate_key_bits(bits: Sequence[int], block_size: int = 2) -> None:
    """Key bits must be nonempty 0/1 values in blocks of ``block_size``."""
    if len(bits) == 0:
        raise ValueError("key must be nonempty")
    if len(bits) % block_size:
        raise ValueError(f"key length {len(bits)} not divisible by {block_size}")
    if any(b not in (0, 1) for b in bits):
        raise ValueError("key bits must be 0 or 1")


def swap_outcome(a: BellLabel, b: BellLabel, selector: int) -> Labels:
    """The ``selector``-th (0..3) outcome of measuring (a, b) in the other
    pairing, ordered by the first label's index. Both the blockwise and the
    vectorized simulation paths sample through this one rule."""
    a2 = LABELS[selector]
    b2 = LABELS[((a2.flip ^ a.flip ^ b.flip) << 1) | (a2.phase ^ a.phase ^ b.phase)]
    return (a2, b2)


def selector_from_uniform(u: float) -> int:
    return min(int(u * 4), 3)


class WireBlock:
    """A 4-qubit block on the channel.

    Measuring in the pairing the block actually carries is deterministic and
    returns the carried labels; measuring in the other pairing samples one of
    the four parity-conserving outcomes uniformly and collapses the block.
    """

    __slots__ = ("_labels", "_pairing")

    def __init__(self, labels: Labels, pairing: Pairing):
        self._labels = labels
        self._pairing = pairing

    def measure(
        self,
        pairing: Pairing,
        u: Optional[float] = None,
        rng: Optional[np.random.Generator] = None,
    ) -> tuple[Labels, "WireBlock"]:
        """Bell-basis measurement of both slot pairs of ``pairing``.

        Returns the outcome labels (in slot order) and the post-measurement
        block. ``u`` is a pre-drawn uniform for the disturbed case; ``rng``
        draws one lazily if ``u`` is omitted.
        """
        if pairing is self._pairing:
            return self._labels, self
        if u is None:
            if rng is None:
                raise ValueError("a uniform or an rng is required for a mismatched measurement")
            u = rng.random()
        outcome = swap_outcome(*self._labels, selector_from_uniform(u))
        return outcome, WireBlock(outcome, pairing)


@dataclass(frozen=True)
class BlockState:
    """Alice's record of one prepared 4-qubit block."""

    alice_labels: Labels
    alice_pairing: Pairing
    role: Role = Role.DATA

    @property
    def wire_order(self) -> tuple[int, int, int, int]:
        """Particle ids in slot order, 1-based: the crossed layout swaps the
        second and third particles before transmission."""
        if self.alice_pairing is Pairing.SEQUENTIAL:
            return (1, 2, 3, 4)
        return (1, 3, 2, 4)

    @property
    def source_bits(self) -> tuple[int, int, int, int]:
        first, second = self.alice_labels
        return bits_from_bell(first) + bits_from_bell(second)

    def to_wire(self) -> WireBlock:
        return WireBlock(self.alice_labels, self.alice_pairing)


@dataclass
class BlockTranscript:
    """Everything that happened to one transmitted block."""

    block_index: int
    block: BlockState
    eve_guess: Optional[Pairing]
    eve_outcome: Optional[Labels]
    bob_outcome: Labels
    detected: bool

    def to_json_dict(self) -> dict:
        return {
            "block_index": self.block_index,
            "alice_labels": [l.ascii for l in self.block.alice_labels],
            "alice_pairing": self.block.alice_pairing.ascii,
            "role": self.block.role.value,
            "eve_action": (
                None if self.eve_guess is None else {"pairing_guess": self.eve_guess.ascii}
            ),
            "eve_outcome": (
                None if self.eve_outcome is None else [l.ascii for l in self.eve_outcome]
            ),
            "bob_outcome": [l.ascii for l in self.bob_outcome],
            "detected": self.detected,
        }


def protocol2_prepare_block(
    bits4: Sequence[int], pairing_choice: Pairing, role: Role = Role.DATA
) -> BlockState:
    """Encode 4 key bits as two Bell labels on a coin-chosen pairing layout."""
    if len(bits4) != 4:
        raise ValueError(f"need exactly 4 bits, got {len(bits4)}")
    validate_key_bits(bits4, block_size=4)
    labels = (bell_from_bits(bits4[0], bits4[1]), bell_from_bits(bits4[2], bits4[3]))
    return BlockState(alice_labels=labels, alice_pairing=pairing_choice, role=role)


def flip_pairing(rng: np.random.Generator) -> Pairing:
    return Pairing.SEQUENTIAL if rng.random() < 0.5 else Pairing.CROSSED


def protocol2_bob_measure(
    wire: WireBlock,
    announced_pairing: Pairing,
    u: Optional[float] = None,
    rng: Optional[np.random.Generator] = None,
) -> Labels:
    """Bob's measurement once Alice has announced the true pairing.

    The announcement happens only after receipt, so an eavesdropper never
    sees it; Bob, measuring the true layout, is deterministic on an
    undisturbed block.
    """
    outcome, _ = wire.measure(announced_pairing, u=u, rng=rng)
    return outcome


# --------------------------------------------------------------------------
# Protocol 1: full permutation of the pair string, Bob stores and measures
# after the order announcement.
# --------------------------------------------------------------------------


@dataclass
class PairTranscript:
    pair_index: int
    wire_position: int
    label: BellLabel
    role: Role
    bob_outcome: BellLabel
    detected: bool

    def to_json_dict(self) -> dict:
        return {
            "pair_index": self.pair_index,
            "wire_position": self.wire_position,
            "label": self.label.ascii,
            "role": self.role.value,
            "bob_outcome": self.bob_outcome.ascii,
            "detected": self.detected,
        }


@dataclass
class Protocol1Result:
    alice_key: list[int]
    bob_key: list[int]
    transcripts: list[PairTranscript]
    n_decoys: int
    n_detected: int

    @property
    def keys_agree(self) -> bool:
        return self.alice_key == self.bob_key


def protocol1_run(
    key_bits: Sequence[int],
    rng: np.random.Generator,
    decoy_fraction: float = 0.5,
) -> Protocol1Result:
    """Run the memory-based scheme end to end with no adversary on the line.

    One Bell pair per 2 key bits, decoy pairs mixed in, a uniform permutation
    over all pair positions, measurement after the announcement, decoy
    comparison. Without disturbance the sifted key equals the source key and
    no decoy can mismatch.
    """
    validate_key_bits(key_bits, block_size=2)
    if not (0 <= decoy_fraction <= 1):
        raise ValueError("decoy_fraction must be in [0, 1]")

    data_labels = [
        bell_from_bits(key_bits[i], key_bits[i + 1]) for i in range(0, len(key_bits), 2)
    ]
    n_data = len(data_labels)
    n_decoys = round(decoy_fraction * n_data)
    decoy_labels = [LABELS[int(k)] for k in rng.integers(0, 4, size=n_decoys)]

    labels = data_labels + decoy_labels
    roles = [Role.DATA] * n_data + [Role.DECOY] * n_decoys
    permutation = rng.permutation(len(labels))

    # Bob stores the permuted string, learns the order afterwards, and
    # measures each announced partner pair in the Bell basis. Undisturbed
    # pairs give their own label with certainty.
    wire_position_of = {int(pair): pos for pos, pair in enumerate(permutation)}
    transcripts = []
    n_detected = 0
    bob_key: list[int] = []
    for index, (label, role) in enumerate(zip(labels, roles)):
        bob_outcome = label
        detected = role is Role.DECOY and bob_outcome is not label
        n_detected += detected
        transcripts.append(
            PairTranscript(
                pair_index=index,
                wire_position=wire_position_of[index],
                label=label,
                role=role,
                bob_outcome=bob_outcome,
                detected=detected,
            )
        )
        if role is Role.DATA:
            bob_key.extend(bits_from_bell(bob_outcome))

    return Protocol1Result(
        alice_key=list(key_bits),
        bob_key=bob_key,
        transcripts=transcripts,
        n_decoys=n_decoys,
        n_detected=n_detected,
    )


# --------------------------------------------------------------------------
# EPR-pair BB84 baseline: Alice keeps one half of each phi+ pair, both sides
# measure in a random X/Z basis and keep the matching-basis rounds.
# --------------------------------------------------------------------------


class Basis(Enum):
    Z = "z"
    X = "x"


def bb84_epr_round(
    alice_basis: Basis, bob_basis: Basis, rng: np.random.Generator
) -> tuple[int, int]:
    """One phi+ pair measured on both ends.

    Matching bases are perfectly correlated (phi+ is ++/-- in X as well as
    00/11 in Z); mismatched bases are independent coins.
    """
    alice_bit = int(rng.integers(0, 2))
    if alice_basis is bob_basis:
        return alice_bit, alice_bit
    return alice_bit, int(rng.integers(0, 2))


@dataclass
class Bb84Result:
    n_pairs: int
    kept: int
    alice_key: np.ndarray
    bob_key: np.ndarray

    @property
    def kept_fraction(self) -> float:
        return self.kept / self.n_pairs

    @property
    def keys_agree(self) -> bool:
        return bool(np.array_equal(self.alice_key, self.bob_key))


def bb84_epr_baseline(n_pairs: int, rng: np.random.Generator) -> Bb84Result:
    """Sifted-key generation over ``n_pairs`` phi+ pairs, no adversary."""
    if n_pairs < 1:
        raise ValueError("n_pairs must be >= 1")
    alice_basis = rng.integers(0, 2, size=n_pairs)
    bob_basis = rng.integers(0, 2, size=n_pairs)
    alice_bits = rng.integers(0, 2, size=n_pairs)
    bob_random = rng.integers(0, 2, size=n_pairs)
    matched = alice_basis == bob_basis
    bob_bits = np.where(matched, alice_bits, bob_random)
    return Bb84Result(
        n_pairs=n_pairs,
        kept=int(matched.sum()),
        alice_key=alice_bits[matched],
        bob_key=bob_bits[matched],
    )


# --------------------------------------------------------------------------
# PoP: N/2 Bell pairs behind a full particle-order permutation.
# --------------------------------------------------------------------------


def pop_correct_pick_probability(n_qubits: int) -> Fraction:
    """Chance that the eavesdropper's two picked slots are one of the two
    pairs of the block she targets: 2 favorable pairs out of C(N, 2),
    i.e. 4 / (N (N - 1))."""
    _validate_pop_n(n_qubits)
    return Fraction(4, n_qubits * (n_qubits - 1))


def pop_matching_probability(n_qubits: int) -> Fraction:
    """Chance that two uniformly picked slots are entangled with each other
    under a uniform perfect matching: (N/2) / C(N, 2) = 1 / (N - 1). Reported
    alongside the targeted-pick figure for comparison; the two coincide only
    at N = 4."""
    _validate_pop_n(n_qubits)
    return Fraction(1, n_qubits - 1)


def _validate_pop_n(n_qubits: int) -> None:
    if n_qubits < 4:
        raise ValueError("PoP sequences need at least 4 qubits")
    if n_qubits % 2:
        raise ValueError("PoP sequences need an even qubit count")


@dataclass(frozen=True)
class PopSequence:
    """An N-qubit transmission: particles 2k, 2k+1 are pair k; pairs 0 and 1
    form the 4-bit block the eavesdropper is after; ``permutation[slot]`` is
    the particle occupying that wire slot."""

    n_qubits: int
    permutation: tuple[int, ...]
    pair_labels: tuple[BellLabel, ...]
    target_pairs: tuple[int, int] = (0, 1)

    def __post_init__(self) -> None:
        _validate_pop_n(self.n_qubits)
        if sorted(self.permutation) != list(range(self.n_qubits)):
            raise ValueError("permutation must be a bijection on slots")
        if len(self.pair_labels) != self.n_qubits // 2:
            raise ValueError("need one label per pair")

    def particle_at(self, slot: int) -> int:
        return self.permutation[slot]

    def pair_of_slot(self, slot: int) -> int:
        return self.permutation[slot] >> 1

    def slot_pairs(self) -> tuple[frozenset[int], ...]:
        """Which slot pairs are entangled; every slot is in exactly one."""
        slots_of_pair: dict[int, list[int]] = {}
        for slot in range(self.n_qubits):
            slots_of_pair.setdefault(self.pair_of_slot(slot), []).append(slot)
        return tuple(frozenset(s) for _, s in sorted(slots_of_pair.items()))


def pop_prepare(
    n_qubits: int,
    rng: np.random.Generator,
    pair_labels: Optional[Sequence[BellLabel]] = None,
) -> PopSequence:
    """Draw labels (uniform if unspecified) and a uniform slot permutation."""
    _validate_pop_n(n_qubits)
    if pair_labels is None:
        pair_labels = [LABELS[int(k)] for k in rng.integers(0, 4, size=n_qubits // 2)]
    return PopSequence(
        n_qubits=n_qubits,
        permutation=tuple(int(p) for p in rng.permutation(n_qubits)),
        pair_labels=tuple(pair_labels),
    )
