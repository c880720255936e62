"""Protocol machinery: block preparation, wire measurements, baselines, PoP."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eprqkd.bell import BellLabel, Pairing
from eprqkd.protocols import (
    Basis,
    BlockState,
    PopSequence,
    Role,
    WireBlock,
    bb84_epr_baseline,
    bb84_epr_round,
    flip_pairing,
    pop_correct_pick_probability,
    pop_matching_probability,
    pop_prepare,
    protocol1_run,
    protocol2_bob_measure,
    protocol2_prepare_block,
    validate_key_bits,
)

PP, PM, SP, SM = BellLabel.PHI_PLUS, BellLabel.PHI_MINUS, BellLabel.PSI_PLUS, BellLabel.PSI_MINUS
SEQ, CROSSED = Pairing.SEQUENTIAL, Pairing.CROSSED


def rng(seed=0):
    return np.random.default_rng(seed)


class TestBlockPreparation:
    def test_example_block(self):
        block = protocol2_prepare_block((0, 0, 1, 0), SEQ)
        assert block.alice_labels == (PP, SP)
        assert block.alice_pairing is SEQ

    def test_all_zero_bits_crossed(self):
        block = protocol2_prepare_block((0, 0, 0, 0), CROSSED)
        assert block.alice_labels == (PP, PP)
        assert block.alice_pairing is CROSSED

    def test_source_bits_round_trip(self):
        for nibble in range(16):
            bits = tuple((nibble >> k) & 1 for k in (3, 2, 1, 0))
            block = protocol2_prepare_block(bits, SEQ)
            assert block.source_bits == bits

    def test_wire_order_reflects_pairing(self):
        assert protocol2_prepare_block((0, 0, 1, 0), SEQ).wire_order == (1, 2, 3, 4)
        assert protocol2_prepare_block((0, 0, 1, 0), CROSSED).wire_order == (1, 3, 2, 4)

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            protocol2_prepare_block((0, 1), SEQ)

    def test_pairing_coin_is_fair(self):
        generator = rng(11)
        n = 100_000
        seq_count = sum(flip_pairing(generator) is SEQ for _ in range(n))
        sigma = (0.25 / n) ** 0.5
        assert abs(seq_count / n - 0.5) < 3 * sigma


class TestWireBlock:
    def test_matching_measurement_is_deterministic(self):
        wire = BlockState((PP, SP), SEQ).to_wire()
        for _ in range(20):
            assert protocol2_bob_measure(wire, SEQ, rng=rng()) == (PP, SP)

    def test_mismatched_measurement_needs_randomness(self):
        wire = BlockState((PP, SP), SEQ).to_wire()
        with pytest.raises(ValueError):
            wire.measure(CROSSED)

    def test_mismatched_outcomes_are_the_conserving_four(self):
        wire = BlockState((PP, SP), SEQ).to_wire()
        outcomes = {wire.measure(CROSSED, u=(k + 0.5) / 4)[0] for k in range(4)}
        assert outcomes == {(PP, SP), (PM, SM), (SP, PP), (SM, PM)}

    def test_collapse_commits_the_measured_layout(self):
        wire = BlockState((PP, SP), SEQ).to_wire()
        outcome, resent = wire.measure(CROSSED, u=0.1)
        # the resent block now answers a crossed measurement deterministically
        assert resent.measure(CROSSED, u=0.9)[0] == outcome

    def test_eve_view_exposes_no_pairing(self):
        # Structural secrecy: measurement is the only public operation.
        wire = BlockState((PP, SP), CROSSED).to_wire()
        public = [name for name in dir(wire) if not name.startswith("_")]
        assert public == ["measure"]
        assert not hasattr(wire, "__dict__")

    def test_wrong_then_right_incorrect_three_quarters(self):
        generator = rng(5)
        n = 40_000
        wrong = 0
        for _ in range(n):
            wire = BlockState((PP, SP), SEQ).to_wire()
            _, resent = wire.measure(CROSSED, rng=generator)
            wrong += protocol2_bob_measure(resent, SEQ, rng=generator) != (PP, SP)
        sigma = (0.75 * 0.25 / n) ** 0.5
        assert abs(wrong / n - 0.75) < 4 * sigma


class TestProtocol1:
    def test_two_bit_key(self):
        result = protocol1_run([0, 0], rng())
        assert result.bob_key == [0, 0]
        assert result.n_detected == 0

    def test_four_bit_key(self):
        result = protocol1_run([0, 1, 1, 1], rng(3))
        assert result.bob_key == [0, 1, 1, 1]

    def test_long_random_key_agrees_exactly(self):
        generator = rng(9)
        key = [int(b) for b in generator.integers(0, 2, size=1000)]
        result = protocol1_run(key, generator)
        assert result.keys_agree
        assert result.n_detected == 0
        assert result.n_decoys == 250

    def test_rejects_odd_key(self):
        with pytest.raises(ValueError):
            protocol1_run([0, 1, 1], rng())

    def test_rejects_bad_decoy_fraction(self):
        with pytest.raises(ValueError):
            protocol1_run([0, 0], rng(), decoy_fraction=1.5)

    def test_permutation_covers_all_wire_positions(self):
        result = protocol1_run([0, 1] * 50, rng(4))
        positions = sorted(t.wire_position for t in result.transcripts)
        assert positions == list(range(len(result.transcripts)))

    @given(st.lists(st.integers(0, 1), min_size=2, max_size=60).filter(lambda k: len(k) % 2 == 0))
    @settings(max_examples=25, deadline=None)
    def test_no_adversary_soundness(self, key):
        result = protocol1_run(key, rng(1))
        assert result.keys_agree
        assert result.n_detected == 0


class TestBb84Baseline:
    def test_forced_matching_bases_agree(self):
        for basis in Basis:
            for _ in range(10):
                alice, bob = bb84_epr_round(basis, basis, rng())
                assert alice == bob

    def test_mismatched_bases_are_uncorrelated(self):
        generator = rng(2)
        agree = sum(
            a == b for a, b in (bb84_epr_round(Basis.Z, Basis.X, generator) for _ in range(20_000))
        )
        sigma = (0.25 / 20_000) ** 0.5
        assert abs(agree / 20_000 - 0.5) < 4 * sigma

    def test_baseline_kept_fraction_and_agreement(self):
        result = bb84_epr_baseline(100_000, rng(8))
        sigma = (0.25 / result.n_pairs) ** 0.5
        assert abs(result.kept_fraction - 0.5) < 3 * sigma
        assert result.keys_agree

    def test_rejects_empty_run(self):
        with pytest.raises(ValueError):
            bb84_epr_baseline(0, rng())


class TestPop:
    def test_pick_probability_values(self):
        assert pop_correct_pick_probability(4) == Fraction(1, 3)
        assert pop_correct_pick_probability(8) == Fraction(1, 14)
        assert pop_correct_pick_probability(16) == Fraction(1, 60)

    def test_matching_probability_values(self):
        assert pop_matching_probability(4) == Fraction(1, 3)
        assert pop_matching_probability(8) == Fraction(1, 7)

    @pytest.mark.parametrize("bad", [2, 3, 5, 7, 0])
    def test_rejects_bad_counts(self, bad):
        with pytest.raises(ValueError):
            pop_correct_pick_probability(bad)
        with pytest.raises(ValueError):
            pop_matching_probability(bad)

    def test_prepare_invariants(self):
        seq = pop_prepare(8, rng(6))
        assert sorted(seq.permutation) == list(range(8))
        pairs = seq.slot_pairs()
        assert len(pairs) == 4
        covered = set()
        for pair in pairs:
            assert len(pair) == 2
            covered |= pair
        assert covered == set(range(8))

    def test_sequence_validation(self):
        with pytest.raises(ValueError):
            PopSequence(n_qubits=4, permutation=(0, 1, 2, 2), pair_labels=(PP, PP))
        with pytest.raises(ValueError):
            PopSequence(n_qubits=4, permutation=(0, 1, 2, 3), pair_labels=(PP,))

    def test_matching_monte_carlo_n4(self):
        # Combinatorial oracle: a uniform matching on 4 slots is hit by a
        # uniform 2-slot pick with probability 1/3.
        generator = rng(10)
        n = 100_000
        hits = 0
        for _ in range(n):
            seq = pop_prepare(4, generator)
            s1, s2 = generator.choice(4, size=2, replace=False)
            hits += seq.pair_of_slot(int(s1)) == seq.pair_of_slot(int(s2))
        p = 1 / 3
        sigma = (p * (1 - p) / n) ** 0.5
        assert abs(hits / n - p) < 3 * sigma


def test_validate_key_bits():
    validate_key_bits([0, 1, 1, 0], block_size=4)
    with pytest.raises(ValueError):
        validate_key_bits([], block_size=2)
    with pytest.raises(ValueError):
        validate_key_bits([0, 2], block_size=2)
