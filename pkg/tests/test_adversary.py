"""Eavesdropper models: measure-resend accounting and the PoP interceptor."""

from fractions import Fraction

import numpy as np
import pytest

from eprqkd.adversary import (
    AttackConfig,
    EveRecord,
    choose_attacked_blocks,
    eve_outcome_distribution,
    measure_resend,
    pop_intercept,
)
from eprqkd.bell import LABELS, BellLabel, Pairing
from eprqkd.protocols import BlockState, pop_prepare, protocol2_bob_measure

PP, PM, SP, SM = BellLabel.PHI_PLUS, BellLabel.PHI_MINUS, BellLabel.PSI_PLUS, BellLabel.PSI_MINUS
SEQ, CROSSED = Pairing.SEQUENTIAL, Pairing.CROSSED


def rng(seed=0):
    return np.random.default_rng(seed)


class TestAttackConfig:
    def test_rejects_bad_fraction(self):
        with pytest.raises(ValueError):
            AttackConfig(f=1.5)

    def test_rejects_unknown_policy(self):
        with pytest.raises(ValueError):
            AttackConfig(f=0.5, policy="always_crossed")

    def test_n_attacked_rounds(self):
        assert AttackConfig(f=0.5).n_attacked(101) == 50
        assert AttackConfig(f=1.0).n_attacked(7) == 7
        assert AttackConfig(f=0.0).n_attacked(7) == 0

    def test_from_dict_rejects_unknown_keys(self):
        with pytest.raises(ValueError):
            AttackConfig.from_dict({"f": 0.5, "strength": 2})
        config = AttackConfig.from_dict({"f": 0.25, "seed": 7, "policy": "uniform"})
        assert config.f == 0.25


def test_choose_attacked_blocks_exact_count():
    for f in (0.0, 0.3, 0.493875, 1.0):
        mask = choose_attacked_blocks(1000, f, rng(1))
        assert mask.sum() == round(f * 1000)


class TestMeasureResend:
    def test_correct_guess_is_invisible(self):
        for _ in range(20):
            wire = BlockState((PP, SP), SEQ).to_wire()
            record, resent = measure_resend(wire, SEQ, rng=rng())
            assert record.outcome == (PP, SP)
            assert record.inferred_bits == (0, 0, 1, 0)
            # Bob, measuring the true layout afterwards, sees no trace.
            assert protocol2_bob_measure(resent, SEQ, rng=rng()) == (PP, SP)

    def test_wrong_guess_recovers_labels_quarter_of_the_time(self):
        generator = rng(3)
        n = 40_000
        hits = 0
        for _ in range(n):
            wire = BlockState((PP, SP), SEQ).to_wire()
            record, _ = measure_resend(wire, CROSSED, rng=generator)
            hits += record.outcome == (PP, SP)
        sigma = (0.25 * 0.75 / n) ** 0.5
        assert abs(hits / n - 0.25) < 4 * sigma

    def test_marginal_accuracy_five_eighths(self):
        generator = rng(4)
        n = 40_000
        hits = 0
        for _ in range(n):
            wire = BlockState((PP, SP), SEQ).to_wire()
            guess = SEQ if generator.random() < 0.5 else CROSSED
            record, _ = measure_resend(wire, guess, rng=generator)
            hits += record.inferred_bits == (0, 0, 1, 0)
        p = 5 / 8
        sigma = (p * (1 - p) / n) ** 0.5
        assert abs(hits / n - p) < 4 * sigma


class TestEveOutcomeDistribution:
    def test_example_block(self):
        dist = eve_outcome_distribution((PP, SP))
        assert dist[(0, 0, 1, 0)] == Fraction(5, 8)
        others = {bits: p for bits, p in dist.items() if bits != (0, 0, 1, 0)}
        assert len(others) == 3
        assert all(p == Fraction(1, 8) for p in others.values())

    def test_support_conserves_parities(self):
        dist = eve_outcome_distribution((PP, SP))
        for b1, b2, b3, b4 in dist:
            assert b1 ^ b3 == 0 ^ 1  # flip parity of (phi+, psi+)
            assert b2 ^ b4 == 0 ^ 0  # phase parity

    def test_same_shape_for_all_initials(self):
        for a in LABELS:
            for b in LABELS:
                dist = eve_outcome_distribution((a, b))
                true_bits = (a.flip, a.phase, b.flip, b.phase)
                assert dist[true_bits] == Fraction(5, 8)
                assert sorted(dist.values(), reverse=True) == [
                    Fraction(5, 8),
                    Fraction(1, 8),
                    Fraction(1, 8),
                    Fraction(1, 8),
                ]
                assert sum(dist.values()) == 1


def test_eve_record_inferred_bits_follow_outcome():
    record = EveRecord(block_index=3, pairing_guess=CROSSED, outcome=(SM, PM))
    assert record.inferred_bits == (1, 1, 0, 1)


class TestPopIntercept:
    def test_rejects_degenerate_picks(self):
        seq = pop_prepare(8, rng(1))
        with pytest.raises(ValueError):
            pop_intercept(seq, (2, 2), rng())
        with pytest.raises(ValueError):
            pop_intercept(seq, (0, 8), rng())

    def test_true_pair_reveals_label(self):
        seq = pop_prepare(8, rng(2))
        slots_of_pair0 = [s for s in range(8) if seq.pair_of_slot(s) == 0]
        result = pop_intercept(seq, tuple(slots_of_pair0), rng())
        assert result.pair_hit and result.target_hit
        assert not result.disturbed
        assert result.outcome is seq.pair_labels[0]

    def test_cross_pair_pick_is_uniform_noise(self):
        generator = rng(5)
        seq = pop_prepare(8, generator)
        slot_a = next(s for s in range(8) if seq.pair_of_slot(s) == 0)
        slot_b = next(s for s in range(8) if seq.pair_of_slot(s) == 1)
        counts = {label: 0 for label in LABELS}
        n = 20_000
        for _ in range(n):
            result = pop_intercept(seq, (slot_a, slot_b), generator)
            assert result.disturbed and not result.pair_hit
            counts[result.outcome] += 1
        sigma = (0.25 * 0.75 / n) ** 0.5
        for label in LABELS:
            assert abs(counts[label] / n - 0.25) < 4 * sigma

    def test_information_event_rate_n4(self):
        generator = rng(6)
        n = 50_000
        hits = 0
        for _ in range(n):
            seq = pop_prepare(4, generator)
            s1, s2 = generator.choice(4, size=2, replace=False)
            hits += pop_intercept(seq, (int(s1), int(s2)), generator).pair_hit
        p = 1 / 3
        sigma = (p * (1 - p) / n) ** 0.5
        assert abs(hits / n - p) < 3 * sigma

    def test_nontarget_pair_is_information_but_not_target(self):
        seq = pop_prepare(8, rng(7))
        slots_of_pair3 = [s for s in range(8) if seq.pair_of_slot(s) == 3]
        result = pop_intercept(seq, tuple(slots_of_pair3), rng())
        assert result.pair_hit and not result.target_hit
        assert result.outcome is seq.pair_labels[3]
