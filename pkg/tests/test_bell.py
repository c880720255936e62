"""Closed-form Bell algebra: encodings, regroupings, measurement statistics."""

from fractions import Fraction

import pytest

from eprqkd.bell import (
    LABELS,
    BellLabel,
    PairProduct,
    Pairing,
    Pauli,
    bell_from_bits,
    bits_from_bell,
    measurement_distribution,
    pauli_encode,
    swap_decompose,
    two_step_distribution,
)

PP, PM, SP, SM = BellLabel.PHI_PLUS, BellLabel.PHI_MINUS, BellLabel.PSI_PLUS, BellLabel.PSI_MINUS
SEQ, CROSSED = Pairing.SEQUENTIAL, Pairing.CROSSED
HALF = Fraction(1, 2)


def table(decomposition):
    return {product.labels: coeff for product, coeff in decomposition.terms}


class TestEncoding:
    def test_bit_table(self):
        assert bell_from_bits(0, 0) is PP
        assert bell_from_bits(0, 1) is PM
        assert bell_from_bits(1, 0) is SP
        assert bell_from_bits(1, 1) is SM

    def test_round_trip(self):
        for b1 in (0, 1):
            for b2 in (0, 1):
                assert bits_from_bell(bell_from_bits(b1, b2)) == (b1, b2)

    def test_rejects_non_bits(self):
        with pytest.raises(ValueError):
            bell_from_bits(2, 0)

    def test_exactly_four_labels(self):
        assert len(LABELS) == 4
        assert len({(l.flip, l.phase) for l in LABELS}) == 4


class TestPauliEncode:
    def test_spot_values(self):
        assert pauli_encode(Pauli.Z, PP) is PM
        assert pauli_encode(Pauli.IY, PP) is SM
        assert pauli_encode(Pauli.I, SP) is SP
        assert pauli_encode(Pauli.X, PP) is SP

    def test_encoding_from_phi_plus_matches_bit_table(self):
        # I, Z, X, iY on phi+ encode 00, 01, 10, 11
        for op, bits in [(Pauli.I, (0, 0)), (Pauli.Z, (0, 1)), (Pauli.X, (1, 0)), (Pauli.IY, (1, 1))]:
            assert pauli_encode(op, PP) is bell_from_bits(*bits)

    def test_every_op_is_an_involution_on_labels(self):
        for op in Pauli:
            for label in LABELS:
                assert pauli_encode(op, pauli_encode(op, label)) is label


class TestSwapDecompose:
    def test_identity_regrouping(self):
        dec = swap_decompose(PP, SP, SEQ, SEQ)
        assert table(dec) == {(PP, SP): Fraction(1)}
        assert dec.pairing is SEQ

    def test_phi_plus_psi_plus_to_crossed(self):
        dec = swap_decompose(PP, SP, SEQ, CROSSED)
        assert table(dec) == {
            (PP, SP): HALF,
            (PM, SM): HALF,
            (SP, PP): HALF,
            (SM, PM): HALF,
        }

    def test_psi_minus_phi_minus_to_sequential(self):
        dec = swap_decompose(SM, PM, CROSSED, SEQ)
        assert table(dec) == {
            (PP, SP): HALF,
            (PM, SM): -HALF,
            (SP, PP): -HALF,
            (SM, PM): HALF,
        }

    def test_phi_plus_phi_plus_support_and_signs(self):
        # Frozen from the statevector projection: all four diagonal pairs, +1/2.
        dec = swap_decompose(PP, PP, SEQ, CROSSED)
        assert table(dec) == {
            (PP, PP): HALF,
            (PM, PM): HALF,
            (SP, SP): HALF,
            (SM, SM): HALF,
        }

    def test_xor_conservation_everywhere(self):
        for a in LABELS:
            for b in LABELS:
                for frm in Pairing:
                    dec = swap_decompose(a, b, frm, frm.other)
                    assert len(dec.terms) == 4
                    for product, _ in dec.terms:
                        a2, b2 = product.labels
                        assert a2.flip ^ b2.flip == a.flip ^ b.flip
                        assert a2.phase ^ b2.phase == a.phase ^ b.phase

    def test_unitarity_exact(self):
        for a in LABELS:
            for b in LABELS:
                for frm in Pairing:
                    for to in Pairing:
                        assert swap_decompose(a, b, frm, to).squared_norm() == 1

    def test_coefficients_are_dyadic(self):
        for a in LABELS:
            for b in LABELS:
                dec = swap_decompose(a, b, SEQ, CROSSED)
                for _, coeff in dec.terms:
                    denominator = coeff.denominator
                    assert denominator & (denominator - 1) == 0  # power of two

    def test_involution_reconstructs_original(self):
        # Expanding each term back to the original pairing must cancel every
        # cross term exactly and leave the original with coefficient +1.
        for a in LABELS:
            for b in LABELS:
                forward = swap_decompose(a, b, SEQ, CROSSED)
                acc: dict = {}
                for product, coeff in forward.terms:
                    back = swap_decompose(product.first, product.second, CROSSED, SEQ)
                    for product2, coeff2 in back.terms:
                        key = product2.labels
                        acc[key] = acc.get(key, Fraction(0)) + coeff * coeff2
                nonzero = {k: v for k, v in acc.items() if v != 0}
                assert nonzero == {(a, b): Fraction(1)}


class TestMeasurementDistribution:
    def test_matching_pairing_is_point_mass(self):
        assert measurement_distribution(PP, SP, SEQ, SEQ) == {(PP, SP): Fraction(1)}

    def test_crossed_measurement_uniform_quarter(self):
        dist = measurement_distribution(PP, SP, SEQ, CROSSED)
        assert dist == {
            (PP, SP): Fraction(1, 4),
            (PM, SM): Fraction(1, 4),
            (SP, PP): Fraction(1, 4),
            (SM, PM): Fraction(1, 4),
        }
        assert (SP, SM) not in dist

    def test_phi_minus_psi_minus_support(self):
        dist = measurement_distribution(PM, SM, SEQ, CROSSED)
        assert set(dist) == {(PP, SP), (PM, SM), (SP, PP), (SM, PM)}
        assert all(p == Fraction(1, 4) for p in dist.values())

    def test_probabilities_sum_to_one_exactly(self):
        for a in LABELS:
            for b in LABELS:
                for prep in Pairing:
                    for meas in Pairing:
                        dist = measurement_distribution(a, b, prep, meas)
                        assert sum(dist.values()) == 1


class TestTwoStepDistribution:
    def test_wrong_then_right_recovers_original_quarter(self):
        # Interposing a crossed measurement leaves only 1/4 weight on the
        # original labels; the complementary 3/4 is the detectable trace.
        dist = two_step_distribution(PP, SP, SEQ, CROSSED, SEQ)
        assert dist[(PP, SP)] == Fraction(1, 4)
        assert sum(dist.values()) == 1

    def test_same_shape_for_all_initials(self):
        for a in LABELS:
            for b in LABELS:
                dist = two_step_distribution(a, b, SEQ, CROSSED, SEQ)
                assert dist[(a, b)] == Fraction(1, 4)
                assert len(dist) == 4

    def test_forbidden_two_step_outcome_absent(self):
        dist = two_step_distribution(PP, SP, SEQ, CROSSED, SEQ)
        assert (SP, PM) not in dist


class TestPairProduct:
    def test_sign_validation(self):
        with pytest.raises(ValueError):
            PairProduct(PP, SP, SEQ, sign=2)

    def test_str_uses_one_based_slots(self):
        text = str(PairProduct(PP, SP, CROSSED))
        assert "(1,3)" in text and "(2,4)" in text
