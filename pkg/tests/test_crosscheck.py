"""Verification suite wiring, including the corrupted-table negative control."""

from fractions import Fraction

from eprqkd import crosscheck
from eprqkd.bell import BellLabel, Decomposition, PairProduct, Pairing, swap_decompose

PP, SP = BellLabel.PHI_PLUS, BellLabel.PSI_PLUS
SEQ, CROSSED = Pairing.SEQUENTIAL, Pairing.CROSSED


def test_full_suite_passes():
    report = crosscheck.run_all_checks()
    assert report.passed
    assert report.n_passed == len(report.results)
    # 2 basis + 4 pinned + 32 equivalence + 3 forbidden-outcome checks
    assert len(report.results) == 41


def test_suite_emits_one_line_per_case():
    report = crosscheck.run_all_checks()
    lines = list(report.lines())
    assert len(lines) == len(report.results) + 1
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1] == "41/41 checks passed"


def _sign_flipped(a, b, from_pairing, to_pairing):
    # Negative control: flip the sign of one term of one specific regrouping.
    dec = swap_decompose(a, b, from_pairing, to_pairing)
    if (a, b, from_pairing, to_pairing) != (PP, SP, SEQ, CROSSED):
        return dec
    product, coeff = dec.terms[0]
    tampered = ((product, -coeff),) + dec.terms[1:]
    return Decomposition(tampered)


def test_corrupted_table_is_caught_and_named():
    report = crosscheck.run_all_checks(decompose_fn=_sign_flipped)
    assert not report.passed
    failing = [r for r in report.results if not r.passed]
    assert failing
    assert all("phi+*psi+" in r.name for r in failing)


def test_forbidden_checks_are_exact():
    for result in crosscheck.forbidden_outcome_checks():
        assert result.passed, result.line()


def test_pinned_tables_are_normalized():
    for expected in crosscheck.PINNED_MIXED_REGROUPINGS.values():
        assert sum(c * c for c in expected.values()) == Fraction(1)
