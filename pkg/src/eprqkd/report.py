"""Markdown comparison report.

Renders one campaign payload (a loaded report.json) into a human-readable
document that puts every empirical estimate next to its closed-form target,
contrasts the corrected detection probability with the 15/16 figure asserted
in the original analysis of the scheme, and tabulates the threshold, the
reference error limits, and the permuted-order scaling law. Output is plain
text assembled from the payload only, so it is byte-stable for a fixed seed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from . import analytics

_POP_TABLE_N = (4, 8, 16, 32, 64, 100)


def _pct(x: float) -> str:
    return f"{100.0 * x:.2f}%"


def _metric_row(name: str, metric: dict) -> str:
    ci = f"[{metric['ci95_lo']:.6f}, {metric['ci95_hi']:.6f}]"
    z = metric["z"]
    z_text = z if isinstance(z, str) else f"{z:+.2f}"
    return (
        f"| {name} | {metric['estimate']:.6f} | {ci} | {metric['target']:.6f} "
        f"| {z_text} | {metric['verdict']} |"
    )


def build_report(
    payload: dict,
    sweep_lines: Optional[Sequence[str]] = None,
    figure_names: Optional[Sequence[str]] = None,
) -> str:
    """Assemble the markdown document for one campaign payload."""
    f_star, e_max = analytics.security_threshold()
    constants = analytics.reference_constants()
    ignorance = analytics.eve_ignorance_bits()
    config = payload["config"]
    metrics = payload.get("metrics", {})

    lines: list[str] = []
    out = lines.append

    out("# Measure-resend security report")
    out("")
    out(
        f"Campaign: protocol `{config['protocol']}`, {config['n_blocks']} blocks, "
        f"attack fraction f = {config['f']}, seed {config['seed']}, "
        f"compare fraction {config['compare_fraction']}."
    )
    out("")

    out("## Headline numbers")
    out("")
    out("| quantity | value |")
    out("| --- | --- |")
    out(f"| detection probability per attacked block (corrected) | 3/8 = {_pct(3 / 8)} |")
    out(
        f"| detection probability asserted by the original analysis | 15/16 = {_pct(15 / 16)} |"
    )
    out(f"| eavesdropper 4-bit accuracy | 5/8 = {_pct(5 / 8)} |")
    out(f"| eavesdropper ignorance per attacked block | {ignorance:.5f} bits of 4 |")
    out(f"| threshold attack fraction f* | {f_star:.6f} ({_pct(f_star)}) |")
    out(f"| tolerable error rate e_max = (3/8) f* | {e_max:.6f} ({_pct(e_max)}) |")
    out("")

    if "claimed_rate_contrast" in payload:
        contrast = payload["claimed_rate_contrast"]
        detection = metrics["detection_rate"]
        verdict = "REFUTED" if contrast["refuted"] else "NOT REFUTED"
        out("## Corrected vs claimed detection probability")
        out("")
        out(
            f"The campaign measured a per-attacked-block error rate of "
            f"{detection['estimate']:.6f} (95% CI [{detection['ci95_lo']:.6f}, "
            f"{detection['ci95_hi']:.6f}]) against the corrected value "
            f"{contrast['corrected_rate']} = {_pct(contrast['corrected_rate'])}."
        )
        z_text = contrast["z_vs_claimed"]
        z_text = z_text if isinstance(z_text, str) else f"{z_text:.1f}"
        out("")
        out(
            f"The 15/16 = {_pct(contrast['claimed_incorrect_rate'])} figure sits "
            f"{z_text} standard errors from the estimate and "
            + (
                "outside"
                if not contrast["claimed_within_ci"]
                else "inside"
            )
            + f" the confidence interval: **{verdict}**."
        )
        out("")

    if metrics:
        out("## Campaign estimates vs closed forms")
        out("")
        out("| metric | estimate | 95% CI | target | z | verdict |")
        out("| --- | --- | --- | --- | --- | --- |")
        for name in sorted(metrics):
            out(_metric_row(name, metrics[name]))
        out("")

    histogram = payload.get("eve_outcome_histogram")
    if histogram and histogram.get("p_value") is not None:
        out("## Eavesdropper outcome distribution")
        out("")
        out("| outcome | observed | expected |")
        out("| --- | --- | --- |")
        names = ("correct (5/8)", "alternative 1 (1/8)", "alternative 2 (1/8)", "alternative 3 (1/8)")
        for name, obs, exp in zip(
            names, histogram["deviation_counts"], histogram["expected_counts"]
        ):
            out(f"| {name} | {obs} | {exp:.1f} |")
        out("")
        out(
            f"Chi-square p-value {histogram['p_value']:.4f} "
            f"({'consistent' if histogram['pass_at_1pct'] else 'inconsistent'} "
            "with the {5/8, 1/8, 1/8, 1/8} law at the 1% level)."
        )
        out("")

    mi = payload.get("mutual_information")
    if mi:
        out("## Information accounting")
        out("")
        out(
            f"Plug-in mutual information per attacked block: "
            f"{mi['bits_per_block']:.6f} bits ({mi['bits_per_bit']:.6f} per key bit; "
            f"channel value {mi['bits_per_bit_analytic']:.6f})."
        )
        out("")
        out(
            "The 5f/8 leakage formula counts success probability (fraction "
            "attacked times the 5/8 chance of reading the right bits), which "
            "is the `i_ae` metric above; the Shannon per-bit figure is close "
            "but not identical."
        )
        out("")

    out("## Tolerable error rates under measure-resend")
    out("")
    out("| protocol / analysis | e_max |")
    out("| --- | --- |")
    out(f"| BB84, arbitrary attack (tight) | {_pct(constants['bb84_arbitrary_attack'])} |")
    out(f"| Goldenberg-Vaidman, measure-resend | {_pct(constants['gv_measure_resend'])} |")
    out(
        f"| one-step block scheme, original (incorrect) analysis | "
        f"{_pct(constants['one_step_scheme_claimed'])} |"
    )
    out(
        f"| one-step block scheme, this model | "
        f"{_pct(constants['this_work_measure_resend'])} |"
    )
    out("")

    out("## Scaling under particle-order permutation")
    out("")
    out("| N | targeted pick 4/(N(N-1)) | any-pair match 1/(N-1) | leakage at f=1 |")
    out("| --- | --- | --- | --- |")
    for n in _POP_TABLE_N:
        pick = Fraction(4, n * (n - 1))
        match = Fraction(1, n - 1)
        leak = analytics.pop_eve_info(1, n)
        out(f"| {n} | {pick} = {float(pick):.6f} | {match} = {float(match):.6f} | {float(leak):.6f} |")
    out("")
    out(
        "Leakage falls off as 1/N^2, so the permuted-order family pushes the "
        "eavesdropper's information toward zero as the sequence grows; the "
        "two-layout block scheme is the N = 4 corner where the targeted and "
        "any-pair figures coincide at 1/3."
    )
    out("")

    if sweep_lines:
        out("## Error-rate sweep")
        out("")
        header, *rows = [line for line in sweep_lines if line.strip()]
        out("| " + " | ".join(header.split(",")) + " |")
        out("|" + " --- |" * len(header.split(",")))
        for row in rows:
            out("| " + " | ".join(cell or "-" for cell in row.split(",")) + " |")
        out("")

    if figure_names:
        out("## Figures")
        out("")
        for name in figure_names:
            out(f"![{name}]({name})")
        out("")

    out("## Reproducibility")
    out("")
    out(
        f"Deterministic given the seed: rerunning with seed {config['seed']} "
        "reproduces this document and report.json byte for byte."
    )
    out("")
    return "\n".join(lines)
