"""Command-line front door.

Subcommands: decompose (print exact regrouping tables), verify (closed form
vs statevector oracle, exit code reports the outcome), simulate (one seeded
campaign to report.json, optionally with a JSONL transcript), sweep (grid of
campaigns to sweep.csv), analyze (security curve CSV plus threshold JSON),
report (markdown document and figures from a campaign artifact).

Exit codes: 0 success, 1 verification failure, 2 usage error. Randomized
subcommands refuse to run without --seed unless --entropy asks for a fresh
one explicitly.
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import analytics, crosscheck, plots, report as report_mod
from .bell import LABEL_BY_ASCII, LABELS, PAIRING_BY_ASCII, Pairing, swap_decompose
from .harness import (
    CampaignConfig,
    Protocol,
    run_campaign,
    run_protocol1,
    run_protocol2_blocks,
    sweep as run_sweep,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _label_arg(text: str):
    try:
        return LABEL_BY_ASCII[text]
    except KeyError:
        raise argparse.ArgumentTypeError(
            f"unknown Bell label {text!r}; use one of phi+ phi- psi+ psi-"
        )


def _pairing_arg(text: str):
    try:
        return PAIRING_BY_ASCII[text]
    except KeyError:
        raise argparse.ArgumentTypeError(f"unknown pairing {text!r}; use seq or crossed")


def _values_arg(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"could not parse grid values {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eprqkd",
        description="EPR-based QKD lab: exact Bell-regrouping algebra, "
        "measure-resend attack campaigns, and security analytics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="print exact regrouping decompositions")
    p.add_argument("--first", type=_label_arg, help="first Bell label (phi+ phi- psi+ psi-)")
    p.add_argument("--second", type=_label_arg, help="second Bell label")
    p.add_argument("--from", dest="from_pairing", type=_pairing_arg, default=Pairing.SEQUENTIAL)
    p.add_argument("--to", dest="to_pairing", type=_pairing_arg, default=Pairing.CROSSED)
    p.add_argument("--all", action="store_true", help="dump all 16 seq->crossed tables")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="closed form vs statevector oracle; exit 1 on mismatch")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="run one seeded campaign")
    p.add_argument("--protocol", choices=[proto.value for proto in Protocol], default=None)
    p.add_argument("--blocks", type=int, default=None, help="blocks / pairs / sequences")
    p.add_argument("--f", type=float, default=None, help="attacked fraction in [0, 1]")
    p.add_argument("--compare-fraction", type=float, default=None)
    p.add_argument("--pop-qubits", type=int, default=None)
    p.add_argument("--config", type=Path, help="campaign config (.json or .toml)")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--entropy", action="store_true", help="draw a fresh seed (printed)")
    p.add_argument("--transcript", action="store_true", help="also write transcript.jsonl")
    p.add_argument("--out", type=Path, default=Path("out"))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("sweep", help="run a grid of campaigns, write sweep.csv")
    p.add_argument("--param", choices=("f", "n"), required=True, help="f or n (PoP qubits)")
    p.add_argument("--values", type=_values_arg, required=True, help="comma-separated grid")
    p.add_argument("--protocol", choices=("p2", "pop"), default="p2")
    p.add_argument("--blocks", type=int, default=100_000)
    p.add_argument("--f", type=float, default=None, help="base attacked fraction")
    p.add_argument("--compare-fraction", type=float, default=0.5)
    p.add_argument("--pop-qubits", type=int, default=4)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--entropy", action="store_true")
    p.add_argument("--out", type=Path, default=Path("out"))
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("analyze", help="security curve CSV and threshold JSON")
    p.add_argument("--points", type=int, default=101)
    p.add_argument("--out", type=Path, default=Path("out"))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("report", help="markdown report and figures from a campaign")
    p.add_argument("--campaign", type=Path, default=Path("out/report.json"))
    p.add_argument("--sweep", type=Path, default=None, help="sweep.csv to include")
    p.add_argument("--out", type=Path, default=None, help="defaults to the campaign's directory")
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(func=cmd_report)

    return parser


def _resolve_seed(args, parser: argparse.ArgumentParser, config_seed: Optional[int] = None) -> int:
    if args.seed is not None:
        return args.seed
    if config_seed is not None:
        return config_seed
    if args.entropy:
        seed = secrets.randbits(63)
        print(f"entropy seed: {seed}")
        return seed
    parser.error("randomized subcommands need --seed (or --entropy for a fresh one)")


def cmd_decompose(args, parser) -> int:
    if args.all:
        cases = [(a, b, Pairing.SEQUENTIAL, Pairing.CROSSED) for a in LABELS for b in LABELS]
    else:
        if args.first is None or args.second is None:
            parser.error("decompose needs --first and --second (or --all)")
        cases = [(args.first, args.second, args.from_pairing, args.to_pairing)]

    if args.format == "json":
        payload = [_decomposition_dict(*case) for case in cases]
        print(json.dumps(payload if args.all else payload[0], indent=2))
        return EXIT_OK

    for a, b, frm, to in cases:
        print(f"{a} x {b} : {frm} -> {to}")
        for product, coeff in swap_decompose(a, b, frm, to).terms:
            sign = "-" if coeff < 0 else "+"
            print(f"  {sign}{abs(coeff)} * {product}")
    return EXIT_OK


def _decomposition_dict(a, b, frm, to) -> dict:
    dec = swap_decompose(a, b, frm, to)
    return {
        "first": a.ascii,
        "second": b.ascii,
        "from": frm.ascii,
        "to": to.ascii,
        "terms": [
            {
                "first": product.first.ascii,
                "second": product.second.ascii,
                "coefficient": str(coeff),
                "coefficient_float": float(coeff),
            }
            for product, coeff in dec.terms
        ],
    }


def cmd_verify(args, parser) -> int:
    verification = crosscheck.run_all_checks()
    if args.format == "json":
        print(
            json.dumps(
                {
                    "passed": verification.passed,
                    "cases": [
                        {"name": r.name, "passed": r.passed, "detail": r.detail}
                        for r in verification.results
                    ],
                },
                indent=2,
            )
        )
    else:
        for line in verification.lines():
            print(line)
    return EXIT_OK if verification.passed else EXIT_VERIFY_FAILED


def _campaign_config(args, parser) -> CampaignConfig:
    if args.config is not None:
        if not args.config.exists():
            parser.error(f"config file not found: {args.config}")
        base = CampaignConfig.from_file(args.config).to_dict()
    else:
        base = {"protocol": "p2", "n_blocks": 100_000, "f": 0.0,
                "compare_fraction": 0.5, "pop_qubits": 4, "seed": None}
    overrides = {
        "protocol": args.protocol,
        "n_blocks": args.blocks,
        "f": args.f,
        "compare_fraction": args.compare_fraction,
        "pop_qubits": args.pop_qubits,
    }
    for key, value in overrides.items():
        if value is not None:
            base[key] = value
    base["seed"] = _resolve_seed(args, parser, config_seed=base.get("seed"))
    try:
        return CampaignConfig.from_dict(base)
    except ValueError as exc:
        parser.error(str(exc))


def cmd_simulate(args, parser) -> int:
    config = _campaign_config(args, parser)
    attack_report = run_campaign(config)
    args.out.mkdir(parents=True, exist_ok=True)
    report_path = attack_report.write_json(args.out / "report.json")

    transcript_path = None
    if args.transcript:
        if config.protocol is Protocol.P2:
            records = (t.to_json_dict() for t in run_protocol2_blocks(config))
        elif config.protocol is Protocol.P1:
            records = (t.to_json_dict() for t in run_protocol1(config).transcripts)
        else:
            parser.error("--transcript is available for protocols p1 and p2")
        transcript_path = args.out / "transcript.jsonl"
        with transcript_path.open("w") as handle:
            for record in records:
                handle.write(json.dumps(record, sort_keys=True) + "\n")

    if args.format == "json":
        print(attack_report.to_json(), end="")
    else:
        print(f"wrote {report_path}")
        if transcript_path:
            print(f"wrote {transcript_path}")
        for name, metric in attack_report.metrics.items():
            print(
                f"{name}: {metric.estimate:.6f} (target {metric.target:.6f}, "
                f"z {metric.z:+.2f}, {metric.verdict})"
            )
    return EXIT_OK


def cmd_sweep(args, parser) -> int:
    seed = _resolve_seed(args, parser)
    param = "pop_qubits" if args.param == "n" else "f"
    protocol = Protocol(args.protocol)
    if param == "pop_qubits" and protocol is not Protocol.POP:
        protocol = Protocol.POP
    base = CampaignConfig(
        protocol=protocol,
        n_blocks=args.blocks,
        seed=seed,
        f=args.f if args.f is not None else (1.0 if protocol is Protocol.POP else 0.0),
        compare_fraction=args.compare_fraction,
        pop_qubits=args.pop_qubits,
    )
    try:
        result = run_sweep(base, param, args.values)
    except ValueError as exc:
        parser.error(str(exc))
    args.out.mkdir(parents=True, exist_ok=True)
    path = result.write_csv(args.out / "sweep.csv")
    if args.format == "csv":
        print("\n".join(result.csv_lines()))
    else:
        print(f"wrote {path}")
        for point in result.points:
            metrics = point.report.metrics
            summary = ", ".join(
                f"{name} {metric.estimate:.5f}/{metric.target:.5f}"
                for name, metric in sorted(metrics.items())
            )
            print(f"{args.param} = {point.value:g}: {summary}")
    return EXIT_OK


def cmd_analyze(args, parser) -> int:
    try:
        curve = analytics.SecurityCurve.compute(n_points=args.points)
    except ValueError as exc:
        parser.error(str(exc))
    f_star, e_max = analytics.security_threshold()
    payload = {
        "f_star": f_star,
        "e_max": e_max,
        "detection_rate_per_attacked_block": float(analytics.DETECTION_RATE),
        "eve_accuracy": float(analytics.EVE_ACCURACY),
        "claimed_incorrect_rate": float(analytics.CLAIMED_INCORRECT_RATE),
        "eve_ignorance_bits": analytics.eve_ignorance_bits(),
        "eve_channel_mi_per_bit": analytics.eve_channel_mi_per_bit(),
        "reference_constants": analytics.reference_constants(),
    }
    args.out.mkdir(parents=True, exist_ok=True)
    curve_path = args.out / "security_curve.csv"
    curve_path.write_text("\n".join(curve.csv_rows()) + "\n")
    threshold_path = args.out / "threshold.json"
    threshold_path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")

    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"wrote {curve_path}")
        print(f"wrote {threshold_path}")
        print(f"f* = {f_star:.6f} ({100 * f_star:.2f}%)")
        print(f"e_max = {e_max:.6f} ({100 * e_max:.2f}%)")
    return EXIT_OK


def cmd_report(args, parser) -> int:
    if not args.campaign.exists():
        parser.error(f"campaign artifact not found: {args.campaign} (run `eprqkd simulate` first)")
    payload = json.loads(args.campaign.read_text())
    outdir = args.out if args.out is not None else args.campaign.parent
    outdir.mkdir(parents=True, exist_ok=True)

    sweep_path = args.sweep
    if sweep_path is None:
        candidate = args.campaign.parent / "sweep.csv"
        sweep_path = candidate if candidate.exists() else None
    elif not sweep_path.exists():
        parser.error(f"sweep file not found: {sweep_path}")
    sweep_lines = sweep_path.read_text().splitlines() if sweep_path else None

    figure_paths: list[Path] = []
    if not args.no_figures:
        empirical_pop = None
        if payload.get("protocol") == "pop" and "pick_probability" in payload.get("metrics", {}):
            empirical_pop = {
                payload["config"]["pop_qubits"]: payload["metrics"]["pick_probability"]["estimate"]
            }
        figure_paths = plots.render_all(payload, outdir, empirical_pop=empirical_pop)

    document = report_mod.build_report(
        payload,
        sweep_lines=sweep_lines,
        figure_names=[p.name for p in figure_paths],
    )
    report_path = outdir / "report.md"
    report_path.write_text(document)
    print(f"wrote {report_path}")
    for path in figure_paths:
        print(f"wrote {path}")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
