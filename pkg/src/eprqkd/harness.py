"""Seeded Monte Carlo campaigns with analytic targets alongside.

Randomness discipline: every campaign hashes its seed into two Philox
(counter-based) streams, one consumed row-by-row as a fixed-width matrix of
per-block uniforms and one for campaign-level choices (which blocks are
attacked, which are compared). Block i touches only row i, so results do
not depend on evaluation order and identical configs are byte-identical.

The per-block column layout for the block scheme is
[key nibble, pairing coin, guess coin, eve outcome selector, bob outcome
selector]; unused columns are still drawn so streams stay aligned whatever
the attack fraction. ``run_protocol2_blocks`` replays the same matrix
through the object-level protocol API one block at a time and must produce
identical outcomes -- that equivalence is under test.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import NamedTuple, Optional, Sequence, Union

import numpy as np
from scipy import stats

from . import analytics
from .adversary import choose_attacked_blocks, measure_resend
from .bell import Pairing
from .protocols import (
    BlockTranscript,
    Role,
    bb84_epr_baseline,
    pop_correct_pick_probability,
    pop_matching_probability,
    protocol1_run,
    protocol2_bob_measure,
    protocol2_prepare_block,
)

_P2_COLUMNS = 5
_Z95 = 1.959963984540054  # two-sided 95% normal quantile


class Protocol(Enum):
    P1 = "p1"
    P2 = "p2"
    BB84EPR = "bb84"
    POP = "pop"


@dataclass(frozen=True)
class CampaignConfig:
    protocol: Protocol
    n_blocks: int
    seed: int
    f: float = 0.0
    compare_fraction: float = 0.5
    pop_qubits: int = 4

    def __post_init__(self) -> None:
        if self.n_blocks < 1:
            raise ValueError("n_blocks must be >= 1")
        if not 0.0 <= self.f <= 1.0:
            raise ValueError(f"attack fraction must be in [0, 1], got {self.f}")
        if not 0.0 < self.compare_fraction <= 1.0:
            raise ValueError("compare_fraction must be in (0, 1]")
        if self.seed is None:
            raise ValueError("a seed is required; campaigns are reproducible by default")
        if self.protocol in (Protocol.P1, Protocol.BB84EPR) and self.f > 0.0:
            raise ValueError(
                f"no attack model is defined for {self.protocol.value}; use f=0"
            )
        if self.protocol is Protocol.POP:
            if self.pop_qubits < 4 or self.pop_qubits % 2:
                raise ValueError("pop_qubits must be even and >= 4")

    def to_dict(self) -> dict:
        return {
            "protocol": self.protocol.value,
            "n_blocks": self.n_blocks,
            "seed": self.seed,
            "f": self.f,
            "compare_fraction": self.compare_fraction,
            "pop_qubits": self.pop_qubits,
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "CampaignConfig":
        raw = dict(raw)
        protocol = raw.pop("protocol", "p2")
        known = {"n_blocks", "seed", "f", "compare_fraction", "pop_qubits"}
        unknown = set(raw) - known
        if unknown:
            raise ValueError(f"unknown campaign config keys: {sorted(unknown)}")
        if "n_blocks" not in raw or "seed" not in raw:
            raise ValueError("campaign config needs at least n_blocks and seed")
        return cls(protocol=Protocol(protocol), **raw)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "CampaignConfig":
        path = Path(path)
        if path.suffix == ".json":
            raw = json.loads(path.read_text())
        elif path.suffix == ".toml":
            try:
                import tomllib
            except ModuleNotFoundError:
                import tomli as tomllib
            raw = tomllib.loads(path.read_text())
        else:
            raise ValueError(f"config must be .json or .toml, got {path.suffix!r}")
        return cls.from_dict(raw)


@dataclass(frozen=True)
class Metric:
    """One estimated rate next to its analytic target.

    ``ci95`` is the Wald interval around the estimate; the WITHIN_CI /
    OUTSIDE_CI verdict bands the estimate at four null standard errors of
    the target, which is the acceptance band used throughout.
    """

    estimate: float
    target: float
    n: int
    se: float
    ci95: tuple[float, float]
    z: float
    verdict: str

    @classmethod
    def from_counts(cls, successes: int, n: int, target: float) -> "Metric":
        if n <= 0:
            raise ValueError("metric needs a positive sample count")
        p_hat = successes / n
        se_hat = math.sqrt(p_hat * (1.0 - p_hat) / n)
        se_null = math.sqrt(target * (1.0 - target) / n)
        z = _z_score(p_hat, target, se_null)
        return cls(
            estimate=p_hat,
            target=target,
            n=n,
            se=se_null,
            ci95=(p_hat - _Z95 * se_hat, p_hat + _Z95 * se_hat),
            z=z,
            verdict=_verdict(z),
        )

    def to_dict(self) -> dict:
        return {
            "estimate": self.estimate,
            "target": self.target,
            "n": self.n,
            "se": self.se,
            "ci95_lo": self.ci95[0],
            "ci95_hi": self.ci95[1],
            "z": self.z,
            "verdict": self.verdict,
        }


def _z_score(estimate: float, target: float, se: float) -> float:
    if se == 0.0:
        return 0.0 if estimate == target else math.inf
    return (estimate - target) / se


def _verdict(z: float) -> str:
    return "WITHIN_CI" if abs(z) <= 4.0 else "OUTSIDE_CI"


class MIEstimate(NamedTuple):
    bits_per_block: float
    bits_per_bit: float


def estimate_mutual_information(joint: np.ndarray) -> MIEstimate:
    """Plug-in mutual information of a (sender nibble, eavesdropper nibble)
    joint histogram, in bits per 4-bit block and per key bit.

    The plug-in estimator is biased upward on independent data; campaign
    sizes here keep that bias far below the reported tolerances.
    """
    joint = np.asarray(joint, dtype=float)
    total = joint.sum()
    if total <= 0:
        raise ValueError("joint histogram is empty")
    p = joint / total
    marginal_a = p.sum(axis=1, keepdims=True)
    marginal_e = p.sum(axis=0, keepdims=True)
    independent = marginal_a * marginal_e
    mask = p > 0
    bits = float((p[mask] * np.log2(p[mask] / independent[mask])).sum())
    return MIEstimate(bits_per_block=bits, bits_per_bit=bits / 4.0)


@dataclass
class AttackReport:
    """Aggregated campaign statistics, JSON-stable for a fixed config."""

    config: CampaignConfig
    metrics: dict[str, Metric]
    extras: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return _jsonable(
            {
                "config": self.config.to_dict(),
                "metrics": {name: m.to_dict() for name, m in self.metrics.items()},
                **self.extras,
            }
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    def write_json(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.write_text(self.to_json())
        return path


def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


# --------------------------------------------------------------------------
# Block-scheme engine
# --------------------------------------------------------------------------


def _p2_randomness(config: CampaignConfig):
    root = np.random.SeedSequence(config.seed)
    block_stream, campaign_stream = root.spawn(2)
    uniforms = np.random.Generator(np.random.Philox(block_stream)).random(
        (config.n_blocks, _P2_COLUMNS)
    )
    campaign_rng = np.random.Generator(np.random.Philox(campaign_stream))
    attacked = choose_attacked_blocks(config.n_blocks, config.f, campaign_rng)
    compared = np.zeros(config.n_blocks, dtype=bool)
    n_compared = round(config.compare_fraction * config.n_blocks)
    if n_compared:
        compared[campaign_rng.permutation(config.n_blocks)[:n_compared]] = True
    return uniforms, attacked, compared


class _P2Arrays(NamedTuple):
    alice_nibble: np.ndarray
    pairing_crossed: np.ndarray
    attacked: np.ndarray
    compared: np.ndarray
    guess_crossed: np.ndarray
    eve_nibble: np.ndarray
    bob_nibble: np.ndarray
    error: np.ndarray


def _run_p2_arrays(config: CampaignConfig) -> _P2Arrays:
    uniforms, attacked, compared = _p2_randomness(config)
    nibble = np.minimum((uniforms[:, 0] * 16.0).astype(np.int64), 15)
    pairing_crossed = uniforms[:, 1] >= 0.5
    guess_crossed = uniforms[:, 2] >= 0.5
    eve_selector = np.minimum((uniforms[:, 3] * 4.0).astype(np.int64), 3)
    bob_selector = np.minimum((uniforms[:, 4] * 4.0).astype(np.int64), 3)

    a = nibble >> 2
    b = nibble & 3
    flip_parity = (a >> 1) ^ (b >> 1)
    phase_parity = (a & 1) ^ (b & 1)

    def complement(first_label: np.ndarray) -> np.ndarray:
        return (((first_label >> 1) ^ flip_parity) << 1) | ((first_label & 1) ^ phase_parity)

    wrong_guess = attacked & (guess_crossed != pairing_crossed)
    eve_a = np.where(wrong_guess, eve_selector, a)
    eve_b = np.where(wrong_guess, complement(eve_selector), b)
    # A wrong-layout measurement commits the wire to the guessed layout, so
    # Bob's measurement in the true layout swaps again; parities are
    # conserved, so the same complement rule applies.
    bob_a = np.where(wrong_guess, bob_selector, a)
    bob_b = np.where(wrong_guess, complement(bob_selector), b)

    return _P2Arrays(
        alice_nibble=nibble,
        pairing_crossed=pairing_crossed,
        attacked=attacked,
        compared=compared,
        guess_crossed=guess_crossed,
        eve_nibble=(eve_a << 2) | eve_b,
        bob_nibble=(bob_a << 2) | bob_b,
        error=(bob_a != a) | (bob_b != b),
    )


def _run_p2_campaign(config: CampaignConfig) -> AttackReport:
    arrays = _run_p2_arrays(config)
    n = config.n_blocks
    attacked, compared, error = arrays.attacked, arrays.compared, arrays.error
    n_attacked = int(attacked.sum())
    n_compared = int(compared.sum())
    attacked_compared = attacked & compared
    n_attacked_compared = int(attacked_compared.sum())
    f_actual = n_attacked / n

    metrics: dict[str, Metric] = {}
    metrics["qber"] = Metric.from_counts(
        int((error & compared).sum()), n_compared, target=3.0 * config.f / 8.0
    )
    if n_attacked_compared:
        metrics["detection_rate"] = Metric.from_counts(
            int((error & attacked_compared).sum()),
            n_attacked_compared,
            target=float(analytics.DETECTION_RATE),
        )
    extras: dict = {
        "protocol": config.protocol.value,
        "counts": {
            "n_blocks": n,
            "n_attacked": n_attacked,
            "n_compared": n_compared,
            "n_attacked_compared": n_attacked_compared,
            "n_detected": int((error & compared).sum()),
            "n_errors_total": int(error.sum()),
        },
    }

    correct = arrays.eve_nibble == arrays.alice_nibble
    if n_attacked:
        n_correct = int((correct & attacked).sum())
        metrics["eve_accuracy"] = Metric.from_counts(
            n_correct, n_attacked, target=float(analytics.EVE_ACCURACY)
        )
        accuracy = metrics["eve_accuracy"]
        metrics["i_ae"] = Metric(
            estimate=f_actual * accuracy.estimate,
            target=analytics.eve_info(config.f),
            n=n_attacked,
            se=f_actual * accuracy.se,
            ci95=(f_actual * accuracy.ci95[0], f_actual * accuracy.ci95[1]),
            z=_z_score(
                f_actual * accuracy.estimate,
                analytics.eve_info(config.f),
                f_actual * accuracy.se,
            ),
            verdict=_verdict(
                _z_score(
                    f_actual * accuracy.estimate,
                    analytics.eve_info(config.f),
                    f_actual * accuracy.se,
                )
            ),
        )

        deviation = (arrays.eve_nibble >> 2) ^ (arrays.alice_nibble >> 2)
        histogram = np.bincount(deviation[attacked], minlength=4)
        expected = n_attacked * np.array([float(p) for p in analytics.EVE_OUTCOME_PROBS])
        chi2 = stats.chisquare(histogram, f_exp=expected)
        extras["eve_outcome_histogram"] = {
            "deviation_counts": histogram,
            "expected_counts": expected,
            "chi2_statistic": float(chi2.statistic),
            "p_value": float(chi2.pvalue),
            "pass_at_1pct": bool(chi2.pvalue >= 0.01),
        }

        joint = np.bincount(
            (arrays.alice_nibble[attacked] << 4) | arrays.eve_nibble[attacked],
            minlength=256,
        ).reshape(16, 16)
        mi = estimate_mutual_information(joint)
        extras["mutual_information"] = {
            "bits_per_block": mi.bits_per_block,
            "bits_per_bit": mi.bits_per_bit,
            "bits_per_bit_analytic": analytics.eve_channel_mi_per_bit(),
            "note": (
                "per-attacked-block Shannon MI; the i_ae metric uses the "
                "success-probability accounting, which is what the 5f/8 "
                "closed form counts"
            ),
        }
        extras["joint_histogram"] = joint
    else:
        extras["eve_outcome_histogram"] = {
            "deviation_counts": [0, 0, 0, 0],
            "expected_counts": [0, 0, 0, 0],
            "chi2_statistic": None,
            "p_value": None,
            "pass_at_1pct": None,
        }
        extras["mutual_information"] = None

    data_mask = ~compared
    n_data = int(data_mask.sum())
    data_agree = int(((arrays.bob_nibble == arrays.alice_nibble) & data_mask).sum())
    extras["key_agreement"] = {
        "data_blocks": n_data,
        "agreeing_blocks": data_agree,
        "exact": data_agree == n_data,
    }

    if "detection_rate" in metrics:
        detection = metrics["detection_rate"]
        claimed = float(analytics.CLAIMED_INCORRECT_RATE)
        z_claimed = _z_score(detection.estimate, claimed, detection.se)
        extras["claimed_rate_contrast"] = {
            "claimed_incorrect_rate": claimed,
            "corrected_rate": float(analytics.DETECTION_RATE),
            "z_vs_claimed": z_claimed,
            "claimed_within_ci": bool(detection.ci95[0] <= claimed <= detection.ci95[1]),
            "refuted": bool(abs(z_claimed) > 4.0),
        }

    return AttackReport(config=config, metrics=metrics, extras=extras)


def run_protocol2_blocks(config: CampaignConfig) -> list[BlockTranscript]:
    """Object-level replay of the block scheme on the same randomness as the
    vectorized engine, one transcript per block. Intended for moderate n and
    for JSONL export; campaigns aggregate with the array engine."""
    uniforms, attacked, compared = _p2_randomness(config)
    transcripts = []
    for i in range(config.n_blocks):
        u = uniforms[i]
        nibble = min(int(u[0] * 16.0), 15)
        bits = ((nibble >> 3) & 1, (nibble >> 2) & 1, (nibble >> 1) & 1, nibble & 1)
        pairing = Pairing.SEQUENTIAL if u[1] < 0.5 else Pairing.CROSSED
        role = Role.DECOY if compared[i] else Role.DATA
        block = protocol2_prepare_block(bits, pairing, role=role)
        wire = block.to_wire()

        eve_guess = None
        eve_outcome = None
        if attacked[i]:
            eve_guess = Pairing.SEQUENTIAL if u[2] < 0.5 else Pairing.CROSSED
            record, wire = measure_resend(wire, eve_guess, u=u[3], block_index=i)
            eve_outcome = record.outcome

        bob_outcome = protocol2_bob_measure(wire, pairing, u=u[4])
        detected = role is Role.DECOY and bob_outcome != block.alice_labels
        transcripts.append(
            BlockTranscript(
                block_index=i,
                block=block,
                eve_guess=eve_guess,
                eve_outcome=eve_outcome,
                bob_outcome=bob_outcome,
                detected=detected,
            )
        )
    return transcripts


# --------------------------------------------------------------------------
# Other protocol engines
# --------------------------------------------------------------------------


def run_protocol1(config: CampaignConfig):
    """Full-permutation run on a random key of 2 * n_blocks bits; the same
    randomness the campaign aggregates, exposed for transcript export."""
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(config.seed)))
    key = [int(b) for b in rng.integers(0, 2, size=2 * config.n_blocks)]
    return protocol1_run(key, rng, decoy_fraction=config.compare_fraction)


def _run_p1_campaign(config: CampaignConfig) -> AttackReport:
    result = run_protocol1(config)
    metrics = {
        "detection_rate": Metric.from_counts(
            result.n_detected, max(result.n_decoys, 1), target=0.0
        )
    }
    extras = {
        "protocol": config.protocol.value,
        "counts": {
            "n_pairs": config.n_blocks,
            "n_decoys": result.n_decoys,
            "n_detected": result.n_detected,
        },
        "key_agreement": {
            "key_bits": len(result.alice_key),
            "exact": result.keys_agree,
        },
    }
    return AttackReport(config=config, metrics=metrics, extras=extras)


def _run_bb84_campaign(config: CampaignConfig) -> AttackReport:
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(config.seed)))
    result = bb84_epr_baseline(config.n_blocks, rng)
    agree = int((result.alice_key == result.bob_key).sum()) if result.kept else 0
    metrics = {
        "kept_fraction": Metric.from_counts(result.kept, result.n_pairs, target=0.5),
    }
    if result.kept:
        metrics["kept_agreement"] = Metric.from_counts(agree, result.kept, target=1.0)
    extras = {
        "protocol": config.protocol.value,
        "counts": {
            "n_pairs": result.n_pairs,
            "n_kept": result.kept,
            "n_agreeing": agree,
            "n_detected": result.kept - agree,
        },
        "key_agreement": {"key_bits": result.kept, "exact": result.keys_agree},
    }
    return AttackReport(config=config, metrics=metrics, extras=extras)


def _run_pop_campaign(config: CampaignConfig) -> AttackReport:
    n, n_qubits = config.n_blocks, config.pop_qubits
    root = np.random.SeedSequence(config.seed)
    block_stream, campaign_stream = root.spawn(2)
    uniforms = np.random.Generator(np.random.Philox(block_stream)).random(
        (n, n_qubits + 2)
    )
    campaign_rng = np.random.Generator(np.random.Philox(campaign_stream))
    attacked = choose_attacked_blocks(n, config.f, campaign_rng)
    n_attacked = int(attacked.sum())

    # slot -> particle, one uniform permutation per sequence
    permutation = np.argsort(uniforms[:, :n_qubits], axis=1)
    pick1 = np.minimum((uniforms[:, n_qubits] * n_qubits).astype(np.int64), n_qubits - 1)
    pick2 = np.minimum(
        (uniforms[:, n_qubits + 1] * (n_qubits - 1)).astype(np.int64), n_qubits - 2
    )
    pick2 = pick2 + (pick2 >= pick1)  # uniform over the remaining slots

    particle1 = np.take_along_axis(permutation, pick1[:, None], axis=1)[:, 0]
    particle2 = np.take_along_axis(permutation, pick2[:, None], axis=1)[:, 0]
    pair_hit = (particle1 >> 1) == (particle2 >> 1)
    target_hit = pair_hit & ((particle1 >> 1) < 2)

    metrics: dict[str, Metric] = {}
    extras: dict = {
        "protocol": config.protocol.value,
        "counts": {
            "n_sequences": n,
            "n_qubits": n_qubits,
            "n_attacked": n_attacked,
            "n_pair_hits": int((pair_hit & attacked).sum()),
            "n_target_hits": int((target_hit & attacked).sum()),
        },
    }
    if n_attacked:
        f_actual = n_attacked / n
        metrics["pick_probability"] = Metric.from_counts(
            int((target_hit & attacked).sum()),
            n_attacked,
            target=float(pop_correct_pick_probability(n_qubits)),
        )
        metrics["matching_probability"] = Metric.from_counts(
            int((pair_hit & attacked).sum()),
            n_attacked,
            target=float(pop_matching_probability(n_qubits)),
        )
        metrics["disturbance_rate"] = Metric.from_counts(
            int((~pair_hit & attacked).sum()),
            n_attacked,
            target=1.0 - float(pop_matching_probability(n_qubits)),
        )
        pick = metrics["pick_probability"]
        target_info = float(analytics.pop_eve_info(config.f, n_qubits))
        scale = 1.25 * f_actual  # 5/4 bits credited per successful pick
        metrics["i_ae"] = Metric(
            estimate=scale * pick.estimate,
            target=target_info,
            n=pick.n,
            se=scale * pick.se,
            ci95=(scale * pick.ci95[0], scale * pick.ci95[1]),
            z=_z_score(scale * pick.estimate, target_info, scale * pick.se),
            verdict=_verdict(_z_score(scale * pick.estimate, target_info, scale * pick.se)),
        )
        extras["note"] = (
            "pick_probability targets the two pairs of the attacked 4-bit "
            "block, 2/C(N,2); matching_probability is the chance any "
            "entangled pair was picked, 1/(N-1); they coincide only at N=4"
        )
    return AttackReport(config=config, metrics=metrics, extras=extras)


def run_campaign(config: CampaignConfig) -> AttackReport:
    """Run one campaign; deterministic given the config (seed included)."""
    runner = {
        Protocol.P1: _run_p1_campaign,
        Protocol.P2: _run_p2_campaign,
        Protocol.BB84EPR: _run_bb84_campaign,
        Protocol.POP: _run_pop_campaign,
    }[config.protocol]
    return runner(config)


# --------------------------------------------------------------------------
# Parameter sweeps
# --------------------------------------------------------------------------

SWEEP_CSV_HEADER = "param,detection_rate,ci_lo,ci_hi,eve_acc,i_ae_emp,i_ae_analytic,qber"


@dataclass
class SweepPoint:
    value: float
    report: AttackReport

    def csv_row(self) -> str:
        metrics = self.report.metrics
        config = self.report.config
        if config.protocol is Protocol.P2:
            rate = metrics.get("detection_rate")
            eve_acc = metrics.get("eve_accuracy")
            i_ae = metrics.get("i_ae")
            qber = metrics["qber"]
            qber_text = f"{qber.estimate:.6f}"
            i_ae_target = analytics.eve_info(config.f)
        else:  # PoP rows: disturbance plays the detection role, no QBER model
            rate = metrics.get("disturbance_rate")
            eve_acc = metrics.get("pick_probability")
            i_ae = metrics.get("i_ae")
            qber_text = ""
            i_ae_target = float(analytics.pop_eve_info(config.f, config.pop_qubits))
        cells = [
            _format_param(self.value),
            f"{rate.estimate:.6f}" if rate else "",
            f"{rate.ci95[0]:.6f}" if rate else "",
            f"{rate.ci95[1]:.6f}" if rate else "",
            f"{eve_acc.estimate:.6f}" if eve_acc else "",
            f"{i_ae.estimate:.6f}" if i_ae else "",
            f"{i_ae_target:.6f}",
            qber_text,
        ]
        return ",".join(cells)


def _format_param(value: float) -> str:
    if float(value).is_integer():
        return str(int(value))
    return f"{value:g}"


@dataclass
class SweepResult:
    param: str
    points: list[SweepPoint]

    def csv_lines(self) -> list[str]:
        return [SWEEP_CSV_HEADER] + [point.csv_row() for point in self.points]

    def write_csv(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.write_text("\n".join(self.csv_lines()) + "\n")
        return path


def _point_seed(master_seed: int, index: int) -> int:
    return int(np.random.SeedSequence([master_seed, index]).generate_state(1)[0])


def sweep(base: CampaignConfig, param: str, values: Sequence[float]) -> SweepResult:
    """Run one campaign per grid value of ``param`` ('f' or 'pop_qubits'),
    each on its own derived seed."""
    if param not in ("f", "pop_qubits"):
        raise ValueError(f"sweep parameter must be 'f' or 'pop_qubits', got {param!r}")
    if len(values) == 0:
        raise ValueError("sweep grid is empty")
    if param == "pop_qubits" and base.protocol is not Protocol.POP:
        raise ValueError("pop_qubits sweeps require the pop protocol")
    points = []
    for index, value in enumerate(values):
        raw = base.to_dict()
        raw[param] = int(value) if param == "pop_qubits" else float(value)
        raw["seed"] = _point_seed(base.seed, index)
        config = CampaignConfig.from_dict(raw)
        points.append(SweepPoint(value=float(value), report=run_campaign(config)))
    return SweepResult(param=param, points=points)
