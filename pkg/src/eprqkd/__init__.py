"""EPR-based QKD lab: exact Bell-regrouping algebra, measure-resend attack
campaigns, and the security analytics they feed."""

from .bell import (
    BellLabel,
    Decomposition,
    PairProduct,
    Pairing,
    Pauli,
    bell_from_bits,
    bits_from_bell,
    measurement_distribution,
    pauli_encode,
    swap_decompose,
)
from .harness import AttackReport, CampaignConfig, Protocol, run_campaign, sweep

__version__ = "0.1.0"

__all__ = [
    "AttackReport",
    "BellLabel",
    "CampaignConfig",
    "Decomposition",
    "PairProduct",
    "Pairing",
    "Pauli",
    "Protocol",
    "bell_from_bits",
    "bits_from_bell",
    "measurement_distribution",
    "pauli_encode",
    "run_campaign",
    "swap_decompose",
    "sweep",
    "__version__",
]
