from .capacity import capacity_entropy_oracle, check_capacity_colluding, check_capacity_standard
from .correctness import check_correctness, decoding_matrix
from .crosscheck import rank_entropy_crosscheck
from .privacy import check_privacy_colluding, check_privacy_standard, posterior, query_counts
from .report import (
    CapacityResult,
    CapacityWitness,
    CorrectnessResult,
    CorrectnessWitness,
    CrosscheckResult,
    CrosscheckWitness,
    PrivacyResult,
    PrivacyWitness,
    SectionError,
    Skipped,
    VerificationReport,
    render_report,
)
from .runner import full_report

__all__ = (
    "CapacityResult",
    "CapacityWitness",
    "CorrectnessResult",
    "CorrectnessWitness",
    "CrosscheckResult",
    "CrosscheckWitness",
    "PrivacyResult",
    "PrivacyWitness",
    "SectionError",
    "Skipped",
    "VerificationReport",
    "capacity_entropy_oracle",
    "check_capacity_colluding",
    "check_capacity_standard",
    "check_correctness",
    "check_privacy_colluding",
    "check_privacy_standard",
    "decoding_matrix",
    "full_report",
    "posterior",
    "query_counts",
    "rank_entropy_crosscheck",
    "render_report",
)
