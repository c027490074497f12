from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Mapping

from pirlab._helpers.text import format_indices, format_row, format_rows
from pirlab.matrix import FpMatrix
from pirlab.scheme import RateResult, SchemeParams
from pirlab.types import Observation

REPORT_MAGIC = "pir-report v1"

CapacityCondition = Literal["aligned-interference", "independent-answers"]


@dataclass(slots=True, frozen=True)
class CorrectnessWitness:
    """
    Args:
        message_index (int): 1-based m of the failing realization
        key (int): key f of the failing realization
        sub_symbol (int): 1-based row of ``[O | E | O]`` outside the row space of the query
    """

    message_index: int
    key: int
    sub_symbol: int


@dataclass(slots=True, frozen=True)
class PrivacyWitness:
    """
    Args:
        servers (tuple[int, ...]): colluding servers
        observation (Observation): query rows they received
        counts (tuple[int, ...]): number of keys producing the observation, per message index
        total (int): realizations (m, f) over every message index producing the observation
    """

    servers: tuple[int, ...]
    observation: Observation
    counts: tuple[int, ...]
    total: int


@dataclass(slots=True, frozen=True)
class CapacityWitness:
    """
    Args:
        message_index (int): 1-based m of the failing realization
        key (int): key f of the failing realization
        condition (CapacityCondition): which equality broke
        servers (tuple[int, ...]): servers summed on the right-hand side
        blocks (tuple[int, ...]): message blocks the query columns were restricted to
        lhs (Fraction): value for all servers jointly
        rhs (Fraction): value the condition requires
    """

    message_index: int
    key: int
    condition: CapacityCondition
    servers: tuple[int, ...]
    blocks: tuple[int, ...]
    lhs: Fraction
    rhs: Fraction


@dataclass(slots=True, frozen=True)
class CrosscheckWitness:
    message_index: int
    key: int
    server: int
    known: tuple[int, ...]
    entropy: Fraction
    rank: int


@dataclass(slots=True, frozen=True)
class CorrectnessResult:
    passed: bool
    decoders: Mapping[tuple[int, int], FpMatrix] = field(default_factory=dict)
    witness: CorrectnessWitness | None = None


@dataclass(slots=True, frozen=True)
class PrivacyResult:
    """
    Args:
        passed (bool): every coalition saw every realized query equally often for each m
        collusion (int): coalition size T
        classes (tuple[tuple[int, int], ...]): distinct (keys per index, total realizations) pairs
            over every coalition and observed query; filled when the check passes
        witness (PrivacyWitness | None): first distinguishing observation
    """

    passed: bool
    collusion: int
    classes: tuple[tuple[int, int], ...] = ()
    witness: PrivacyWitness | None = None


@dataclass(slots=True, frozen=True)
class CapacityResult:
    passed: bool
    witness: CapacityWitness | None = None


@dataclass(slots=True, frozen=True)
class CrosscheckResult:
    passed: bool
    witness: CrosscheckWitness | None = None


@dataclass(slots=True, frozen=True)
class SectionError:
    "An exception raised while computing one report section."

    kind: str
    message: str

    @classmethod
    def from_exception(cls, exc: BaseException) -> "SectionError":
        return cls(type(exc).__name__, str(exc))


@dataclass(slots=True, frozen=True)
class Skipped:
    reason: str


@dataclass(slots=True, frozen=True)
class VerificationReport:
    """
    Verdicts of every check run on one scheme table.

    ``passed`` covers correctness, standard privacy and capacity, every requested
    collusion size and the crosscheck when it ran; the rate is informational.
    """

    params: SchemeParams
    key_count: int
    correctness: CorrectnessResult | SectionError
    privacy_standard: PrivacyResult | SectionError
    capacity_standard: CapacityResult | SectionError
    privacy_colluding: Mapping[int, PrivacyResult | SectionError] = field(default_factory=dict)
    capacity_colluding: Mapping[int, CapacityResult | SectionError] = field(default_factory=dict)
    rate: RateResult | Skipped | SectionError = Skipped("not requested")
    crosscheck: CrosscheckResult | SectionError | None = None

    @property
    def passed(self) -> bool:
        sections: list[object] = [self.correctness, self.privacy_standard, self.capacity_standard]
        sections.extend(self.privacy_colluding.values())
        sections.extend(self.capacity_colluding.values())
        if self.crosscheck is not None:
            sections.append(self.crosscheck)

        return all(
            isinstance(section, (CorrectnessResult, PrivacyResult, CapacityResult, CrosscheckResult))
            and section.passed
            for section in sections
        )


def _verdict(name: str, section: object) -> list[str]:
    if isinstance(section, SectionError):
        return [f"{name}: error ({section.kind}: {section.message})"]

    assert isinstance(section, (CorrectnessResult, PrivacyResult, CapacityResult, CrosscheckResult))
    if section.passed:
        lines = [f"{name}: pass"]
        if isinstance(section, PrivacyResult):
            lines += [f"  per-index: {count} total: {total}" for count, total in section.classes]
        return lines

    lines = [f"{name}: fail"]
    match section.witness:
        case CorrectnessWitness() as w:
            lines += [f"  m: {w.message_index}", f"  f: {w.key}", f"  sub-symbol: {w.sub_symbol}"]
        case PrivacyWitness() as w:
            lines.append(f"  servers: {format_indices(w.servers)}")
            lines += [f"  query[{j}]: {format_rows(rows)}" for j, rows in zip(w.servers, w.observation, strict=True)]
            lines += [f"  counts: {format_row(w.counts)}", f"  total: {w.total}"]
        case CapacityWitness() as w:
            lines += [
                f"  m: {w.message_index}",
                f"  f: {w.key}",
                f"  condition: {w.condition}",
                f"  servers: {format_indices(w.servers)}",
                f"  blocks: {format_indices(w.blocks)}",
                f"  lhs: {w.lhs}",
                f"  rhs: {w.rhs}",
            ]
        case CrosscheckWitness() as w:
            lines += [
                f"  m: {w.message_index}",
                f"  f: {w.key}",
                f"  server: {w.server}",
                f"  known: {format_indices(w.known)}",
                f"  entropy: {w.entropy}",
                f"  rank: {w.rank}",
            ]

    return lines


def render_report(report: VerificationReport) -> str:
    "Plain-text report with a stable section order."
    lines = [
        REPORT_MAGIC,
        f"scheme: {report.params.describe()} keys={report.key_count}",
        "[standard]",
        *_verdict("correctness", report.correctness),
        *_verdict("privacy", report.privacy_standard),
        *_verdict("capacity", report.capacity_standard),
    ]

    for collusion in sorted(set(report.privacy_colluding) | set(report.capacity_colluding)):
        lines.append(f"[colluding T={collusion}]")
        if collusion in report.privacy_colluding:
            lines += _verdict("privacy", report.privacy_colluding[collusion])
        if collusion in report.capacity_colluding:
            lines += _verdict("capacity", report.capacity_colluding[collusion])

    lines.append("[rate]")
    match report.rate:
        case RateResult() as rate:
            lines += [
                f"rate: {rate.rate}",
                f"capacity: {rate.capacity}",
                f"achieves: {'yes' if rate.achieves else 'no'}",
            ]
            lines += [f"download[m={m}]: {d}" for m, d in enumerate(rate.per_m_download, start=1)]
        case Skipped(reason=reason):
            lines.append(f"rate: skipped ({reason})")
        case SectionError() as error:
            lines.append(f"rate: error ({error.kind}: {error.message})")

    if report.crosscheck is not None:
        lines += ["[crosscheck]", *_verdict("rank-entropy", report.crosscheck)]

    return "\n".join(lines) + "\n"
