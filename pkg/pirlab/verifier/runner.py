import asyncio
import logging
from typing import Any, Callable, Iterable, TypeVar

from aiojobs import Scheduler

from pirlab.config import Config, load_config
from pirlab.exceptions import BudgetExceeded
from pirlab.scheme import RateResult, SchemeTable, rate_exact

from .capacity import check_capacity_colluding, check_capacity_standard
from .correctness import check_correctness
from .crosscheck import rank_entropy_crosscheck
from .privacy import check_privacy_colluding, check_privacy_standard
from .report import SectionError, Skipped, VerificationReport

logger = logging.getLogger(__name__)

_T = TypeVar("_T")


async def _run_section(name: str, compute: Callable[[], _T]) -> _T | SectionError:
    try:
        return await asyncio.to_thread(compute)
    except Exception as exc:
        logger.exception("Report section %s failed", name)
        return SectionError.from_exception(exc)


async def _run_rate(table: SchemeTable, budget: int | None) -> RateResult | Skipped | SectionError:
    try:
        return await asyncio.to_thread(rate_exact, table, budget=budget)
    except BudgetExceeded as exc:
        logger.warning("Rate skipped: %s", exc)
        return Skipped("budget")
    except Exception as exc:
        logger.exception("Report section rate failed")
        return SectionError.from_exception(exc)


async def full_report(
    table: SchemeTable,
    collusions: Iterable[int] = (),
    *,
    crosscheck: bool = False,
    budget: int | None = None,
    config: Config | None = None,
) -> VerificationReport:
    """
    Run every check on ``table`` and collect the verdicts.

    Sections run as jobs on an :class:`aiojobs.Scheduler`, each in a worker thread. An
    exception inside a section is recorded on that section; the rest of the report is
    still produced.

    Args:
        table (SchemeTable): scheme to verify
        collusions (Iterable[int]): collusion sizes for the colluding privacy and capacity checks
        crosscheck (bool): also compare enumerated entropies with query ranks
        budget (int | None): enumeration budget for the rate and the crosscheck
        config (Config | None): verifier scheduling and limits; loaded from the environment when omitted
    """
    config = config or load_config()
    limit = budget if budget is not None else config.enumeration.budget
    subset_limit = config.enumeration.subset_limit
    sizes = sorted(set(collusions))

    logger.info(
        "Creating scheduler: concurrency=%s, pending=%s, close_timeout=%s",
        config.verifier.concurrency,
        config.verifier.pending,
        config.verifier.close_timeout,
    )
    scheduler = Scheduler(
        limit=config.verifier.concurrency,
        pending_limit=config.verifier.pending,
        close_timeout=config.verifier.close_timeout,
    )

    jobs: dict[str, Any] = {}
    try:
        jobs["correctness"] = await scheduler.spawn(_run_section("correctness", lambda: check_correctness(table)))
        jobs["privacy"] = await scheduler.spawn(_run_section("privacy", lambda: check_privacy_standard(table)))
        jobs["capacity"] = await scheduler.spawn(
            _run_section("capacity", lambda: check_capacity_standard(table, subset_limit=subset_limit)),
        )
        for t in sizes:
            jobs[f"privacy[{t}]"] = await scheduler.spawn(
                _run_section(f"privacy T={t}", lambda t=t: check_privacy_colluding(table, t)),
            )
            if t < table.params.servers:
                jobs[f"capacity[{t}]"] = await scheduler.spawn(
                    _run_section(
                        f"capacity T={t}",
                        lambda t=t: check_capacity_colluding(table, t, subset_limit=subset_limit),
                    ),
                )
        jobs["rate"] = await scheduler.spawn(_run_rate(table, limit))
        if crosscheck:
            jobs["crosscheck"] = await scheduler.spawn(
                _run_section("crosscheck", lambda: rank_entropy_crosscheck(table, budget=limit)),
            )

        results = {name: await job.wait() for name, job in jobs.items()}
    finally:
        await scheduler.close()

    report = VerificationReport(
        params=table.params,
        key_count=table.key_count,
        correctness=results["correctness"],
        privacy_standard=results["privacy"],
        capacity_standard=results["capacity"],
        privacy_colluding={t: results[f"privacy[{t}]"] for t in sizes},
        capacity_colluding={t: results[f"capacity[{t}]"] for t in sizes if f"capacity[{t}]" in results},
        rate=results["rate"],
        crosscheck=results.get("crosscheck"),
    )
    logger.info("Report finished: %s", "pass" if report.passed else "fail")
    return report
