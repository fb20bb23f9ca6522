"""
permeq/cli/survey.py

Survey of S_n: one row per cycle type, comparing the A1/A2 verdicts of
the canonical representative against its true solution count.

Rows are computed independently (joblib, partition of n as the key) and
assembled in partition order, so the written file is byte-identical for
any worker count.
"""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import structlog
from joblib import Parallel, delayed

from permeq.analysis.cycles import CycleType, partitions
from permeq.certify.certifier import certify_a1, certify_a2
from permeq.config import get_settings
from permeq.exceptions import InputError
from permeq.models.schemas.survey import SURVEY_COLUMNS, SurveyRow
from permeq.search.enumerator import check_guard, enumerate_pruned, resolve_workers

logger = structlog.get_logger(__name__)

SURVEY_FORMATS = ("json", "csv")


def survey_row(parts: tuple[int, ...], guard: int) -> SurveyRow:
    ctype = CycleType.from_partition(parts)
    alpha = ctype.representative()
    result = enumerate_pruned(alpha, guard=guard, workers=1)
    return SurveyRow.from_domain(ctype, certify_a1(alpha), certify_a2(alpha), result)


def run_survey(n: int, *, workers: int | None = None, guard: int | None = None) -> list[SurveyRow]:
    """Rows for every partition of n, in partition order.

    Raises:
        GuardExceededError: n exceeds the pruned guard.
    """
    if n < 1:
        raise InputError(f"n must be at least 1, got {n}.")
    limit = guard if guard is not None else get_settings().pruned_guard
    check_guard("pruned", n, limit, "The survey runs the pruned enumerator on every type.")
    n_jobs = resolve_workers(workers)

    rows: list[SurveyRow] = Parallel(n_jobs=n_jobs)(
        delayed(survey_row)(parts, limit) for parts in partitions(n)
    )
    logger.info(
        "survey_complete",
        n=n,
        rows=len(rows),
        certified=sum(1 for r in rows if "OnlyTrivial" in (r.cert_a1, r.cert_a2)),
        nontrivial=sum(1 for r in rows if r.solution_count > 1),
    )
    return rows


def dump_survey(rows: list[SurveyRow], fmt: str = "json") -> str:
    if fmt == "json":
        payload = [row.model_dump(mode="json") for row in rows]
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(SURVEY_COLUMNS)
        writer.writerows(row.csv_record() for row in rows)
        return buffer.getvalue()
    supported = ", ".join(SURVEY_FORMATS)
    raise InputError(f"Unknown survey format '{fmt}'. Supported: {supported}")


def write_survey(rows: list[SurveyRow], path: Path, fmt: str = "json") -> None:
    text = dump_survey(rows, fmt)
    try:
        path.write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise InputError(f"Cannot write survey to {path}: {exc.strerror or exc}") from exc
