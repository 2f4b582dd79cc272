"""Прогон набора инвариантов с замером времени."""

from __future__ import annotations

import logging
import time
from collections.abc import Sequence
from dataclasses import dataclass

from beartype import beartype

from src.errors import FusionKitError
from src.utils.config_loader import KitConfig
from src.verify.cases import CASES, InvariantCase

logger = logging.getLogger(__name__)


@beartype
@dataclass(frozen=True)
class CaseResult:
    """Итог одного случая."""

    case_id: str
    module: str
    passed: bool
    elapsed: float
    detail: str


@beartype
def run_case(case: InvariantCase, level_max: int, settings: KitConfig) -> CaseResult:
    """Выполнить случай; ошибки пакета считаются провалом с текстом ошибки."""
    started = time.perf_counter()
    try:
        passed, detail = case.check(level_max, settings)
    except FusionKitError as e:
        passed, detail = False, f"{type(e).__name__}: {e}"
    elapsed = time.perf_counter() - started
    if passed:
        logger.info(f"[OK] {case.id} ({elapsed:.2f}s)")
    else:
        logger.warning(f"[FAIL] {case.id}: {detail}")
    return CaseResult(case.id, case.module, passed, elapsed, detail)


@beartype
def select_cases(pattern: str | None = None, cases: Sequence[InvariantCase] = CASES) -> list[InvariantCase]:
    """Случаи, чьё имя содержит pattern (все, если pattern пуст)."""
    if not pattern:
        return list(cases)
    return [case for case in cases if pattern in case.id]


@beartype
def run_suite(
    level_max: int,
    settings: KitConfig,
    cases: Sequence[InvariantCase] = CASES,
) -> list[CaseResult]:
    """Прогнать случаи по порядку.

    Args:
        level_max: Верхняя граница уровней ℓ в переборах
        settings: Допуски и размеры переборов
        cases: Случаи для прогона

    Returns:
        list[CaseResult]: Результаты в порядке случаев
    """
    logger.info(f"Running {len(cases)} invariant cases up to level {level_max}")
    results = [run_case(case, level_max, settings) for case in cases]
    failed = sum(1 for r in results if not r.passed)
    if failed:
        logger.warning(f"[WARNING] {failed} of {len(results)} cases failed")
    else:
        logger.info(f"[OK] All {len(results)} cases passed")
    return results
