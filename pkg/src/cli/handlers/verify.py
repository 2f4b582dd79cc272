"""Команда verify: весь набор инвариантов."""

from __future__ import annotations

import argparse
from typing import Any

from beartype import beartype

from src.cli.formatting import OutputRecord
from src.cli.parsing import format_parent
from src.errors import DomainError
from src.utils.config_loader import KitConfig
from src.verify.runner import run_suite, select_cases


@beartype
def register(subparsers: Any) -> None:
    """Зарегистрировать команду verify."""
    parser = subparsers.add_parser("verify", parents=[format_parent()], help="Прогон всех инвариантов")
    parser.add_argument("--level-max", type=int, default=6, help="Наибольший уровень ℓ в переборах")
    parser.add_argument("--select", default=None, help="Только случаи, чьё имя содержит строку")
    parser.add_argument("--timings", action="store_true", help="Добавить время выполнения в вывод")
    parser.set_defaults(handler=handle)


@beartype
def handle(args: argparse.Namespace, settings: KitConfig) -> OutputRecord:
    """Прогнать выбранные случаи; время выводится только с --timings."""
    if args.level_max < 0:
        raise DomainError(f"--level-max must be nonnegative, got {args.level_max}")
    cases = select_cases(args.select)
    if not cases:
        raise DomainError(f"No invariant case matches '{args.select}'")
    results = run_suite(args.level_max, settings, cases)

    rows = []
    for result in results:
        row: dict[str, Any] = {
            "case": result.case_id,
            "module": result.module,
            "passed": result.passed,
        }
        if args.timings:
            row["elapsed"] = result.elapsed
        rows.append(row)
    return OutputRecord(
        command="verify",
        inputs={"level_max": args.level_max, "select": args.select},
        results=rows,
        tolerances={
            "acceptance": settings.acceptance_tol,
            "convergence": settings.convergence_tol,
            "ode": settings.ode_tol,
            "match": settings.match_tol,
            "subspace": settings.subspace_tol,
            "duality": settings.duality_tol,
        },
        checks={result.case_id: result.passed for result in results},
        notes={result.case_id: result.detail for result in results if not result.passed},
    )
