"""Команда braid: матрица переноса фуксовой системы из файла и её двойственность."""

from __future__ import annotations

import argparse
import dataclasses
from pathlib import Path
from typing import Any

from beartype import beartype

from src.cli.formatting import OutputRecord
from src.cli.parsing import format_parent
from src.fuchsian.system import FuchsianSystem
from src.fuchsian.system_loader import load_system, transport_to_json
from src.fuchsian.transport import contragredient_check, monodromy_check, transport_matrix
from src.utils.config_loader import KitConfig

CHECKS = ("transport", "duality")


@beartype
def register(subparsers: Any) -> None:
    """Зарегистрировать команду braid."""
    parser = subparsers.add_parser("braid", parents=[format_parent()], help="Перенос и двойственность")
    parser.add_argument("--system", required=True, help="JSON-файл {n, P, Q, series_order?, path?}")
    parser.add_argument("--check", choices=CHECKS, default="transport", help="Что проверять")
    parser.set_defaults(handler=handle)


@beartype
def load_with_settings(path: str, settings: KitConfig) -> FuchsianSystem:
    """Система из файла с допусками из настроек."""
    system = load_system(path)
    return dataclasses.replace(
        system,
        ode_tol=settings.ode_tol,
        match_tol=settings.match_tol,
        label=Path(path).stem,
    )


@beartype
def handle(args: argparse.Namespace, settings: KitConfig) -> OutputRecord:
    """Посчитать c (или двойственность) для системы из файла."""
    system = load_with_settings(args.system, settings)
    inputs = {"system": args.system, "n": system.n, "check": args.check}

    if args.check == "duality":
        report = contragredient_check(
            system,
            pairing_tol=settings.match_tol,
            transport_tol=settings.duality_tol,
        )
        return OutputRecord(
            command="braid",
            inputs=inputs,
            results=[dataclasses.asdict(report)],
            tolerances={"pairing": settings.match_tol, "duality": settings.duality_tol},
            checks={"duality": report.passed},
            notes={"duality": f"transport error {report.transport_error:.3e}"},
        )

    transport = transport_matrix(system)
    return OutputRecord(
        command="braid",
        inputs=inputs,
        results=[transport_to_json(transport)],
        tolerances={"ode": settings.ode_tol, "match": settings.match_tol},
        checks={
            "overlap": transport.overlap_residual <= settings.match_tol,
            "monodromy": monodromy_check(system),
        },
        notes={"overlap": f"overlap residual {transport.overlap_residual:.3e}"},
    )
