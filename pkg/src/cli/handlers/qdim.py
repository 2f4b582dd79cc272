"""Команда qdim: квантовые размерности по формуле и по Перрону-Фробениусу."""

from __future__ import annotations

import argparse
from typing import Any

from beartype import beartype

from src.cli.formatting import OutputRecord
from src.cli.parsing import format_parent, parse_level
from src.fields.catalog import CHARGES, parse_charge
from src.fusion.ring import build_ns_ring
from src.kac.labels import Level, NSLabel, alpha_label, beta_label, enumerate_ns_basis, vacuum_label
from src.qdim.dimensions import pf_dims, qdim_ns, verify_multiplicativity
from src.utils.config_loader import KitConfig

MODES = ("closed", "pf", "both")


@beartype
def register(subparsers: Any) -> None:
    """Зарегистрировать команду qdim."""
    parser = subparsers.add_parser("qdim", parents=[format_parent()], help="Квантовые размерности T_m")
    parser.add_argument("--level", type=int, required=True, help="Уровень ℓ")
    parser.add_argument("--mode", choices=MODES, default="both", help="Способ вычисления")
    parser.add_argument("--generator", choices=CHARGES, default="alpha", help="Генератор для Перрона-Фробениуса")
    parser.set_defaults(handler=handle)


@beartype
def generator_for(level: Level, charge: str) -> NSLabel:
    """Класс генератора; при ℓ = 0 кольцо тривиально и генератор — вакуум."""
    if level.ell == 0:
        return vacuum_label(level)
    return alpha_label(level) if parse_charge(charge) == "alpha" else beta_label(level)


@beartype
def handle(args: argparse.Namespace, settings: KitConfig) -> OutputRecord:
    """Посчитать размерности выбранным способом и сравнить при --mode both."""
    level = parse_level(args.level)
    ring = build_ns_ring(level)
    generator = generator_for(level, args.generator)
    want_closed = args.mode in ("closed", "both")
    want_pf = args.mode in ("pf", "both")

    pf = (
        pf_dims(
            ring,
            generator,
            tolerance=settings.convergence_tol,
            max_iterations=settings.power_iterations,
        )
        if want_pf
        else None
    )
    rows = []
    worst = 0.0
    for label in enumerate_ns_basis(level):
        row: dict[str, Any] = {"class": label}
        if want_closed:
            row["closed"] = qdim_ns(label)
        if pf is not None:
            row["pf"] = pf[label]
        if want_closed and pf is not None:
            diff = abs(row["closed"] - row["pf"])
            row["diff"] = diff
            worst = max(worst, diff)
        rows.append(row)

    checks: dict[str, bool] = {}
    tolerances: dict[str, float] = {}
    if pf is not None:
        tolerances["convergence"] = settings.convergence_tol
        checks["multiplicative"] = verify_multiplicativity(ring, pf)
    if want_closed and pf is not None:
        tolerances["acceptance"] = settings.acceptance_tol
        checks["closed_matches_pf"] = worst <= settings.acceptance_tol
    return OutputRecord(
        command="qdim",
        inputs={"level": level.ell, "mode": args.mode, "generator": generator},
        results=rows,
        tolerances=tolerances,
        checks=checks,
    )
