"""Команда kac: таблица Каца сектора NS с классами идентификации."""

from __future__ import annotations

import argparse
from typing import Any

from beartype import beartype

from src.cli.formatting import OutputRecord
from src.cli.parsing import format_parent, parse_level
from src.errors import DomainError
from src.kac.labels import KacLabel, Level
from src.kac.weights import h_ns, kac_table
from src.utils.config_loader import KitConfig


@beartype
def register(subparsers: Any) -> None:
    """Зарегистрировать команду kac."""
    parser = subparsers.add_parser(
        "kac",
        parents=[format_parent()],
        help="Таблица Каца с точными весами",
    )
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--m", type=int, help="Параметр серии m ≥ 2")
    group.add_argument("--level", type=int, help="Уровень ℓ = m − 2")
    parser.set_defaults(handler=handle)


@beartype
def resolve_level(args: argparse.Namespace) -> Level:
    """Уровень из --m или --level.

    Raises:
        DomainError: Если m < 2 или ℓ < 0
    """
    if args.m is not None:
        if args.m < 2:
            raise DomainError(f"--m must be at least 2, got {args.m}")
        return Level(args.m - 2)
    return parse_level(args.level)


@beartype
def handle(args: argparse.Namespace, settings: KitConfig) -> OutputRecord:
    """Построить таблицу и проверить симметрию h_pq = h_{m−p,m+2−q}."""
    level = resolve_level(args)
    rows = []
    symmetric = True
    for entry in kac_table(level):
        kac = KacLabel(entry.p, entry.q, level.m)
        symmetric = symmetric and h_ns(kac.mirror()) == entry.h
        rows.append(
            {
                "p": entry.p,
                "q": entry.q,
                "label": entry.label,
                "h": entry.h,
                "class": entry.canonical,
                "canonical": entry.is_canonical,
            }
        )
    return OutputRecord(
        command="kac",
        inputs={"level": level.ell, "m": level.m},
        results=rows,
        checks={"identification_symmetric": symmetric},
    )
