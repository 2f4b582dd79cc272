"""Команда index: индекс подфактора d(x)²."""

from __future__ import annotations

import argparse
from typing import Any

from beartype import beartype

from src.cli.formatting import OutputRecord
from src.cli.parsing import format_parent, parse_label, parse_level
from src.kac.labels import canonicalize
from src.qdim.dimensions import jones_admissible, qdim_ns, subfactor_index
from src.utils.config_loader import KitConfig


@beartype
def register(subparsers: Any) -> None:
    """Зарегистрировать команду index."""
    parser = subparsers.add_parser("index", parents=[format_parent()], help="Индекс подфактора класса")
    parser.add_argument("--level", type=int, required=True, help="Уровень ℓ")
    parser.add_argument("--label", required=True, help="Метка: 2i,2i' или i,i'")
    parser.set_defaults(handler=handle)


@beartype
def handle(args: argparse.Namespace, settings: KitConfig) -> OutputRecord:
    """Индекс и признак попадания в ряд Джонса (только для отчёта)."""
    level = parse_level(args.level)
    label = parse_label(args.label, level)
    value = subfactor_index(label)
    return OutputRecord(
        command="index",
        inputs={"level": level.ell, "label": label},
        results=[
            {
                "class": canonicalize(label),
                "qdim": qdim_ns(label),
                "index": value,
                "jones_admissible": jones_admissible(value),
            }
        ],
    )
