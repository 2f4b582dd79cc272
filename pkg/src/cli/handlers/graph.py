"""Команда graph: граф G_α или G_β на классах и расстояния от вакуума."""

from __future__ import annotations

import argparse
from typing import Any

import networkx as nx
from beartype import beartype

from src.cli.formatting import OutputRecord
from src.cli.parsing import format_parent, parse_level
from src.fields.catalog import CHARGES, field_graph, parse_charge, vacuum_distance
from src.kac.labels import enumerate_ns_basis
from src.utils.config_loader import KitConfig


@beartype
def register(subparsers: Any) -> None:
    """Зарегистрировать команду graph."""
    parser = subparsers.add_parser("graph", parents=[format_parent()], help="Граф слабого генератора")
    parser.add_argument("--level", type=int, required=True, help="Уровень ℓ")
    parser.add_argument("--charge", choices=CHARGES, default="alpha", help="Вид заряда")
    parser.add_argument("--check-connected", action="store_true", help="Считать несвязность провалом")
    parser.set_defaults(handler=handle)


@beartype
def handle(args: argparse.Namespace, settings: KitConfig) -> OutputRecord:
    """Соседи каждого класса и расстояние от вакуума (None для недостижимых)."""
    level = parse_level(args.level)
    charge = parse_charge(args.charge)
    graph = field_graph(level, charge)
    distance = vacuum_distance(level, charge)
    rows = [
        {
            "class": x,
            "neighbors": sorted(graph.neighbors(x), key=lambda y: y.doubled),
            "distance": distance.get(x),
        }
        for x in enumerate_ns_basis(level)
    ]
    checks: dict[str, bool] = {}
    if args.check_connected:
        checks["connected"] = bool(nx.is_connected(graph))
    return OutputRecord(
        command="graph",
        inputs={"level": level.ell, "charge": charge},
        results=rows,
        checks=checks,
        notes={"connected": f"{nx.number_connected_components(graph)} components"},
    )
