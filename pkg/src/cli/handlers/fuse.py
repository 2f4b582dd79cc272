"""Команда fuse: разложение a ⊠ b в кольце T_m."""

from __future__ import annotations

import argparse
from typing import Any

from beartype import beartype

from src.cli.formatting import OutputRecord
from src.cli.parsing import format_parent, parse_label, parse_level
from src.fusion.ring import build_ns_ring, build_su2_ring, fuse, quotient_by_involution, tensor_ring
from src.fusion.serialization import ring_to_json, save_ring
from src.kac.labels import canonicalize
from src.utils.config_loader import KitConfig


@beartype
def register(subparsers: Any) -> None:
    """Зарегистрировать команду fuse."""
    parser = subparsers.add_parser("fuse", parents=[format_parent()], help="Слияние двух классов")
    parser.add_argument("--level", type=int, required=True, help="Уровень ℓ")
    parser.add_argument("--a", required=True, help="Первая метка: 2i,2i' или i,i'")
    parser.add_argument("--b", required=True, help="Вторая метка: 2j,2j' или j,j'")
    parser.add_argument("--export", default=None, help="Записать кольцо T_m (путь через фактор) в JSON")
    parser.set_defaults(handler=handle)


@beartype
def handle(args: argparse.Namespace, settings: KitConfig) -> OutputRecord:
    """Сложить прямой формулой и сверить с путём через R_ℓ ⊗ R_{ℓ+2}."""
    level = parse_level(args.level)
    a = canonicalize(parse_label(args.a, level))
    b = canonicalize(parse_label(args.b, level))

    ring = build_ns_ring(level)
    product = fuse(ring, a, b)
    checks: dict[str, bool] = {}
    inputs: dict[str, Any] = {"level": level.ell, "a": a, "b": b}
    if args.export is not None or level.ell <= settings.sweep("quotient_level_max"):
        quotient = quotient_by_involution(
            tensor_ring(build_su2_ring(level), build_su2_ring(level.shifted())), level
        )
        checks["matches_tensor_quotient"] = fuse(quotient, a, b) == product
        if args.export is not None:
            save_ring(quotient, args.export)
            checks["exported_ring_matches_direct"] = ring_to_json(quotient) == ring_to_json(ring)
            inputs["export"] = str(args.export)
    return OutputRecord(
        command="fuse",
        inputs=inputs,
        results=[{"class": label, "multiplicity": mult} for label, mult in product],
        checks=checks,
    )
