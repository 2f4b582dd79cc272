"""Команда fields: конструируемые первичные поля заряда α или β."""

from __future__ import annotations

import argparse
from typing import Any

from beartype import beartype

from src.cli.formatting import OutputRecord
from src.cli.parsing import format_parent, parse_level
from src.fields.catalog import (
    CHARGES,
    adjacency_set,
    assigned_sigma,
    charge_label,
    parse_charge,
    sigma_consistency_report,
)
from src.fusion.ring import build_ns_ring, fuse
from src.kac.labels import canonicalize, enumerate_ns_basis, ns_pairs
from src.kac.weights import delta_ns
from src.utils.config_loader import KitConfig


@beartype
def register(subparsers: Any) -> None:
    """Зарегистрировать команду fields."""
    parser = subparsers.add_parser("fields", parents=[format_parent()], help="Каталог первичных полей")
    parser.add_argument("--level", type=int, required=True, help="Уровень ℓ")
    parser.add_argument("--charge", choices=CHARGES, required=True, help="Вид заряда")
    parser.set_defaults(handler=handle)


@beartype
def handle(args: argparse.Namespace, settings: KitConfig) -> OutputRecord:
    """Перечислить поля source -> target с σ и Δ, сверить смежность со слиянием."""
    level = parse_level(args.level)
    charge = parse_charge(args.charge)
    k = charge_label(charge, level)

    rows = []
    for source in ns_pairs(level):
        for target in ns_pairs(level):
            sigma = assigned_sigma(target, source, charge)
            if sigma is None:
                continue
            rows.append(
                {
                    "source": source,
                    "target": target,
                    "sigma": sigma,
                    "delta": delta_ns(target, source, k),
                }
            )

    ring = build_ns_ring(level)
    charge_class = canonicalize(k)
    matches = all(
        {label for label, _ in fuse(ring, charge_class, x)} == adjacency_set(x, charge)
        for x in enumerate_ns_basis(level)
    )
    mismatches = sigma_consistency_report(level)
    return OutputRecord(
        command="fields",
        inputs={"level": level.ell, "charge": charge},
        results=rows,
        checks={
            "adjacency_matches_fusion": matches,
            "sigma_parity_consistent": not mismatches,
        },
        notes={"sigma_parity_consistent": f"{len(mismatches)} mismatching fields"},
    )
