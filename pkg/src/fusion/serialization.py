"""JSON-формат колец: {"level", "basis": [[2i, 2i'], …] или [[2i], …], "N": [[a, b, c, mult], …]}."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

from beartype import beartype

from src.errors import DomainError
from src.fusion.ring import FusionRing
from src.kac.labels import Level, NSLabel, Spin

logger = logging.getLogger(__name__)


def _encode_label(label: object) -> list[int]:
    if isinstance(label, NSLabel):
        return list(label.doubled)
    if isinstance(label, Spin):
        return [label.twice_spin]
    raise DomainError(f"Cannot serialize basis label {label!r}")


@beartype
def ring_to_json(ring: FusionRing) -> dict[str, Any]:
    """Словарь для json.dumps; N в порядке (a, b, c)."""
    if ring.level is None:
        raise DomainError(f"Ring {ring.name} has no level")
    return {
        "level": ring.level,
        "basis": [_encode_label(x) for x in ring.basis],
        "N": [[a, b, c, mult] for (a, b, c), mult in sorted(ring.structure.items()) if mult],
    }


@beartype
def ring_from_json(data: dict[str, Any], name: str = "") -> FusionRing:
    """Восстановить кольцо; единица — вакуум (0) или (0, 0).

    Raises:
        DomainError: При нарушении формата
    """
    try:
        level = Level(int(data["level"]))
        raw_basis = data["basis"]
        entries = data["N"]
    except (KeyError, TypeError, ValueError) as e:
        raise DomainError(f"Malformed ring JSON: {e}")

    basis: list[Spin | NSLabel] = []
    for item in raw_basis:
        if len(item) == 1:
            basis.append(Spin(int(item[0])))
        elif len(item) == 2:
            basis.append(NSLabel.from_doubled(int(item[0]), int(item[1]), level.ell))
        else:
            raise DomainError(f"Basis entry {item!r} must have one or two components")
    structure: dict[tuple[int, int, int], int] = {}
    for entry in entries:
        if len(entry) != 4:
            raise DomainError(f"Structure entry {entry!r} must be [a, b, c, mult]")
        a, b, c, mult = (int(x) for x in entry)
        structure[(a, b, c)] = mult

    if not basis:
        raise DomainError("Ring basis is empty")
    vacuum: Spin | NSLabel = Spin(0) if isinstance(basis[0], Spin) else NSLabel.from_doubled(0, 0, level.ell)
    if vacuum not in basis:
        raise DomainError("Ring basis has no vacuum label")
    return FusionRing(
        basis=tuple(basis),
        structure=structure,
        unit=basis.index(vacuum),
        level=level.ell,
        name=name,
    )


@beartype
def save_ring(ring: FusionRing, path: str | Path) -> None:
    """Записать кольцо в файл с отсортированными ключами.

    Raises:
        DomainError: Если файл не удаётся записать
    """
    try:
        Path(path).write_text(json.dumps(ring_to_json(ring), sort_keys=True, indent=2), encoding="utf-8")
    except OSError as e:
        raise DomainError(f"Cannot write ring file {path}: {e}")
    logger.info(f"[OK] Saved {ring.name} with {ring.size} classes to {path}")


@beartype
def load_ring(path: str | Path) -> FusionRing:
    """Прочитать кольцо из файла."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise DomainError(f"Ring file not found: {path}")
    except json.JSONDecodeError as e:
        raise DomainError(f"Invalid JSON in ring file: {e}")
    return ring_from_json(data, name=Path(path).stem)
