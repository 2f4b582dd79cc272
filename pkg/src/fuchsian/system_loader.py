"""Загрузка фуксовых систем из JSON и выгрузка результатов переноса."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

import numpy as np
from beartype import beartype

from src.errors import DomainError
from src.fuchsian.system import CANONICAL_PATH, ComplexMatrix, FuchsianSystem
from src.fuchsian.transport import TransportMatrix

logger = logging.getLogger(__name__)


def _parse_complex(entry: Any, where: str) -> complex:
    if not isinstance(entry, list) or len(entry) != 2:
        raise DomainError(f"{where}: expected [re, im], got {entry!r}")
    re, im = entry
    if not all(isinstance(x, int | float) and not isinstance(x, bool) for x in (re, im)):
        raise DomainError(f"{where}: components must be numbers, got {entry!r}")
    return complex(float(re), float(im))


def _parse_matrix(rows: Any, n: int, name: str) -> ComplexMatrix:
    if not isinstance(rows, list) or len(rows) != n:
        raise DomainError(f"{name} must have {n} rows")
    matrix = np.zeros((n, n), dtype=np.complex128)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise DomainError(f"{name}[{i}] must have {n} entries")
        for j, entry in enumerate(row):
            matrix[i, j] = _parse_complex(entry, f"{name}[{i}][{j}]")
    return matrix


@beartype
def system_from_dict(data: dict[str, Any]) -> FuchsianSystem:
    """Построить систему из словаря формата {"n", "P", "Q", "series_order"?, "path"?}.

    Raises:
        DomainError: При нарушении формата или резонансной P
    """
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"Field 'n' must be a positive integer, got {n!r}")
    p = _parse_matrix(data.get("P"), n, "P")
    q = _parse_matrix(data.get("Q"), n, "Q")
    order = data.get("series_order", 60)
    if not isinstance(order, int) or isinstance(order, bool):
        raise DomainError(f"Field 'series_order' must be an integer, got {order!r}")
    raw_path = data.get("path")
    path = (
        CANONICAL_PATH
        if raw_path is None
        else tuple(_parse_complex(z, f"path[{k}]") for k, z in enumerate(raw_path))
    )
    return FuchsianSystem(p=p, q=q, series_order=order, path=path)


@beartype
def load_system(path: str | Path) -> FuchsianSystem:
    """Загрузить систему из JSON-файла.

    Args:
        path: Путь к файлу

    Returns:
        FuchsianSystem: Система

    Raises:
        DomainError: Если файл не найден, не JSON или формат нарушен
    """
    file_path = Path(path)
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except FileNotFoundError:
        raise DomainError(f"System file not found: {file_path}")
    except json.JSONDecodeError as e:
        raise DomainError(f"Invalid JSON in system file: {e}")
    if not isinstance(data, dict):
        raise DomainError("System file must contain a JSON object")
    system = system_from_dict(data)
    logger.info(f"Loaded {system.n}x{system.n} Fuchsian system from {file_path}")
    return system


def _complex_rows(matrix: ComplexMatrix) -> list[list[list[float]]]:
    return [[[float(x.real), float(x.imag)] for x in row] for row in matrix]


@beartype
def system_to_dict(system: FuchsianSystem) -> dict[str, Any]:
    """Обратное к system_from_dict."""
    return {
        "n": system.n,
        "P": _complex_rows(system.p),
        "Q": _complex_rows(system.q),
        "series_order": system.series_order,
        "path": [[z.real, z.imag] for z in system.path],
    }


@beartype
def transport_to_json(transport: TransportMatrix) -> dict[str, Any]:
    """Выгрузка матрицы переноса с невязками."""
    return {
        "c": _complex_rows(transport.c),
        "residual": transport.residual,
        "condition": transport.condition,
        "overlap_residual": transport.overlap_residual,
        "all_entries_nonzero": transport.all_entries_nonzero,
    }
