"""Сборка матрицы сплетения NS из матриц переноса уровней ℓ и ℓ + 2."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from beartype import beartype
from numpy.typing import NDArray

from src.errors import DomainError
from src.fuchsian.transport import TransportMatrix

logger = logging.getLogger(__name__)

# Промежуточный канал (r, r'): индексы строк c_ℓ и c_{ℓ+2}
Pairing = Sequence[tuple[int, int]]


@beartype
@dataclass(frozen=True, eq=False)
class NSBraiding:
    """μ_{(r,r'),(s,s')} = (c_ℓ)_{rs} · ((c_{ℓ+2})⁻¹)ᵀ_{r's'}."""

    entries: NDArray[np.complex128]
    pairing: tuple[tuple[int, int], ...]
    nonzero: tuple[tuple[int, int], ...]


def _square(matrix: NDArray[np.complex128], name: str) -> int:
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DomainError(f"{name} must be square, got shape {matrix.shape}")
    return int(matrix.shape[0])


@beartype
def compose_ns_braiding(
    c_level: TransportMatrix,
    c_shifted: TransportMatrix,
    pairing: Pairing,
    threshold: float = 1e-10,
) -> NSBraiding:
    """Собрать сплетение NS: перенос уровня ℓ на контраградиентный уровня ℓ + 2.

    Args:
        c_level: Матрица переноса уровня ℓ
        c_shifted: Матрица переноса уровня ℓ + 2
        pairing: Список каналов (r, r')
        threshold: Порог, выше которого элемент считается ненулевым

    Returns:
        NSBraiding: Матрица по каналам и список ненулевых позиций

    Raises:
        DomainError: Если индексы каналов не помещаются в матрицы
    """
    size = _square(c_level.c, "c_level")
    size_shifted = _square(c_shifted.c, "c_shifted")
    for r, r_prime in pairing:
        if not (0 <= r < size and 0 <= r_prime < size_shifted):
            raise DomainError(f"Channel ({r}, {r_prime}) outside {size}x{size_shifted} transport data")

    contragredient = np.linalg.inv(c_shifted.c).T
    channels = tuple((int(r), int(rp)) for r, rp in pairing)
    rows = np.array([r for r, _ in channels], dtype=np.intp)
    rows_shifted = np.array([rp for _, rp in channels], dtype=np.intp)
    entries = c_level.c[np.ix_(rows, rows)] * contragredient[np.ix_(rows_shifted, rows_shifted)]
    nonzero = tuple(
        (int(a), int(b)) for a, b in zip(*np.nonzero(np.abs(entries) > threshold))
    )
    return NSBraiding(entries=entries.astype(np.complex128), pairing=channels, nonzero=nonzero)


@beartype
def bare_transport(c: NDArray[np.complex128]) -> TransportMatrix:
    """Обернуть готовую матрицу c без невязок."""
    return TransportMatrix(c=c, residual=0.0, condition=float(np.linalg.cond(c)), overlap_residual=0.0)
