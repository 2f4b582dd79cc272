"""Ряд Фробениуса в 0: калибровка g(z) с g(0) = I и F₀(z) = g(z)·z^P."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from beartype import beartype
from numpy.typing import NDArray
from scipy.linalg import expm, solve_sylvester

from src.errors import DomainError, NumericError
from src.fuchsian.system import SERIES_RADIUS, ComplexMatrix, FuchsianSystem

logger = logging.getLogger(__name__)


@beartype
@dataclass(frozen=True, eq=False)
class GaugeSeries:
    """Коэффициенты g_0 = I, g_1, …, g_N степенного ряда калибровки."""

    coefficients: NDArray[np.complex128]

    @property
    def order(self) -> int:
        """Степень усечения N."""
        return int(self.coefficients.shape[0]) - 1

    def __call__(self, z: complex) -> ComplexMatrix:
        result = np.zeros_like(self.coefficients[0])
        for coefficient in self.coefficients[::-1]:
            result = result * z + coefficient
        return result

    def derivative(self, z: complex) -> ComplexMatrix:
        """g'(z) почленно."""
        result = np.zeros_like(self.coefficients[0])
        for k in range(self.order, 0, -1):
            result = result * z + k * self.coefficients[k]
        return result


@beartype
def gauge_series(system: FuchsianSystem, tolerance: float | None = None) -> GaugeSeries:
    """Решить рекурренту k·g_k − [P, g_k] = Q·Σ_{j<k} g_j по степеням.

    Каждый шаг — уравнение Сильвестра (kI − P)X + XP = R, разрешимое
    при нерезонансной P.

    Args:
        system: Фуксова система
        tolerance: Порог эвристики сходимости ‖g_N‖·½^N (по умолчанию ode_tol)

    Returns:
        GaugeSeries: Коэффициенты до series_order

    Raises:
        NumericError: Если хвост ряда не мал на |z| = ½
    """
    n = system.n
    identity = np.eye(n, dtype=np.complex128)
    coefficients = np.zeros((system.series_order + 1, n, n), dtype=np.complex128)
    coefficients[0] = identity
    partial = identity.copy()
    for k in range(1, system.series_order + 1):
        rhs = system.q @ partial
        coefficients[k] = solve_sylvester(k * identity - system.p, system.p, rhs)
        partial = partial + coefficients[k]

    limit = system.ode_tol if tolerance is None else tolerance
    tail = float(np.linalg.norm(coefficients[-1])) * SERIES_RADIUS**system.series_order
    if not math.isfinite(tail) or tail > limit:
        raise NumericError(f"Gauge series of {system.label or 'system'} does not converge on |z| = ½", tail)
    return GaugeSeries(coefficients=coefficients)


@beartype
@dataclass(frozen=True, eq=False)
class FrobeniusBasis:
    """Фундаментальное решение F₀(z) = g(z)·exp(P log z) в |z| ≤ ½."""

    system: FuchsianSystem
    gauge: GaugeSeries

    def __call__(self, z: complex) -> ComplexMatrix:
        if abs(z) > SERIES_RADIUS or z == 0:
            raise DomainError(f"Frobenius basis is evaluated only in 0 < |z| <= ½, got {z}")
        return self.gauge(z) @ expm(self.system.p * np.log(z))

    def gauge_residual(self, z: complex) -> float:
        """‖z g' − [P, g] − z/(1−z)·Q g‖ в точке z."""
        g = self.gauge(z)
        p, q = self.system.p, self.system.q
        defect = z * self.gauge.derivative(z) - (p @ g - g @ p) - z / (1 - z) * (q @ g)
        return float(np.max(np.abs(defect)))


@beartype
def frobenius_basis(system: FuchsianSystem) -> FrobeniusBasis:
    """Базис решений около 0, нормированный g(0) = I."""
    return FrobeniusBasis(system=system, gauge=gauge_series(system))


@beartype
@dataclass(frozen=True, eq=False)
class InfinityBasis:
    """Базис около ∞: F∞(z) = G(1/z)·exp((Q − P) log(1/z)), G из системы в w = 1/z."""

    inner: FrobeniusBasis

    def __call__(self, z: complex) -> ComplexMatrix:
        if abs(z) < 1 / SERIES_RADIUS:
            raise DomainError(f"Infinity basis is evaluated only in |z| >= 2, got {z}")
        return self.inner(1 / z)


@beartype
def infinity_basis(system: FuchsianSystem) -> InfinityBasis:
    """Базис решений около ∞.

    Raises:
        ResonanceError: Если Q − P резонансна
    """
    return InfinityBasis(inner=frobenius_basis(system.at_infinity()))
