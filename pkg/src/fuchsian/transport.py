"""Численное продолжение решений и матрицы переноса между 0 и ∞."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np
from beartype import beartype
from numpy.typing import NDArray
from scipy.integrate import solve_ivp
from scipy.linalg import expm

from src.errors import NumericError
from src.fuchsian.frobenius import frobenius_basis, infinity_basis
from src.fuchsian.system import ComplexMatrix, FuchsianSystem, validate_path

logger = logging.getLogger(__name__)

OVERLAP_POINT = 0.3 - 0.3j


def _relative_error(actual: ComplexMatrix, expected: ComplexMatrix) -> float:
    scale = max(1.0, float(np.max(np.abs(expected))))
    return float(np.max(np.abs(actual - expected))) / scale


def _integrate(
    system: FuchsianSystem,
    value: NDArray[np.complex128],
    curve: Callable[[float], complex],
    velocity: Callable[[float], complex],
) -> NDArray[np.complex128]:
    shape = value.shape
    columns = value.reshape(system.n, -1)

    def rhs(t: float, y: NDArray[np.complex128]) -> NDArray[np.complex128]:
        z = curve(t)
        current = y.reshape(columns.shape)
        return (velocity(t) * (system.coefficient(z) @ current)).ravel()

    solution = solve_ivp(
        rhs,
        (0.0, 1.0),
        columns.ravel().astype(np.complex128),
        method="DOP853",
        rtol=system.ode_tol,
        atol=system.ode_tol,
    )
    if solution.status != 0:
        raise NumericError(f"ODE integration failed: {solution.message}", float("nan"))
    return np.asarray(solution.y[:, -1], dtype=np.complex128).reshape(shape)


@beartype
def continue_solution(
    system: FuchsianSystem,
    value: NDArray[np.complex128],
    path: Sequence[complex],
) -> NDArray[np.complex128]:
    """Продолжить решение (вектор или матрицу столбцов) вдоль ломаной.

    Args:
        system: Фуксова система
        value: Значение в path[0]
        path: Узлы ломаной

    Returns:
        NDArray: Значение в path[-1]

    Raises:
        NumericError: Если интегратор не справился
    """
    current = value
    for start, end in zip(path, path[1:]):
        direction = end - start
        current = _integrate(
            system,
            current,
            lambda t, a=start, d=direction: a + t * d,
            lambda t, d=direction: d,
        )
    return current


@beartype
def continue_around_zero(
    system: FuchsianSystem, value: NDArray[np.complex128], radius: float = 0.25
) -> NDArray[np.complex128]:
    """Продолжить решение по окружности |z| = radius против часовой стрелки."""
    turn = 2j * np.pi

    def curve(t: float) -> complex:
        return complex(radius * np.exp(turn * t))

    return _integrate(system, value, curve, lambda t: turn * curve(t))


@beartype
@dataclass(frozen=True, eq=False)
class TransportMatrix:
    """Матрица переноса c: F₀ (продолженный) = F∞ · c.

    Attributes:
        c: Матрица переноса
        residual: Невязка сверки базисов в контрольной точке
        condition: Число обусловленности c
        overlap_residual: Расхождение ряда и ОДУ в кольце |z| < ½
    """

    c: NDArray[np.complex128]
    residual: float
    condition: float
    overlap_residual: float

    @property
    def all_entries_nonzero(self) -> bool:
        """Все ли элементы c отличны от нуля (только для отчёта)."""
        return bool(np.all(np.abs(self.c) > 1e-10))


@beartype
def overlap_residual(system: FuchsianSystem, point: complex = OVERLAP_POINT) -> float:
    """Сравнить ряд Фробениуса и ОДУ-продолжение из path[0] в точку |z| < ½."""
    basis = frobenius_basis(system)
    start = system.path[0]
    continued = continue_solution(system, basis(start), [start, point])
    return _relative_error(continued, basis(point))


@beartype
def transport_matrix(system: FuchsianSystem, check_overlap: bool = True) -> TransportMatrix:
    """Выразить продолженный базис нуля через базис бесконечности.

    Продолжение идёт по system.path; c сверяется в предпоследнем узле.

    Args:
        system: Фуксова система
        check_overlap: Считать ли невязку ряда и ОДУ в кольце перекрытия

    Returns:
        TransportMatrix: c, невязка и обусловленность

    Raises:
        ResonanceError: Если P или Q − P резонансны
        NumericError: Если невязка сверки больше match_tol
    """
    validate_path(system.path)
    at_zero = frobenius_basis(system)
    at_infinity = infinity_basis(system)
    path = list(system.path)

    start_value = at_zero(path[0])
    checkpoint_value = continue_solution(system, start_value, path[:-1])
    end_value = continue_solution(system, checkpoint_value, path[-2:])

    c = np.linalg.solve(at_infinity(path[-1]), end_value)
    residual = _relative_error(checkpoint_value, at_infinity(path[-2]) @ c)
    condition = float(np.linalg.cond(c))
    overlap = overlap_residual(system) if check_overlap else 0.0
    if residual > system.match_tol:
        raise NumericError(f"Basis matching failed for {system.label or 'system'}", residual)
    logger.debug(f"[OK] Transport for {system.label}: residual={residual:.2e}, cond={condition:.2e}")
    return TransportMatrix(c=c, residual=residual, condition=condition, overlap_residual=overlap)


@beartype
@dataclass(frozen=True)
class DualityReport:
    """Результат проверки контраградиентной двойственности."""

    gauge_error: float
    pairing_drift: float
    transport_error: float
    passed: bool


@beartype
def contragredient_check(
    system: FuchsianSystem,
    pairing_tol: float = 1e-8,
    transport_tol: float = 1e-6,
) -> DualityReport:
    """Проверить двойственность системы и системы −Aᵀ.

    (i) калибровка двойственной системы равна (g⁻¹)ᵀ, а спаривание K₀ᵀF₀
    постоянно вдоль пути; (ii) перенос двойственной системы равен (c⁻¹)ᵀ.

    Args:
        system: Фуксова система
        pairing_tol: Допуск дрейфа спаривания
        transport_tol: Допуск закона обратной транспонированной

    Returns:
        DualityReport: Ошибки и итог
    """
    dual = system.dual()
    basis = frobenius_basis(system)
    dual_basis = frobenius_basis(dual)
    start = system.path[0]

    g = basis.gauge(start)
    gauge_error = _relative_error(dual_basis.gauge(start), np.linalg.inv(g).T)

    f_value = basis(start)
    k_value = dual_basis(start)
    initial = k_value.T @ f_value
    drift = 0.0
    for a, b in zip(system.path, system.path[1:]):
        f_value = continue_solution(system, f_value, [a, b])
        k_value = continue_solution(dual, k_value, [a, b])
        drift = max(drift, _relative_error(k_value.T @ f_value, initial))

    c = transport_matrix(system, check_overlap=False).c
    c_dual = transport_matrix(dual, check_overlap=False).c
    transport_error = inverse_transpose_error(c, c_dual)

    passed = gauge_error <= pairing_tol and drift <= pairing_tol and transport_error <= transport_tol
    if not passed:
        logger.info(
            f"[FAIL] Duality for {system.label}: gauge={gauge_error:.2e}, "
            f"pairing={drift:.2e}, transport={transport_error:.2e}"
        )
    return DualityReport(
        gauge_error=gauge_error,
        pairing_drift=drift,
        transport_error=transport_error,
        passed=passed,
    )


@beartype
def inverse_transpose_error(c: NDArray[np.complex128], c_dual: NDArray[np.complex128]) -> float:
    """Расхождение c_dual и (c⁻¹)ᵀ."""
    return _relative_error(c_dual, np.linalg.inv(c).T)


@beartype
def monodromy_check(system: FuchsianSystem, radius: float = 0.25, tolerance: float = 1e-7) -> bool:
    """Обход 0 умножает базис F₀ справа на exp(2πiP)."""
    basis = frobenius_basis(system)
    start = basis(radius + 0j)
    looped = continue_around_zero(system, start, radius)
    expected = start @ expm(2j * np.pi * system.p)
    return _relative_error(looped, expected) <= tolerance
