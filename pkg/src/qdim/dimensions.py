"""Квантовые размерности двумя независимыми способами и индексы подфакторов."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Hashable, Mapping
from dataclasses import dataclass

import numpy as np
from beartype import beartype

from src.errors import DomainError, InvariantViolation, NumericError
from src.fusion.axioms import weak_generator_check
from src.fusion.ring import FusionRing, fusion_matrix, su2_interval
from src.kac.labels import (
    Level,
    NSLabel,
    Spin,
    beta_label,
    canonicalize,
    enumerate_ns_basis,
)

logger = logging.getLogger(__name__)

# Индексное множество β ⊠ x до идентификации, с кратностями
IndexSet = Callable[[NSLabel], list[NSLabel]]


@beartype
@dataclass(frozen=True)
class DimVector:
    """Размерности d(x) по меткам базиса, нормированные d(unit) = 1.

    Attributes:
        values: Метка -> размерность
        eigenvalue: Собственное число матрицы генератора (= d(генератор))
    """

    values: Mapping[Hashable, float]
    eigenvalue: float

    def __post_init__(self) -> None:
        low = [label for label, d in self.values.items() if d < 1 - 1e-9]
        if low:
            raise InvariantViolation(f"Quantum dimensions below 1 for {low}")

    def __getitem__(self, label: Hashable) -> float:
        return self.values[label]


@beartype
def qdim_su2(i: Spin, level: Level) -> float:
    """d(H_i^ℓ) = sin((2i+1)π/m) / sin(π/m), m = ℓ + 2.

    Raises:
        DomainError: Если i > ℓ/2
    """
    if not level.admits(i):
        raise DomainError(f"Spin {i} out of range for level {level.ell}")
    m = level.m
    return math.sin((i.twice_spin + 1) * math.pi / m) / math.sin(math.pi / m)


@beartype
def qdim_ns(label: NSLabel) -> float:
    """d(H_{ii'}) = d(H_i^ℓ) · d(H_{i'}^{ℓ+2})."""
    return qdim_su2(label.i, label.level) * qdim_su2(label.i_prime, label.level.shifted())


@beartype
def subfactor_index(label: NSLabel) -> float:
    """Индекс подфактора: квадрат квантовой размерности."""
    return qdim_ns(label) ** 2


@beartype
def closed_form_dims(ring: FusionRing, generator: NSLabel) -> DimVector:
    """Размерности базиса T_m по формуле через синусы."""
    values = {label: qdim_ns(label) for label in ring.basis if isinstance(label, NSLabel)}
    if len(values) != ring.size:
        raise DomainError(f"Ring {ring.name} is not labelled by coset pairs")
    return DimVector(values=values, eigenvalue=qdim_ns(generator))


@beartype
def pf_dims(
    ring: FusionRing,
    generator: Hashable,
    tolerance: float = 1e-13,
    max_iterations: int = 100_000,
) -> DimVector:
    """Положительный собственный вектор матрицы слияния генератора.

    Степенной метод на M + I (матрица примитивна при связном графе),
    старт с вектора из единиц, нормировка по max-норме.

    Args:
        ring: Кольцо слияния
        generator: Слабый генератор
        tolerance: Порог разности соседних итераций в max-норме
        max_iterations: Предел числа итераций

    Returns:
        DimVector: Вектор с d(unit) = 1

    Raises:
        DomainError: Если генератор не слабый
        NumericError: Если итерации не сошлись
    """
    if not weak_generator_check(ring, generator):
        raise DomainError(f"{generator} is not a weak generator of {ring.name}")
    # d_x d_j = Σ_k N_{xj}^k d_k, то есть M^T d = d_x d
    matrix = fusion_matrix(ring, generator).entries.T.astype(np.float64)
    shifted = matrix + np.eye(ring.size)
    vector = np.ones(ring.size)
    residual = math.inf
    for iteration in range(1, max_iterations + 1):
        nxt = shifted @ vector
        nxt /= np.max(nxt)
        residual = float(np.max(np.abs(nxt - vector)))
        vector = nxt
        if residual < tolerance:
            logger.debug(f"[OK] Power iteration for {generator} converged in {iteration} steps")
            break
    else:
        raise NumericError(f"Power iteration for {generator} in {ring.name} did not converge", residual)

    vector = vector / vector[ring.unit]
    eigenvalue = float((matrix @ vector)[ring.unit])
    return DimVector(
        values={label: float(vector[idx]) for idx, label in enumerate(ring.basis)},
        eigenvalue=eigenvalue,
    )


@beartype
def verify_multiplicativity(ring: FusionRing, dims: DimVector, tolerance: float = 1e-7) -> bool:
    """Проверить d(x)·d(y) = Σ_z N_{xy}^z d(z) для всех x, y."""
    d = np.array([dims[label] for label in ring.basis])
    products = np.outer(d, d)
    sums = ring.tensor.astype(np.float64) @ d
    worst = float(np.max(np.abs(products - sums)))
    if worst > tolerance:
        logger.info(f"[FAIL] Multiplicativity in {ring.name}: max deviation {worst:.3e}")
        return False
    return True


@beartype
def beta_index_set(x: NSLabel) -> list[NSLabel]:
    """Классы β ⊠ x по ⟨0, i⟩_ℓ × ⟨1, i'⟩_{ℓ+2}, с повторами."""
    level = x.level
    beta_raw = NSLabel.from_doubled(0, 2, level.ell)
    return [
        canonicalize(NSLabel(c, c_prime, level))
        for c in su2_interval(beta_raw.i, x.i, level.ell)
        for c_prime in su2_interval(beta_raw.i_prime, x.i_prime, level.ell + 2)
    ]


@beartype
def beta_saturation_check(
    level: Level,
    index_set: IndexSet | None = None,
    tolerance: float = 1e-8,
) -> bool:
    """Проверить, что неравенство для β ⊠ x обращается в равенство размерностей.

    Для каждого класса x: d(β)·d(x) = Σ d(y) по ⟨0,i⟩_ℓ × ⟨1,i'⟩_{ℓ+2}.

    Args:
        level: Уровень ℓ
        index_set: Индексное множество (подменяется в мутационных тестах)
        tolerance: Допуск сравнения

    Returns:
        bool: True если равенство выполнено для всех x
    """
    terms = index_set or beta_index_set
    d_beta = qdim_ns(beta_label(level))
    for x in enumerate_ns_basis(level):
        total = sum(qdim_ns(y) for y in terms(x))
        if abs(d_beta * qdim_ns(x) - total) > tolerance:
            logger.info(f"[FAIL] β saturation breaks at level {level.ell} for x={x}")
            return False
    return True


@beartype
def jones_admissible(index: float, tolerance: float = 1e-9) -> bool:
    """Лежит ли индекс в {4cos²(π/n) : n ≥ 3} ∪ [4, ∞). Только для отчёта."""
    if index >= 4 - tolerance:
        return True
    n = 3
    while True:
        value = 4 * math.cos(math.pi / n) ** 2
        if abs(value - index) <= tolerance:
            return True
        if value > index + tolerance:
            return False
        n += 1
