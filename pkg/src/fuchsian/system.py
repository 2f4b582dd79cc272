"""Фуксова система f' = (P/z + Q/(1−z)) f и её проверки."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
from beartype import beartype
from numpy.typing import NDArray

from src.config import get_config
from src.errors import DomainError, ResonanceError

logger = logging.getLogger(__name__)

ComplexMatrix = NDArray[np.complex128]

# ¼ -> ¼−i -> 4−i -> 4, через нижнюю полуплоскость
CANONICAL_PATH: tuple[complex, ...] = (0.25 + 0j, 0.25 - 1j, 4 - 1j, 4 + 0j)

SINGULAR_CLEARANCE = 0.05
SERIES_RADIUS = 0.5
RESONANCE_TOLERANCE = 1e-8


def _integer_gap(value: complex) -> tuple[int, float]:
    nearest = round(value.real)
    return nearest, abs(value - nearest)


@beartype
def check_non_resonant(
    matrix: ComplexMatrix, where: str = "P", margin: float = RESONANCE_TOLERANCE
) -> None:
    """Проверить, что никакие два собственных числа не отличаются на ненулевое целое.

    Args:
        matrix: Матрица вычетов
        where: Имя матрицы для сообщения
        margin: Расстояние до целого, считающееся резонансом

    Raises:
        ResonanceError: С парой резонансных собственных чисел
    """
    eigenvalues = np.linalg.eigvals(matrix)
    for a_idx, a in enumerate(eigenvalues):
        for b in eigenvalues[a_idx + 1 :]:
            nearest, gap = _integer_gap(complex(a - b))
            if nearest != 0 and gap < margin:
                raise ResonanceError(complex(a), complex(b), where)


def _segment_distance(point: complex, start: complex, end: complex) -> float:
    direction = end - start
    length2 = abs(direction) ** 2
    if length2 == 0:
        return abs(point - start)
    t = ((point - start) * direction.conjugate()).real / length2
    t = min(1.0, max(0.0, t))
    return abs(point - (start + t * direction))


def _ray_distance(start: complex, end: complex) -> float:
    """Расстояние от отрезка до луча [1, ∞)."""
    if (start.imag <= 0 <= end.imag or end.imag <= 0 <= start.imag) and start.imag != end.imag:
        t = start.imag / (start.imag - end.imag)
        if (start + t * (end - start)).real >= 1:
            return 0.0
    elif start.imag == end.imag == 0 and max(start.real, end.real) >= 1:
        return 0.0

    def point(z: complex) -> float:
        return abs(z.imag) if z.real >= 1 else abs(z - 1)

    return min(point(start), point(end), _segment_distance(1 + 0j, start, end))


@beartype
def validate_path(path: Sequence[complex], clearance: float = SINGULAR_CLEARANCE) -> None:
    """Проверить путь продолжения от окрестности 0 к окрестности ∞.

    Raises:
        DomainError: Если путь проходит ближе clearance к 0, к 1 или
            (кроме последнего отрезка) к лучу [1, ∞),
            начинается вне |z| ≤ ½ или два последних узла лежат в |z| < 2
    """
    if len(path) < 2:
        raise DomainError("Continuation path needs at least two waypoints")
    for start, end in zip(path, path[1:]):
        for singular in (0j, 1 + 0j):
            if _segment_distance(singular, start, end) < clearance:
                raise DomainError(
                    f"Path segment {start} -> {end} passes within {clearance} of {singular.real:g}"
                )
    for start, end in zip(path[:-2], path[1:-1]):
        if _ray_distance(start, end) < clearance:
            raise DomainError(f"Path segment {start} -> {end} passes within {clearance} of the cut [1, inf)")
    if abs(path[0]) > SERIES_RADIUS:
        raise DomainError(f"Path must start in |z| <= {SERIES_RADIUS}, got {path[0]}")
    if min(abs(path[-1]), abs(path[-2])) < 1 / SERIES_RADIUS:
        raise DomainError(f"Last path segment must stay in |z| >= {1 / SERIES_RADIUS}")


@beartype
@dataclass(frozen=True, eq=False)
class FuchsianSystem:
    """Система с матрицами вычетов P (в 0) и Q (в 1).

    Attributes:
        p: Вычет в 0
        q: Вычет в 1
        series_order: Порядок усечения рядов Фробениуса
        path: Узлы пути продолжения
        ode_tol: Допуск интегратора
        match_tol: Допуск совпадения базисов
    """

    p: ComplexMatrix
    q: ComplexMatrix
    series_order: int = 60
    path: tuple[complex, ...] = CANONICAL_PATH
    ode_tol: float = 1e-12
    match_tol: float = 1e-8
    label: str = field(default="")

    def __post_init__(self) -> None:
        if self.p.ndim != 2 or self.p.shape[0] != self.p.shape[1]:
            raise DomainError(f"P must be square, got shape {self.p.shape}")
        if self.q.shape != self.p.shape:
            raise DomainError(f"Q shape {self.q.shape} does not match P shape {self.p.shape}")
        if self.series_order < 1:
            raise DomainError(f"Series order must be positive, got {self.series_order}")
        check_non_resonant(self.p, "P")
        validate_path(self.path)

    @property
    def n(self) -> int:
        """Размерность системы."""
        return int(self.p.shape[0])

    def coefficient(self, z: complex) -> ComplexMatrix:
        """A(z) = P/z + Q/(1−z)."""
        return self.p / z + self.q / (1 - z)

    def dual(self) -> FuchsianSystem:
        """Двойственная система k' = −A(z)ᵀ k."""
        return FuchsianSystem(
            p=-self.p.T,
            q=-self.q.T,
            series_order=self.series_order,
            path=self.path,
            ode_tol=self.ode_tol,
            match_tol=self.match_tol,
            label=f"{self.label}*",
        )

    def at_infinity(self) -> FuchsianSystem:
        """Система в w = 1/z: вычет Q − P в w = 0 и Q в w = 1.

        Raises:
            ResonanceError: Если Q − P резонансна
        """
        try:
            return FuchsianSystem(
                p=self.q - self.p,
                q=self.q,
                series_order=self.series_order,
                path=self.path,
                ode_tol=self.ode_tol,
                match_tol=self.match_tol,
                label=f"{self.label}@∞",
            )
        except ResonanceError as e:
            raise ResonanceError(e.first, e.second, "Q-P") from e


@beartype
def identity_system(n: int) -> FuchsianSystem:
    """Система P = Q = 0."""
    zero = np.zeros((n, n), dtype=np.complex128)
    return FuchsianSystem(p=zero, q=zero.copy(), label="zero")


@beartype
def scalar_system(a: complex | float, b: complex | float) -> FuchsianSystem:
    """n = 1: решения z^a (1−z)^{−b}."""
    return FuchsianSystem(
        p=np.array([[a]], dtype=np.complex128),
        q=np.array([[b]], dtype=np.complex128),
        label=f"scalar({a:g},{b:g})",
    )


def _disc_sample(rng: np.random.Generator, n: int, radius: float) -> ComplexMatrix:
    modulus = radius * np.sqrt(rng.uniform(size=(n, n)))
    angle = rng.uniform(0, 2 * np.pi, size=(n, n))
    return (modulus * np.exp(1j * angle)).astype(np.complex128)


def _near_resonant(matrix: ComplexMatrix, margin: float) -> bool:
    try:
        check_non_resonant(matrix, margin=margin)
    except ResonanceError:
        return True
    return False


@beartype
def random_system(
    rng: np.random.Generator,
    n: int,
    radius: float = 0.5,
    margin: float = 0.05,
    max_attempts: int = 1000,
) -> FuchsianSystem:
    """Случайная нерезонансная система с элементами в круге радиуса radius.

    Пересэмплирует, пока разность собственных чисел P или Q − P ближе
    margin к ненулевому целому.

    Raises:
        DomainError: Если за max_attempts попыток не нашлось системы
    """
    for _ in range(max_attempts):
        p = _disc_sample(rng, n, radius)
        q = _disc_sample(rng, n, radius)
        if _near_resonant(p, margin) or _near_resonant(q - p, margin):
            continue
        return FuchsianSystem(p=p, q=q, label=f"random{n}")
    raise DomainError(f"No non-resonant {n}x{n} system found in {max_attempts} attempts")


@beartype
def random_scalar_pairs(
    rng: np.random.Generator, count: int, bound: float = 0.5
) -> list[tuple[float, float]]:
    """count пар (a, b) с |a|, |b| ≤ bound для скалярных систем."""
    values = rng.uniform(-bound, bound, size=(count, 2))
    return [(float(a), float(b)) for a, b in values]


@beartype
def seeded_rng(seed: int | None = None) -> np.random.Generator:
    """Генератор, засеянный FUSIONKIT_SEED (или явным seed)."""
    if seed is None:
        seed = get_config().seed
    return np.random.default_rng(seed)
