"""Z2-градуированное конечномерное пространство и преобразование Клейна."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from beartype import beartype
from numpy.typing import NDArray

from src.errors import DomainError

Matrix = NDArray[np.complex128]

GRADING_TOLERANCE = 1e-12


@beartype
@dataclass(frozen=True, eq=False)
class GradedSpace:
    """Пространство C^d с градуирующей унитарной u, u² = I.

    Attributes:
        u: Градуировка
    """

    u: Matrix

    def __post_init__(self) -> None:
        if self.u.ndim != 2 or self.u.shape[0] != self.u.shape[1]:
            raise DomainError(f"Grading must be square, got shape {self.u.shape}")
        identity = np.eye(self.dim)
        if not np.allclose(self.u @ self.u, identity, atol=GRADING_TOLERANCE, rtol=0):
            raise DomainError("Grading operator must square to the identity")
        if not np.allclose(self.u @ self.u.conj().T, identity, atol=GRADING_TOLERANCE, rtol=0):
            raise DomainError("Grading operator must be unitary")

    @staticmethod
    def standard(even: int, odd: int) -> GradedSpace:
        """u = diag(1, …, 1, −1, …, −1)."""
        if even < 0 or odd < 0 or even + odd == 0:
            raise DomainError(f"Invalid graded dimensions ({even}, {odd})")
        return GradedSpace(np.diag([1.0] * even + [-1.0] * odd).astype(np.complex128))

    @property
    def dim(self) -> int:
        """Размерность d."""
        return int(self.u.shape[0])

    @cached_property
    def p0(self) -> Matrix:
        """Проектор на чётную часть (I + u)/2."""
        return (np.eye(self.dim) + self.u) / 2

    @cached_property
    def p1(self) -> Matrix:
        """Проектор на нечётную часть (I − u)/2."""
        return (np.eye(self.dim) - self.u) / 2

    @cached_property
    def kappa(self) -> Matrix:
        """Преобразование Клейна κ = p0 + i·p1."""
        return (self.p0 + 1j * self.p1).astype(np.complex128)

    def tau(self, x: Matrix) -> Matrix:
        """Автоморфизм τ(x) = u x u."""
        return self.u @ x @ self.u

    def even_part(self, x: Matrix) -> Matrix:
        """x0 = ½(x + uxu)."""
        return (x + self.tau(x)) / 2

    def odd_part(self, x: Matrix) -> Matrix:
        """x1 = ½(x − uxu)."""
        return (x - self.tau(x)) / 2

    def is_homogeneous(self, x: Matrix, tolerance: float = 1e-10) -> bool:
        """Чётна или нечётна ли матрица."""
        return bool(
            np.max(np.abs(self.odd_part(x)), initial=0.0) <= tolerance
            or np.max(np.abs(self.even_part(x)), initial=0.0) <= tolerance
        )
