"""Иерархия исключений пакета."""

from __future__ import annotations


class FusionKitError(Exception):
    """Базовая ошибка пакета."""


class DomainError(FusionKitError, ValueError):
    """Недопустимые входные данные: метка, уровень, спин, заряд, окно."""


class UnsupportedError(DomainError):
    """Комбинация параметров, для которой результат не определён."""


class ResonanceError(DomainError):
    """Резонансная матрица вычетов: разность собственных чисел целая."""

    def __init__(self, first: complex, second: complex, where: str = "P") -> None:
        self.first = first
        self.second = second
        self.where = where
        super().__init__(
            f"Resonant residue matrix {where}: eigenvalues {first:.6g} and {second:.6g} "
            f"differ by a nonzero integer"
        )


class NumericError(FusionKitError):
    """Численный метод не сошёлся."""

    def __init__(self, message: str, residual: float) -> None:
        self.residual = residual
        super().__init__(f"{message} (residual={residual:.3e})")


class InvariantViolation(FusionKitError):
    """Два независимых вычисления дали разные ответы."""
