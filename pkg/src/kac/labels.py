"""Метки представлений: спины, уровни, метки Каца и пары косета."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from beartype import beartype

from src.errors import DomainError

# Все веса храним точными дробями
Rational = Fraction


@beartype
@dataclass(frozen=True, order=True)
class Spin:
    """Полуцелый спин, хранится удвоенным: twice_spin = 2i."""

    twice_spin: int

    def __post_init__(self) -> None:
        if self.twice_spin < 0:
            raise DomainError(f"Spin must be nonnegative, got twice_spin={self.twice_spin}")

    @staticmethod
    def from_value(value: Fraction | int) -> Spin:
        """Создать спин из значения i ∈ ½ℤ.

        Args:
            value: Значение спина (0, 1/2, 1, ...)

        Returns:
            Spin: Спин

        Raises:
            DomainError: Если 2i не целое
        """
        doubled = Fraction(value) * 2
        if doubled.denominator != 1:
            raise DomainError(f"Spin {value} is not a half-integer")
        return Spin(int(doubled))

    @property
    def value(self) -> Fraction:
        """Значение спина i."""
        return Fraction(self.twice_spin, 2)

    def __str__(self) -> str:
        return str(self.value)


@beartype
@dataclass(frozen=True, order=True)
class Level:
    """Уровень ℓ петлевой группы; m = ℓ + 2."""

    ell: int

    def __post_init__(self) -> None:
        if self.ell < 0:
            raise DomainError(f"Level must be nonnegative, got {self.ell}")

    @property
    def m(self) -> int:
        """Параметр серии m = ℓ + 2."""
        return self.ell + 2

    def shifted(self) -> Level:
        """Уровень ℓ + 2 (вторая компонента косета)."""
        return Level(self.ell + 2)

    def admits(self, spin: Spin) -> bool:
        """Проверить условие 0 ≤ i ≤ ℓ/2."""
        return spin.twice_spin <= self.ell


@beartype
@dataclass(frozen=True, order=True)
class KacLabel:
    """Метка таблицы Каца (p, q) при параметре m, сектор Невё-Шварца."""

    p: int
    q: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise DomainError(f"Kac parameter m must be >= 2, got {self.m}")
        if not 1 <= self.p <= self.m - 1:
            raise DomainError(f"Kac label p={self.p} outside 1..{self.m - 1}")
        if not 1 <= self.q <= self.m + 1:
            raise DomainError(f"Kac label q={self.q} outside 1..{self.m + 1}")
        if (self.p - self.q) % 2 != 0:
            raise DomainError(
                f"Kac label ({self.p},{self.q}) has Ramond parity; only p ≡ q (mod 2) is supported"
            )

    def mirror(self) -> KacLabel:
        """Образ при идентификации (p, q) ~ (m−p, m+2−q)."""
        return KacLabel(self.m - self.p, self.m + 2 - self.q, self.m)


@beartype
@dataclass(frozen=True, order=True)
class NSLabel:
    """Пара косета (i на уровне ℓ, i' на уровне ℓ+2)."""

    i: Spin
    i_prime: Spin
    level: Level

    def __post_init__(self) -> None:
        if not self.level.admits(self.i):
            raise DomainError(f"Spin {self.i} exceeds ℓ/2 for level {self.level.ell}")
        if not self.level.shifted().admits(self.i_prime):
            raise DomainError(f"Spin {self.i_prime} exceeds (ℓ+2)/2 for level {self.level.ell}")
        if (self.i.twice_spin - self.i_prime.twice_spin) % 2 != 0:
            raise DomainError(f"Label ({self.i},{self.i_prime}) has i − i' ∉ ℤ (Ramond sector)")

    @staticmethod
    def from_doubled(twice_i: int, twice_i_prime: int, ell: int) -> NSLabel:
        """Создать метку по удвоенным спинам.

        Args:
            twice_i: 2i
            twice_i_prime: 2i'
            ell: Уровень ℓ

        Returns:
            NSLabel: Метка
        """
        return NSLabel(Spin(twice_i), Spin(twice_i_prime), Level(ell))

    @property
    def doubled(self) -> tuple[int, int]:
        """Удвоенные спины (2i, 2i')."""
        return self.i.twice_spin, self.i_prime.twice_spin

    def involution(self) -> NSLabel:
        """Образ при (i, i') → (ℓ/2 − i, (ℓ+2)/2 − i')."""
        ell = self.level.ell
        return NSLabel.from_doubled(
            ell - self.i.twice_spin, ell + 2 - self.i_prime.twice_spin, ell
        )

    def __str__(self) -> str:
        return f"({self.i},{self.i_prime})"


@beartype
def to_kac(label: NSLabel) -> KacLabel:
    """Перевести пару косета в метку Каца: p = 2i+1, q = 2i'+1, m = ℓ+2."""
    return KacLabel(label.i.twice_spin + 1, label.i_prime.twice_spin + 1, label.level.m)


@beartype
def from_kac(label: KacLabel) -> NSLabel:
    """Обратное к to_kac."""
    return NSLabel.from_doubled(label.p - 1, label.q - 1, label.m - 2)


@beartype
def canonicalize(label: NSLabel) -> NSLabel:
    """Канонический представитель класса идентификации.

    Из пары {x, involution(x)} выбирается меньшая по (2i, 2i').

    Args:
        label: Метка

    Returns:
        NSLabel: Канонический представитель (идемпотентно)
    """
    image = label.involution()
    return min(label, image, key=lambda x: x.doubled)


@beartype
def ns_pairs(level: Level) -> list[NSLabel]:
    """Все пары (i, i') сектора NS на уровне, без идентификации."""
    return [
        NSLabel.from_doubled(t, tp, level.ell)
        for t in range(level.ell + 1)
        for tp in range(level.ell + 3)
        if (t - tp) % 2 == 0
    ]


@beartype
def enumerate_ns_basis(level: Level) -> list[NSLabel]:
    """Канонические классы сектора NS, отсортированные, без повторов.

    Args:
        level: Уровень ℓ

    Returns:
        list[NSLabel]: Базис кольца слияния T_m
    """
    classes = {canonicalize(x) for x in ns_pairs(level)}
    return sorted(classes, key=lambda x: x.doubled)


@beartype
def alpha_label(level: Level) -> NSLabel:
    """Класс заряда α = (½, ½)."""
    return canonicalize(NSLabel.from_doubled(1, 1, level.ell))


@beartype
def beta_label(level: Level) -> NSLabel:
    """Класс заряда β = (0, 1)."""
    return canonicalize(NSLabel.from_doubled(0, 2, level.ell))


@beartype
def vacuum_label(level: Level) -> NSLabel:
    """Вакуум (0, 0)."""
    return NSLabel.from_doubled(0, 0, level.ell)
