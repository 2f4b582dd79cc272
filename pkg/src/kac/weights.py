"""Конформные веса и соотношения косета, всё в точных дробях."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from beartype import beartype

from src.errors import DomainError
from src.kac.labels import (
    KacLabel,
    Level,
    NSLabel,
    Rational,
    Spin,
    canonicalize,
    ns_pairs,
    to_kac,
)


@beartype
def h_su2(i: Spin, level: Level) -> Rational:
    """Вес h_i^ℓ = (i² + i)/(ℓ + 2) — низшее собственное значение L_0.

    Args:
        i: Спин
        level: Уровень ℓ

    Returns:
        Rational: Точный вес

    Raises:
        DomainError: Если i > ℓ/2
    """
    if not level.admits(i):
        raise DomainError(f"Spin {i} out of range for level {level.ell}")
    t = i.twice_spin
    return Fraction(t * (t + 2), 4 * level.m)


@beartype
def h_ns(label: KacLabel) -> Rational:
    """Вес h_pq^m = ([(m+2)p − mq]² − 4) / (8m(m+2))."""
    m = label.m
    return Fraction(((m + 2) * label.p - m * label.q) ** 2 - 4, 8 * m * (m + 2))


@beartype
def h_label(label: NSLabel) -> Rational:
    """Вес h_{ii'}^ℓ пары косета."""
    return h_ns(to_kac(label))


@beartype
def weight_relation_check(i: Spin, i_prime: Spin, level: Level) -> bool:
    """Проверить h_i^ℓ = h_pq^m + h_{i'}^{ℓ+2} − ½(i − i')² точно.

    Args:
        i: Спин уровня ℓ
        i_prime: Спин уровня ℓ+2
        level: Уровень ℓ

    Returns:
        bool: True если тождество выполнено
    """
    label = NSLabel(i, i_prime, level)
    diff = i.value - i_prime.value
    rhs = h_label(label) + h_su2(i_prime, level.shifted()) - diff * diff / 2
    return h_su2(i, level) == rhs


@beartype
def same_level(*labels: NSLabel) -> Level:
    """Общий уровень меток.

    Raises:
        DomainError: Если уровни различны
    """
    levels = {x.level for x in labels}
    if len(levels) != 1:
        raise DomainError(f"Labels live on different levels: {sorted(x.ell for x in levels)}")
    return levels.pop()


@beartype
def delta_ns(target: NSLabel, source: NSLabel, charge: NSLabel) -> Rational:
    """Сдвиг мод поля φ: Δ = h(charge) − h(source) + h(target).

    Raises:
        DomainError: Если уровни меток различны
    """
    same_level(target, source, charge)
    return h_label(charge) - h_label(source) + h_label(target)


@beartype
def delta_su2(target: Spin, source: Spin, charge: Spin, level: Level) -> Rational:
    """Сдвиг мод первичного поля SU(2): Δ_{ij}^{kℓ} = h_i − h_j + h_k."""
    return h_su2(target, level) - h_su2(source, level) + h_su2(charge, level)


@beartype
def c_coefficient(
    i: Spin, i_prime: Spin, j: Spin, j_prime: Spin, k: Spin, k_prime: Spin
) -> Rational:
    """C = ½[(i−i')² − (j−j')² + (k−k')²]."""
    a = i.value - i_prime.value
    b = j.value - j_prime.value
    c = k.value - k_prime.value
    return (a * a - b * b + c * c) / 2


@beartype
def triangle_relation_check(
    target: NSLabel, source: NSLabel, charge: NSLabel
) -> bool:
    """Проверить Δ_ij^{kℓ} = Δ_ns + Δ_{i'j'}^{k',ℓ+2} − C точно.

    Args:
        target: Пара (i, i')
        source: Пара (j, j')
        charge: Пара (k, k')

    Returns:
        bool: True если тождество выполнено
    """
    level = same_level(target, source, charge)
    lhs = delta_su2(target.i, source.i, charge.i, level)
    rhs = (
        delta_ns(target, source, charge)
        + delta_su2(target.i_prime, source.i_prime, charge.i_prime, level.shifted())
        - c_coefficient(
            target.i, target.i_prime, source.i, source.i_prime, charge.i, charge.i_prime
        )
    )
    return lhs == rhs


@beartype
@dataclass(frozen=True)
class KacEntry:
    """Строка таблицы Каца."""

    label: NSLabel
    p: int
    q: int
    h: Rational
    canonical: NSLabel

    @property
    def is_canonical(self) -> bool:
        """Является ли метка представителем своего класса."""
        return self.label == self.canonical


@beartype
def kac_table(level: Level) -> list[KacEntry]:
    """Полная таблица Каца сектора NS с отмеченными классами.

    Args:
        level: Уровень ℓ (m = ℓ + 2)

    Returns:
        list[KacEntry]: Строки, упорядоченные по (p, q)
    """
    entries = []
    for label in ns_pairs(level):
        kac = to_kac(label)
        entries.append(
            KacEntry(label=label, p=kac.p, q=kac.q, h=h_ns(kac), canonical=canonicalize(label))
        )
    return sorted(entries, key=lambda e: (e.p, e.q))
