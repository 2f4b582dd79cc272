"""Разбор меток и общих флагов командной строки."""

from __future__ import annotations

import argparse
from fractions import Fraction

from beartype import beartype

from src.cli.formatting import FORMATS
from src.errors import DomainError
from src.kac.labels import Level, NSLabel, Spin


@beartype
def parse_level(value: int) -> Level:
    """Уровень из целого флага.

    Raises:
        DomainError: Если уровень отрицателен
    """
    return Level(value)


def _doubled_component(text: str, as_value: bool) -> int:
    try:
        if as_value:
            return Spin.from_value(Fraction(text)).twice_spin
        return int(text)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"Cannot parse spin component '{text}'")


@beartype
def parse_label(text: str, level: Level) -> NSLabel:
    """Метка косета из строки.

    Принимаются удвоенные спины "2i,2i'" (например "0,2" для (0, 1))
    или значения спинов с дробью "1/2,1". Если хотя бы одна компонента
    содержит "/", обе читаются как значения.

    Args:
        text: Строка метки
        level: Уровень ℓ

    Returns:
        NSLabel: Метка (не канонизированная)

    Raises:
        DomainError: Если строка не разбирается или метка недопустима
    """
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2 or not all(parts):
        raise DomainError(f"Label '{text}' must have the form 2i,2i' or i,i' with fractions")
    as_value = any("/" in part for part in parts)
    twice_i, twice_i_prime = (_doubled_component(part, as_value) for part in parts)
    if twice_i < 0 or twice_i_prime < 0:
        raise DomainError(f"Label '{text}' has a negative spin")
    return NSLabel.from_doubled(twice_i, twice_i_prime, level.ell)


@beartype
def format_parent() -> argparse.ArgumentParser:
    """Общий родительский парсер с флагом --format."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--format",
        choices=FORMATS,
        default="json",
        help="Формат вывода (по умолчанию json)",
    )
    return parent
