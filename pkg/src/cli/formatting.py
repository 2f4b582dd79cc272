"""Запись результата команды и её отображения: JSON, CSV и выровненная таблица.

JSON — канонический формат, CSV и таблица строятся из того же словаря.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Literal

import numpy as np
from beartype import beartype

from src.errors import DomainError
from src.kac.labels import Level, NSLabel, Spin

OutputFormat = Literal["json", "csv", "table"]
FORMATS: tuple[OutputFormat, ...] = ("json", "csv", "table")

Row = dict[str, Any]


@beartype
@dataclass(frozen=True)
class OutputRecord:
    """Результат одной команды.

    Attributes:
        command: Имя команды
        inputs: Разобранные входные параметры
        results: Строки результата
        tolerances: Использованные допуски
        checks: Итог каждой проверки
        notes: Пояснения к проваленным проверкам (только для stderr)
    """

    command: str
    inputs: Mapping[str, Any]
    results: Sequence[Row]
    tolerances: Mapping[str, float] = field(default_factory=dict)
    checks: Mapping[str, bool] = field(default_factory=dict)
    notes: Mapping[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """Прошли ли все проверки."""
        return all(self.checks.values())

    @property
    def failures(self) -> list[str]:
        """Имена проваленных проверок в порядке записи."""
        return [name for name, ok in self.checks.items() if not ok]


@beartype
def round_significant(value: float, digits: int) -> float:
    """Округлить до digits значащих цифр."""
    if not np.isfinite(value):
        return value
    return float(f"{value:.{digits}g}")


@beartype
def to_plain(value: Any, digits: int = 10) -> Any:
    """Привести значение к JSON-совместимому виду.

    Дроби становятся строками "p/q", спины — удвоенными целыми,
    метки косета — парами [2i, 2i'], комплексные числа — парами [re, im].

    Raises:
        DomainError: Если тип не поддерживается
    """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return round_significant(value, digits)
    if isinstance(value, complex):
        return [round_significant(value.real, digits), round_significant(value.imag, digits)]
    if isinstance(value, np.generic):
        return to_plain(value.item(), digits)
    if isinstance(value, np.ndarray):
        return [to_plain(x, digits) for x in value.tolist()]
    if isinstance(value, NSLabel):
        return list(value.doubled)
    if isinstance(value, Spin):
        return value.twice_spin
    if isinstance(value, Level):
        return value.ell
    if isinstance(value, Mapping):
        return {str(k): to_plain(v, digits) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [to_plain(x, digits) for x in value]
    raise DomainError(f"Cannot render value of type {type(value).__name__}")


@beartype
def record_to_json(record: OutputRecord, digits: int = 10) -> dict[str, Any]:
    """Словарь записи для json.dumps."""
    return {
        "command": record.command,
        "inputs": to_plain(record.inputs, digits),
        "results": to_plain(list(record.results), digits),
        "tolerances": to_plain(record.tolerances, digits),
        "checks": dict(record.checks),
        "passed": record.passed,
    }


def _columns(rows: Sequence[Row]) -> list[str]:
    columns: list[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    return columns


def _cell(value: Any) -> str:
    if isinstance(value, list | dict):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    if value is None:
        return ""
    return str(value)


@beartype
def render_csv(record: OutputRecord, digits: int = 10) -> str:
    """Строки результата в CSV, столбцы в порядке первого появления."""
    rows = to_plain(list(record.results), digits)
    columns = _columns(rows)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(column)) for column in columns])
    return buffer.getvalue()


@beartype
def render_table(record: OutputRecord, digits: int = 10) -> str:
    """Выровненная таблица результата и список проверок под ней."""
    rows = to_plain(list(record.results), digits)
    columns = _columns(rows)
    cells = [[_cell(row.get(column)) for column in columns] for row in rows]
    widths = [max([len(column)] + [len(line[idx]) for line in cells]) for idx, column in enumerate(columns)]

    lines = ["  ".join(column.ljust(width) for column, width in zip(columns, widths)).rstrip()]
    lines.append("  ".join("-" * width for width in widths))
    for line in cells:
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip())
    for name, ok in record.checks.items():
        lines.append(f"[{'OK' if ok else 'FAIL'}] {name}")
    return "\n".join(lines) + "\n"


@beartype
def render(record: OutputRecord, fmt: OutputFormat = "json", digits: int = 10) -> str:
    """Отобразить запись в выбранном формате.

    Args:
        record: Запись результата
        fmt: json, csv или table
        digits: Значащие цифры вещественных чисел

    Returns:
        str: Текст для stdout
    """
    if fmt == "csv":
        return render_csv(record, digits)
    if fmt == "table":
        return render_table(record, digits)
    return json.dumps(record_to_json(record, digits), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


@beartype
def failure_list(record: OutputRecord) -> str:
    """JSON-список проваленных проверок для stderr."""
    payload = [{"check": name, "detail": record.notes.get(name, "")} for name in record.failures]
    return json.dumps(payload, sort_keys=True, ensure_ascii=False)


@beartype
def error_failure_list(command: str, error: Exception) -> str:
    """Список сбоев для stderr, когда команда прервана исключением."""
    payload = [{"check": command, "detail": f"{type(error).__name__}: {error}"}]
    return json.dumps(payload, sort_keys=True, ensure_ascii=False)
