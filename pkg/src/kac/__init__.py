"""Точная арифметика конформных весов: спины SU(2), таблица Каца NS, идентификация меток."""

from __future__ import annotations
