"""Первичные поля: предикаты конструируемости, множества смежности и фазы сплетения."""

from __future__ import annotations
