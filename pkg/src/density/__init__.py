"""Модули плотностей F^σ_{λ,μ} и проверка соотношений алгебры Невё-Шварца."""

from __future__ import annotations
