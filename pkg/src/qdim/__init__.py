"""Квантовые размерности: формулы через синусы и собственный вектор Перрона-Фробениуса."""

from __future__ import annotations
