"""Фуксовы системы f' = (P/z + Q/(1−z)) f: ряды Фробениуса, продолжение, матрицы переноса."""

from __future__ import annotations
