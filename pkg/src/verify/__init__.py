"""Набор инвариантов и его прогон."""

from __future__ import annotations
