"""Кольца слияния R_ℓ, их тензорное произведение и кольцо Невё-Шварца T_m."""

from __future__ import annotations
