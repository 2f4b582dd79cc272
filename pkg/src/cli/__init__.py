"""Командная строка: разбор аргументов, обработчики команд и форматы вывода."""

from __future__ import annotations
