"""Обработчики команд: у каждого модуля есть register(subparsers) и handle(args, settings)."""

from __future__ import annotations

from src.cli.handlers import braid, fields, fuse, graded, graph, index, kac, qdim, verify

# Порядок регистрации совпадает с порядком в справке
COMMANDS = (kac, fuse, qdim, index, fields, graph, braid, graded, verify)
