"""Главная точка входа: python -m src.main <команда> [флаги]."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from beartype import beartype

from src.cli.formatting import error_failure_list, failure_list, render
from src.cli.handlers import COMMANDS
from src.config import Config, get_config
from src.errors import DomainError, InvariantViolation, NumericError
from src.utils.config_loader import ConfigError, KitConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


@beartype
def build_parser() -> argparse.ArgumentParser:
    """Парсер со всеми командами."""
    parser = argparse.ArgumentParser(
        prog="fusionkit",
        description="Кольцо слияния серии Невё-Шварца, квантовые размерности и проверки",
    )
    parser.add_argument("--config", default=None, help="Файл настроек (по умолчанию FUSIONKIT_CONFIG)")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


@beartype
def setup_logging(config: Config) -> None:
    """Логи в stderr (stdout занят результатом) и, по желанию, в файл."""
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if config.log_file:
        handlers.append(logging.FileHandler(config.log_file, encoding="utf-8"))
    level = logging.getLevelName(config.log_level.upper())
    logging.basicConfig(
        level=level if isinstance(level, int) else logging.WARNING,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
        force=True,
    )
    if not isinstance(level, int):
        logger.warning(f"[WARNING] Unknown log level '{config.log_level}', using WARNING")


@beartype
def load_settings(explicit: str | None, config: Config) -> KitConfig:
    """Настройки из --config, иначе из FUSIONKIT_CONFIG или значения по умолчанию.

    Raises:
        ConfigError: Если явно указанный файл не загружается
    """
    if explicit is not None:
        return KitConfig(explicit)
    path = Path(config.settings_path)
    if path.exists():
        return KitConfig(path)
    logger.info(f"Settings file {path} not found, using built-in defaults")
    return KitConfig.defaults()


@beartype
def main(argv: Sequence[str] | None = None) -> int:
    """Разобрать аргументы, выполнить команду и вернуть код выхода.

    Returns:
        int: 0 — успех, 1 — нарушен инвариант, 2 — ошибка использования
    """
    try:
        config = get_config()
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    setup_logging(config)

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        settings = load_settings(args.config, config)
        record = args.handler(args, settings)
    except (DomainError, ConfigError) as e:
        logger.error(f"[ERROR] {e}")
        return EXIT_USAGE
    except (InvariantViolation, NumericError) as e:
        logger.error(f"[FAIL] {e}")
        print(error_failure_list(args.command, e), file=sys.stderr)
        return EXIT_FAILED

    sys.stdout.write(render(record, args.format, settings.significant_digits))
    if not record.passed:
        print(failure_list(record), file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
