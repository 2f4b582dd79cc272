"""Конфигурация приложения из переменных окружения."""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from beartype import beartype
from dotenv import load_dotenv

# Загрузка переменных окружения из .env файла
load_dotenv()

DEFAULT_SEED = 20240601


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got '{raw}'")


@beartype
@dataclass(frozen=True)
class Config:
    """Конфигурация приложения."""

    # Воспроизводимость случайных выборок
    seed: int

    # Логирование
    log_level: str
    log_file: str

    # Файл настроек с допусками и размерами перебора
    settings_path: Path

    @staticmethod
    def from_env() -> Config:
        """Создать конфигурацию из переменных окружения.

        Returns:
            Config: Объект конфигурации

        Raises:
            ValueError: Если FUSIONKIT_SEED не целое
        """
        return Config(
            seed=_int_env("FUSIONKIT_SEED", DEFAULT_SEED),
            log_level=os.getenv("FUSIONKIT_LOG_LEVEL", "WARNING"),
            log_file=os.getenv("FUSIONKIT_LOG_FILE", ""),
            settings_path=Path(os.getenv("FUSIONKIT_CONFIG", "config.json")),
        )


@beartype
def get_config() -> Config:
    """Получить глобальную конфигурацию приложения.

    Returns:
        Config: Объект конфигурации
    """
    return Config.from_env()
