"""Загрузчик настроек вычислений с валидацией."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

from beartype import beartype

logger = logging.getLogger(__name__)

# Значения по умолчанию, совпадающие с config.json в корне
DEFAULT_SETTINGS: dict[str, Any] = {
    "tolerances": {
        "acceptance": 1e-8,
        "convergence": 1e-13,
        "ode": 1e-12,
        "match": 1e-8,
        "subspace": 1e-10,
        "duality": 1e-6,
    },
    "sweeps": {
        "kac_m_max": 20,
        "weight_level_max": 10,
        "triangle_level_max": 6,
        "ring_level_max": 8,
        "quotient_level_max": 6,
        "qdim_level_max": 10,
        "density_window": 12,
        "density_mode_bound": 3,
    },
    "fuchsian": {
        "series_order": 60,
        "random_trials": 20,
        "scalar_trials": 10,
        "max_dimension": 3,
        "power_iterations": 100000,
    },
    "output": {
        "significant_digits": 10,
    },
}


class ConfigError(Exception):
    """Ошибка конфигурации."""
    pass


@beartype
class KitConfig:
    """Настройки допусков, размеров перебора и вывода."""

    def __init__(self, config_path: str | Path = "config.json") -> None:
        """Инициализация настроек.

        Args:
            config_path: Путь к файлу настроек

        Raises:
            ConfigError: При ошибке загрузки или валидации
        """
        self.config_path = Path(config_path)
        self._data: dict[str, Any] = {}
        self._load()
        self._validate()

    @staticmethod
    def defaults() -> KitConfig:
        """Настройки по умолчанию без файла."""
        config = KitConfig.__new__(KitConfig)
        config.config_path = Path("<defaults>")
        config._data = json.loads(json.dumps(DEFAULT_SETTINGS))
        config._validate()
        return config

    def _load(self) -> None:
        """Загрузить настройки из файла."""
        try:
            with open(self.config_path, "r", encoding="utf-8") as f:
                self._data = json.load(f)
            logger.info(f"Configuration loaded from {self.config_path}")
        except FileNotFoundError:
            raise ConfigError(f"Configuration file not found: {self.config_path}")
        except json.JSONDecodeError as e:
            raise ConfigError(f"Invalid JSON in configuration file: {e}")
        except Exception as e:
            raise ConfigError(f"Error loading configuration: {e}")

    def _validate(self) -> None:
        """Валидация настроек."""
        if not isinstance(self._data, dict):
            raise ConfigError("Configuration root must be a JSON object")
        # Проверка обязательных секций
        for section in DEFAULT_SETTINGS:
            if section not in self._data:
                raise ConfigError(f"Missing required section: {section}")

        tolerances = self._data["tolerances"]
        for key in DEFAULT_SETTINGS["tolerances"]:
            value = tolerances.get(key)
            if not isinstance(value, int | float) or not 0.0 < value < 1.0:
                raise ConfigError(f"Tolerance {key} must be in (0, 1), got {value!r}")

        sweeps = self._data["sweeps"]
        for key in DEFAULT_SETTINGS["sweeps"]:
            value = sweeps.get(key)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ConfigError(f"Sweep bound {key} must be a nonnegative integer, got {value!r}")
        if sweeps["kac_m_max"] < 2:
            raise ConfigError("Sweep bound kac_m_max must be at least 2")
        if sweeps["density_window"] <= 2 * sweeps["density_mode_bound"]:
            raise ConfigError("density_window must exceed twice density_mode_bound")

        fuchsian = self._data["fuchsian"]
        for key in DEFAULT_SETTINGS["fuchsian"]:
            value = fuchsian.get(key)
            if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
                raise ConfigError(f"Fuchsian setting {key} must be a positive integer, got {value!r}")

        digits = self._data["output"].get("significant_digits")
        if not isinstance(digits, int) or not 1 <= digits <= 17:
            raise ConfigError("Output significant_digits must be between 1 and 17")

    # Удобные геттеры
    @property
    def acceptance_tol(self) -> float:
        """Допуск сравнения вещественных результатов."""
        return float(self._data["tolerances"]["acceptance"])

    @property
    def convergence_tol(self) -> float:
        """Порог сходимости степенного метода."""
        return float(self._data["tolerances"]["convergence"])

    @property
    def ode_tol(self) -> float:
        """Допуск интегратора ОДУ."""
        return float(self._data["tolerances"]["ode"])

    @property
    def match_tol(self) -> float:
        """Допуск сверки базисов решений."""
        return float(self._data["tolerances"]["match"])

    @property
    def subspace_tol(self) -> float:
        """Допуск равенства подпространств."""
        return float(self._data["tolerances"]["subspace"])

    @property
    def duality_tol(self) -> float:
        """Допуск закона (c⁻¹)ᵀ."""
        return float(self._data["tolerances"]["duality"])

    @property
    def series_order(self) -> int:
        """Порядок рядов Фробениуса."""
        return int(self._data["fuchsian"]["series_order"])

    @property
    def random_trials(self) -> int:
        """Число случайных систем в проверке двойственности."""
        return int(self._data["fuchsian"]["random_trials"])

    @property
    def scalar_trials(self) -> int:
        """Число случайных скалярных систем в проверке точной формулы."""
        return int(self._data["fuchsian"]["scalar_trials"])

    @property
    def max_dimension(self) -> int:
        """Наибольшая размерность случайных систем."""
        return int(self._data["fuchsian"]["max_dimension"])

    @property
    def power_iterations(self) -> int:
        """Предел итераций степенного метода."""
        return int(self._data["fuchsian"]["power_iterations"])

    @property
    def significant_digits(self) -> int:
        """Значащие цифры вещественных чисел в выводе."""
        return int(self._data["output"]["significant_digits"])

    def sweep(self, name: str) -> int:
        """Граница перебора по имени.

        Raises:
            ConfigError: Если такой границы нет
        """
        try:
            return int(self._data["sweeps"][name])
        except KeyError:
            raise ConfigError(f"Unknown sweep bound: {name}")

    def get(self, key: str, default: Any = None) -> Any:
        """Получить значение из настроек.

        Args:
            key: Ключ (может быть вложенным, например "tolerances.ode")
            default: Значение по умолчанию

        Returns:
            Any: Значение или default
        """
        keys = key.split(".")
        value = self._data
        for k in keys:
            if isinstance(value, dict):
                value = value.get(k)
                if value is None:
                    return default
            else:
                return default
        return value
