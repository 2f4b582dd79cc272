"""Загрузка настроек из config.json."""
