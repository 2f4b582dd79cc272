"""Тесты ns-fusionkit."""
