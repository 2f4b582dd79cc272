"""Пакет ns-fusionkit: кольцо слияния дискретной серии Невё-Шварца."""
