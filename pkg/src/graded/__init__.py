"""Z2-градуированные матричные алгебры: суперкоммутант и преобразование Клейна."""

from __future__ import annotations
