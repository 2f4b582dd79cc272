"""Построение колец слияния и операции над ними."""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Hashable, Mapping
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from beartype import beartype
from numpy.typing import NDArray

from src.errors import DomainError
from src.kac.labels import Level, NSLabel, Spin, canonicalize, enumerate_ns_basis

logger = logging.getLogger(__name__)

# (a, b, c) -> N_{ab}^c по индексам базиса
StructureConstants = Mapping[tuple[int, int, int], int]


@beartype
@dataclass(frozen=True, eq=False)
class FusionRing:
    """Кольцо слияния с конечным базисом и целыми N_{ab}^c ≥ 0."""

    basis: tuple[Hashable, ...]
    structure: StructureConstants
    unit: int
    level: int | None = None
    name: str = ""

    def __post_init__(self) -> None:
        size = len(self.basis)
        if not 0 <= self.unit < size:
            raise DomainError(f"Unit index {self.unit} outside basis of size {size}")
        if len(set(self.basis)) != size:
            raise DomainError("Fusion ring basis contains duplicates")
        for (a, b, c), mult in self.structure.items():
            if not (0 <= a < size and 0 <= b < size and 0 <= c < size):
                raise DomainError(f"Structure constant index {(a, b, c)} outside basis")
            if mult < 0:
                raise DomainError(f"Negative structure constant N{(a, b, c)} = {mult}")

    @property
    def size(self) -> int:
        """Размер базиса."""
        return len(self.basis)

    @cached_property
    def _positions(self) -> dict[Hashable, int]:
        return {label: idx for idx, label in enumerate(self.basis)}

    @cached_property
    def tensor(self) -> NDArray[np.int64]:
        """Плотный массив N[a, b, c]."""
        n = self.size
        dense = np.zeros((n, n, n), dtype=np.int64)
        for (a, b, c), mult in self.structure.items():
            dense[a, b, c] = mult
        return dense

    def index_of(self, label: Hashable) -> int:
        """Индекс метки в базисе.

        Raises:
            DomainError: Если метки нет в базисе
        """
        try:
            return self._positions[label]
        except KeyError:
            raise DomainError(f"Label {label} is not in the basis of {self.name or 'ring'}")

    def n(self, a: Hashable, b: Hashable, c: Hashable) -> int:
        """Структурная константа N_{ab}^c по меткам."""
        key = (self.index_of(a), self.index_of(b), self.index_of(c))
        return self.structure.get(key, 0)


@beartype
@dataclass(frozen=True, eq=False)
class FusionMatrix:
    """Матрица слияния (M_x)_{kj} = N_{xj}^k."""

    generator: Hashable
    entries: NDArray[np.int64]


@beartype
def su2_interval(a: Spin, b: Spin, n: int) -> list[Spin]:
    """Множество ⟨a, b⟩_n = {c = |a−b|, …, a+b : a+b+c ≤ n}, шаг 1.

    Args:
        a: Первый спин
        b: Второй спин
        n: Уровень усечения

    Returns:
        list[Spin]: Спины c по возрастанию
    """
    ta, tb = a.twice_spin, b.twice_spin
    return [
        Spin(tc)
        for tc in range(abs(ta - tb), ta + tb + 1, 2)
        if ta + tb + tc <= 2 * n
    ]


@beartype
def build_su2_ring(level: Level) -> FusionRing:
    """Кольцо R_ℓ: базис {0, ½, …, ℓ/2}, N_{ij}^k = 1 iff k ∈ ⟨i, j⟩_ℓ."""
    basis = tuple(Spin(t) for t in range(level.ell + 1))
    structure: dict[tuple[int, int, int], int] = {}
    for a in basis:
        for b in basis:
            for c in su2_interval(a, b, level.ell):
                structure[(a.twice_spin, b.twice_spin, c.twice_spin)] = 1
    return FusionRing(basis=basis, structure=structure, unit=0, level=level.ell, name=f"R_{level.ell}")


@beartype
def tensor_ring(r1: FusionRing, r2: FusionRing) -> FusionRing:
    """Тензорное произведение колец: N перемножаются покомпонентно.

    Args:
        r1: Первое кольцо
        r2: Второе кольцо

    Returns:
        FusionRing: Кольцо с базисом из пар (a, a')
    """
    n2 = r2.size
    basis = tuple((x, y) for x in r1.basis for y in r2.basis)
    structure: dict[tuple[int, int, int], int] = {}
    for (a, b, c), m1 in r1.structure.items():
        for (a2, b2, c2), m2 in r2.structure.items():
            product = m1 * m2
            if product:
                structure[(a * n2 + a2, b * n2 + b2, c * n2 + c2)] = product
    return FusionRing(
        basis=basis,
        structure=structure,
        unit=r1.unit * n2 + r2.unit,
        level=r1.level,
        name=f"{r1.name}⊗{r2.name}",
    )


def _lift(label: NSLabel, use_image: bool) -> NSLabel:
    return label.involution() if use_image else label


@beartype
def build_ns_ring(level: Level, lifts: tuple[bool, bool] = (False, False)) -> FusionRing:
    """Кольцо T_m прямой формулой: ⟨i, j⟩_ℓ × ⟨i', j'⟩_{ℓ+2}, затем канонизация.

    Args:
        level: Уровень ℓ
        lifts: Брать ли образ инволюции вместо канонического представителя
            для первого и второго сомножителя

    Returns:
        FusionRing: Кольцо T_m с кратностями, просуммированными по классам
    """
    basis = tuple(enumerate_ns_basis(level))
    positions = {x: idx for idx, x in enumerate(basis)}
    ell = level.ell
    structure: dict[tuple[int, int, int], int] = {}
    for a_idx, a in enumerate(basis):
        la = _lift(a, lifts[0])
        for b_idx, b in enumerate(basis):
            lb = _lift(b, lifts[1])
            counts: Counter[NSLabel] = Counter()
            for c in su2_interval(la.i, lb.i, ell):
                for c_prime in su2_interval(la.i_prime, lb.i_prime, ell + 2):
                    counts[canonicalize(NSLabel(c, c_prime, level))] += 1
            for c_label, mult in counts.items():
                structure[(a_idx, b_idx, positions[c_label])] = mult
    logger.debug(f"Built T_{level.m} with {len(basis)} classes, lifts={lifts}")
    return FusionRing(
        basis=basis,
        structure=structure,
        unit=positions[NSLabel.from_doubled(0, 0, ell)],
        level=ell,
        name=f"T_{level.m}",
    )


@beartype
def quotient_by_involution(product: FusionRing, level: Level) -> FusionRing:
    """Фактор R_ℓ ⊗ R_{ℓ+2} по инволюции, ограниченный сектором NS.

    Args:
        product: Результат tensor_ring(R_ℓ, R_{ℓ+2})
        level: Уровень ℓ

    Returns:
        FusionRing: Кольцо на классах, кратности суммируются по орбитам
    """
    basis = tuple(enumerate_ns_basis(level))
    positions = {x: idx for idx, x in enumerate(basis)}
    structure: Counter[tuple[int, int, int]] = Counter()
    for a_idx, a in enumerate(basis):
        ta = product.index_of((a.i, a.i_prime))
        for b_idx, b in enumerate(basis):
            tb = product.index_of((b.i, b.i_prime))
            row = product.tensor[ta, tb]
            for tc in np.flatnonzero(row):
                c, c_prime = product.basis[int(tc)]
                target = canonicalize(NSLabel(c, c_prime, level))
                structure[(a_idx, b_idx, positions[target])] += int(row[tc])
    return FusionRing(
        basis=basis,
        structure=dict(structure),
        unit=positions[NSLabel.from_doubled(0, 0, level.ell)],
        level=level.ell,
        name=f"T_{level.m}",
    )


@beartype
def fuse(ring: FusionRing, a: Hashable, b: Hashable) -> list[tuple[Hashable, int]]:
    """Разложение a ⊠ b по базису в порядке базиса."""
    row = ring.tensor[ring.index_of(a), ring.index_of(b)]
    return [(ring.basis[int(c)], int(row[c])) for c in np.flatnonzero(row)]


@beartype
def dual(ring: FusionRing, a: Hashable) -> Hashable | None:
    """Двойственный элемент: единственный b с N_{ab}^{unit} ≥ 1, иначе None."""
    column = ring.tensor[ring.index_of(a), :, ring.unit]
    candidates = np.flatnonzero(column)
    if len(candidates) != 1:
        return None
    return ring.basis[int(candidates[0])]


@beartype
def fusion_matrix(ring: FusionRing, x: Hashable) -> FusionMatrix:
    """Матрица слияния генератора x.

    Raises:
        DomainError: Если x нет в базисе
    """
    entries = np.ascontiguousarray(ring.tensor[ring.index_of(x)].T, dtype=np.int64)
    return FusionMatrix(generator=x, entries=entries)


@beartype
def with_structure_constant(
    ring: FusionRing, key: tuple[int, int, int], delta: int
) -> FusionRing:
    """Копия кольца с N[key] += delta (для мутационных тестов)."""
    structure = dict(ring.structure)
    structure[key] = structure.get(key, 0) + delta
    return FusionRing(
        basis=ring.basis,
        structure=structure,
        unit=ring.unit,
        level=ring.level,
        name=f"{ring.name}*",
    )
