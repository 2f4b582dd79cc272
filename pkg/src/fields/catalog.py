"""Предикаты конструируемости первичных полей и структура их сплетения.

Заряд NS-поля задаётся видом ("alpha" или "beta"), а не классом:
при ℓ = 1 классы α и β совпадают, а правила для полей различны.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal

import networkx as nx
from beartype import beartype

from src.errors import DomainError, UnsupportedError
from src.fusion.ring import su2_interval
from src.kac.labels import (
    Level,
    NSLabel,
    Rational,
    Spin,
    canonicalize,
    enumerate_ns_basis,
    ns_pairs,
    vacuum_label,
)
from src.kac.weights import delta_ns, delta_su2, h_label, same_level

logger = logging.getLogger(__name__)

ChargeKind = Literal["alpha", "beta"]
CHARGES: tuple[ChargeKind, ...] = ("alpha", "beta")

_HALF = Spin(1)
_ONE = Spin(2)


@beartype
def parse_charge(name: str) -> ChargeKind:
    """Проверить имя заряда.

    Raises:
        DomainError: Если заряд не α и не β
    """
    if name == "alpha":
        return "alpha"
    if name == "beta":
        return "beta"
    raise DomainError(f"Unsupported charge '{name}', expected 'alpha' or 'beta'")


@beartype
def charge_label(kind: ChargeKind, level: Level) -> NSLabel:
    """Пара заряда до идентификации: α = (½, ½), β = (0, 1)."""
    if kind == "alpha":
        return NSLabel.from_doubled(1, 1, level.ell)
    return NSLabel.from_doubled(0, 2, level.ell)


@beartype
@dataclass(frozen=True)
class FieldSpec:
    """Первичное поле φ: source -> target с зарядом и модированием σ."""

    target: NSLabel
    source: NSLabel
    charge: ChargeKind
    sigma: int

    def __post_init__(self) -> None:
        if self.sigma not in (0, 1):
            raise DomainError(f"sigma must be 0 or 1, got {self.sigma}")
        same_level(self.target, self.source)

    @property
    def level(self) -> Level:
        """Уровень ℓ меток поля."""
        return self.target.level


@beartype
def su2_nonzero(i: Spin, j: Spin, k: Spin, level: Level) -> bool:
    """Отлично ли от нуля первичное поле SU(2) спина k из j в i.

    Спин ½: j = i ± ½ и i + j + ½ ≤ ℓ. Спин 1: i ∈ ⟨1, j⟩_ℓ,
    то есть |i − j| ≤ 1 ≤ i + j и i + j + 1 ≤ ℓ.

    Args:
        i: Спин цели
        j: Спин источника
        k: Спин поля (½ или 1)
        level: Уровень ℓ

    Returns:
        bool: Значение предиката

    Raises:
        DomainError: Если k не ½ и не 1 или спины вне диапазона
    """
    if k not in (_HALF, _ONE):
        raise UnsupportedError(f"Primary fields of spin {k} are not supported")
    if not (level.admits(i) and level.admits(j)):
        raise DomainError(f"Spins ({i}, {j}) out of range for level {level.ell}")
    return i in su2_interval(k, j, level.ell)


@beartype
def assigned_sigma(target: NSLabel, source: NSLabel, charge: ChargeKind) -> int | None:
    """σ по правилу знаков, None если поле не конструируемо.

    α: σ = 0 при одинаковых знаках сдвигов j − i и j' − i', иначе 1.
    β: σ = 0 при j' = i' ± 1, σ = 1 при j' = i'.
    """
    level = same_level(target, source)
    shifted = level.shifted()
    if charge == "alpha":
        if not (
            su2_nonzero(target.i, source.i, _HALF, level)
            and su2_nonzero(target.i_prime, source.i_prime, _HALF, shifted)
        ):
            return None
        same_sign = (source.i > target.i) == (source.i_prime > target.i_prime)
        return 0 if same_sign else 1
    if target.i != source.i or not su2_nonzero(target.i_prime, source.i_prime, _ONE, shifted):
        return None
    return 1 if target.i_prime == source.i_prime else 0


@beartype
def ns_constructible(spec: FieldSpec) -> bool:
    """Конструируемо ли поле с данным σ.

    Поле α строится из φ^{½,ℓ}_{ij} ⊗ φ^{½,ℓ+2}_{i'j'}, поле β из
    тождественного на уровне ℓ и φ^{1,ℓ+2}_{i'j'}.
    """
    return assigned_sigma(spec.target, spec.source, spec.charge) == spec.sigma


@beartype
def sigma_from_delta(target: NSLabel, source: NSLabel, charge: ChargeKind) -> int:
    """σ ≡ 2·(Δ_ns + Δ_{ℓ+2} − Δ_ℓ) mod 2, т.е. 2C mod 2."""
    level = same_level(target, source)
    k = charge_label(charge, level)
    total = (
        delta_ns(target, source, k)
        + delta_su2(target.i_prime, source.i_prime, k.i_prime, level.shifted())
        - delta_su2(target.i, source.i, k.i, level)
    )
    doubled = 2 * total
    if doubled.denominator != 1:
        raise DomainError(f"Offset 2Δ = {doubled} is not an integer for {source} -> {target}")
    return int(doubled) % 2


@beartype
@dataclass(frozen=True)
class SigmaMismatch:
    """Поле, где правило знаков и чётность Δ дали разные σ."""

    target: NSLabel
    source: NSLabel
    charge: ChargeKind
    by_sign: int
    by_delta: int


@beartype
def sigma_consistency_report(level: Level) -> list[SigmaMismatch]:
    """Сравнить оба способа определить σ на всех конструируемых полях."""
    mismatches = []
    pairs = ns_pairs(level)
    for charge in CHARGES:
        for source in pairs:
            for target in pairs:
                by_sign = assigned_sigma(target, source, charge)
                if by_sign is None:
                    continue
                by_delta = sigma_from_delta(target, source, charge)
                if by_sign != by_delta:
                    mismatches.append(SigmaMismatch(target, source, charge, by_sign, by_delta))
    if mismatches:
        logger.warning(f"[WARNING] {len(mismatches)} σ mismatches at level {level.ell}")
    return mismatches


@beartype
def adjacency_set(x: NSLabel, charge: ChargeKind) -> set[NSLabel]:
    """⟨charge, x⟩: классы y с ненулевым полем x -> y при каком-либо σ.

    Args:
        x: Источник (любой представитель класса)
        charge: Вид заряда

    Returns:
        set[NSLabel]: Канонические классы целей
    """
    return {
        canonicalize(y)
        for y in ns_pairs(x.level)
        if assigned_sigma(y, x, charge) is not None
    }


def _class_members(x: NSLabel) -> tuple[NSLabel, NSLabel]:
    return x, x.involution()


def _adjacent_by_representatives(y: NSLabel, x: NSLabel, charge: ChargeKind) -> bool:
    return any(
        assigned_sigma(a, b, charge) is not None
        for a in _class_members(y)
        for b in _class_members(x)
    )


@beartype
def braiding_phase(
    target: NSLabel,
    source: NSLabel,
    intermediate_left: NSLabel,
    intermediate_right: NSLabel,
) -> Rational:
    """Показатель λ фазы e_λ: h(target) + h(source) − h(left) − h(right).

    Raises:
        DomainError: Если уровни меток различны
    """
    same_level(target, source, intermediate_left, intermediate_right)
    return (
        h_label(target)
        + h_label(source)
        - h_label(intermediate_left)
        - h_label(intermediate_right)
    )


def _reject_beta_beta(left: ChargeKind, right: ChargeKind) -> None:
    if left == "beta" and right == "beta":
        raise UnsupportedError("Braiding of two β fields is not supported")


@beartype
def braiding_support(
    left_charge: ChargeKind,
    right_charge: ChargeKind,
    outer: NSLabel,
    inner: NSLabel,
) -> set[NSLabel]:
    """Допустимые промежуточные классы: ⟨right, outer⟩ ∩ ⟨left, inner⟩.

    Raises:
        UnsupportedError: Для пары (β, β)
    """
    _reject_beta_beta(left_charge, right_charge)
    same_level(outer, inner)
    return adjacency_set(outer, right_charge) & adjacency_set(inner, left_charge)


@beartype
def braiding_support_brute_force(
    left_charge: ChargeKind,
    right_charge: ChargeKind,
    outer: NSLabel,
    inner: NSLabel,
) -> set[NSLabel]:
    """То же, перебором классов и всех их представителей."""
    _reject_beta_beta(left_charge, right_charge)
    level = same_level(outer, inner)
    return {
        y
        for y in enumerate_ns_basis(level)
        if _adjacent_by_representatives(y, outer, right_charge)
        and _adjacent_by_representatives(y, inner, left_charge)
    }


@beartype
def is_abelian_braiding(
    left_charge: ChargeKind,
    right_charge: ChargeKind,
    outer: NSLabel,
    inner: NSLabel,
) -> bool:
    """Сплетение сводится к фазе, если промежуточный класс единственный."""
    return len(braiding_support(left_charge, right_charge, outer, inner)) == 1


@beartype
def field_graph(level: Level, charge: ChargeKind) -> nx.Graph:
    """Граф G_charge на классах: ребро x - y при y ∈ ⟨charge, x⟩."""
    graph = nx.Graph()
    basis = enumerate_ns_basis(level)
    graph.add_nodes_from(basis)
    for x in basis:
        for y in adjacency_set(x, charge):
            graph.add_edge(x, y)
    return graph


@beartype
def vacuum_distance(level: Level, charge: ChargeKind = "alpha") -> dict[NSLabel, int]:
    """Расстояние от вакуума в G_charge для достижимых классов."""
    lengths = nx.single_source_shortest_path_length(field_graph(level, charge), vacuum_label(level))
    return {label: int(depth) for label, depth in sorted(lengths.items(), key=lambda kv: kv[0].doubled)}

