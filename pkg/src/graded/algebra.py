"""Градуированные матричные алгебры: замыкание, коммутант и суперкоммутант.

Подпространства M_d хранятся ортонормированными базисами по норме
Фробениуса; линейные отображения X ↦ aXb записываются через vec(X)
построчно: vec(aXb) = (a ⊗ bᵀ) vec(X).
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from beartype import beartype
from numpy.typing import NDArray
from scipy.linalg import null_space, orth

from src.errors import DomainError, InvariantViolation
from src.graded.space import GradedSpace, Matrix

logger = logging.getLogger(__name__)

SUBSPACE_TOLERANCE = 1e-10

# Базис подпространства: массив (k, d, d)
SubspaceBasis = NDArray[np.complex128]


@beartype
def super_commutator(x: Matrix, y: Matrix, space: GradedSpace) -> Matrix:
    """[x, y]_τ = [x0,y0] + [x0,y1] + [x1,y0] + [x1,y1]_+.

    Raises:
        DomainError: Если размерности не совпадают
    """
    if x.shape != y.shape or x.shape != space.u.shape:
        raise DomainError(f"Shapes {x.shape}, {y.shape} do not match the graded space")
    x0, x1 = space.even_part(x), space.odd_part(x)
    y0, y1 = space.even_part(y), space.odd_part(y)
    return (
        (x0 @ y0 - y0 @ x0)
        + (x0 @ y1 - y1 @ x0)
        + (x1 @ y0 - y0 @ x1)
        + (x1 @ y1 + y1 @ x1)
    )


def _vec(matrices: Iterable[Matrix], dim: int) -> NDArray[np.complex128]:
    columns = [np.asarray(m, dtype=np.complex128).reshape(dim * dim) for m in matrices]
    if not columns:
        return np.zeros((dim * dim, 0), dtype=np.complex128)
    return np.stack(columns, axis=1)


def _unvec(columns: NDArray[np.complex128], dim: int) -> SubspaceBasis:
    return np.ascontiguousarray(columns.T.reshape(-1, dim, dim), dtype=np.complex128)


@beartype
def span_basis(matrices: Sequence[Matrix], dim: int, tolerance: float = SUBSPACE_TOLERANCE) -> SubspaceBasis:
    """Ортонормированный базис линейной оболочки матриц."""
    stacked = _vec(matrices, dim)
    if stacked.shape[1] == 0 or not np.any(np.abs(stacked) > tolerance):
        return np.zeros((0, dim, dim), dtype=np.complex128)
    return _unvec(orth(stacked, rcond=tolerance), dim)


@beartype
def containment_residual(basis: SubspaceBasis, matrices: SubspaceBasis) -> float:
    """Максимальная невязка проекции матриц на оболочку ортонормированного базиса."""
    if matrices.shape[0] == 0:
        return 0.0
    dim = matrices.shape[1]
    b = _vec(basis, dim)
    x = _vec(matrices, dim)
    projected = b @ (b.conj().T @ x) if b.shape[1] else np.zeros_like(x)
    return float(np.max(np.abs(x - projected)))


@beartype
def same_span(first: SubspaceBasis, second: SubspaceBasis, tolerance: float = SUBSPACE_TOLERANCE) -> bool:
    """Совпадают ли оболочки (взаимное вложение)."""
    return (
        first.shape[0] == second.shape[0]
        and containment_residual(first, second) < tolerance
        and containment_residual(second, first) < tolerance
    )


@beartype
@dataclass(frozen=True, eq=False)
class GradedAlgebra:
    """Унитальная *-алгебра, порождённая однородными матрицами.

    Attributes:
        space: Градуированное пространство
        generators: Однородные порождающие
        name: Имя для отчётов
    """

    space: GradedSpace
    generators: tuple[Matrix, ...]
    name: str = ""

    def __post_init__(self) -> None:
        for idx, g in enumerate(self.generators):
            if g.shape != self.space.u.shape:
                raise DomainError(f"Generator {idx} has shape {g.shape}, expected {self.space.u.shape}")
            if not self.space.is_homogeneous(g):
                raise DomainError(f"Generator {idx} of {self.name or 'algebra'} is not homogeneous")

    @property
    def dim(self) -> int:
        """Размерность пространства d."""
        return self.space.dim

    @cached_property
    def star_generators(self) -> tuple[Matrix, ...]:
        """Порождающие вместе с сопряжёнными."""
        return self.generators + tuple(g.conj().T for g in self.generators)

    @cached_property
    def closure(self) -> SubspaceBasis:
        """Базис порождённой алгебры: произведения до стабилизации ранга."""
        d = self.dim
        basis = span_basis([np.eye(d, dtype=np.complex128), *self.star_generators], d)
        while True:
            products = [b @ g for b in basis for g in self.star_generators]
            grown = span_basis([*basis, *products], d)
            if grown.shape[0] == basis.shape[0]:
                return grown
            basis = grown

    def is_tau_invariant(self) -> bool:
        """Переводит ли τ алгебру в себя."""
        images = np.stack([self.space.tau(b) for b in self.closure])
        return containment_residual(self.closure, images) < SUBSPACE_TOLERANCE

    def is_star_closed(self) -> bool:
        """Замкнута ли оболочка относительно сопряжения."""
        adjoints = np.stack([b.conj().T for b in self.closure])
        return containment_residual(self.closure, adjoints) < SUBSPACE_TOLERANCE


def _kron_commutator(g: Matrix) -> NDArray[np.complex128]:
    identity = np.eye(g.shape[0])
    return np.kron(g, identity) - np.kron(identity, g.T)


def _kron_super_commutator(g: Matrix, space: GradedSpace) -> NDArray[np.complex128]:
    # Для нечётного g: b ↦ g b − (u b u) g
    identity = np.eye(g.shape[0])
    u = space.u
    return np.kron(g, identity) - np.kron(u, (u @ g).T)


def _null_basis(maps: list[NDArray[np.complex128]], dim: int) -> SubspaceBasis:
    if not maps:
        return _unvec(np.eye(dim * dim, dtype=np.complex128), dim)
    kernel = null_space(np.vstack(maps), rcond=SUBSPACE_TOLERANCE)
    return _unvec(kernel, dim)


@beartype
def commutant(algebra: GradedAlgebra) -> SubspaceBasis:
    """Базис A' = {b : [g, b] = 0 для всех порождающих и сопряжённых}."""
    maps = [_kron_commutator(g) for g in algebra.star_generators]
    basis = _null_basis(maps, algebra.dim)
    logger.debug(f"Commutant of {algebra.name}: dimension {basis.shape[0]}")
    return basis


@beartype
def supercommutant_by_nullspace(algebra: GradedAlgebra) -> SubspaceBasis:
    """A^♮ как ядро b ↦ [g, b]_τ по однородным частям порождающих."""
    space = algebra.space
    maps = []
    for g in algebra.star_generators:
        even, odd = space.even_part(g), space.odd_part(g)
        if np.any(np.abs(even) > SUBSPACE_TOLERANCE):
            maps.append(_kron_commutator(even))
        if np.any(np.abs(odd) > SUBSPACE_TOLERANCE):
            maps.append(_kron_super_commutator(odd, space))
    return _null_basis(maps, algebra.dim)


@beartype
def supercommutant_by_klein(algebra: GradedAlgebra) -> SubspaceBasis:
    """A^♮ как κ A' κ*."""
    kappa = algebra.space.kappa
    conjugated = [kappa @ b @ kappa.conj().T for b in commutant(algebra)]
    return span_basis(conjugated, algebra.dim)


@beartype
def supercommutant(algebra: GradedAlgebra) -> SubspaceBasis:
    """Суперкоммутант, вычисленный двумя способами и сверенный.

    Returns:
        SubspaceBasis: Базис A^♮ (из ядра)

    Raises:
        InvariantViolation: Если ядро и κA'κ* дают разные подпространства
    """
    direct = supercommutant_by_nullspace(algebra)
    via_klein = supercommutant_by_klein(algebra)
    if not same_span(direct, via_klein):
        raise InvariantViolation(
            f"Supercommutant of {algebra.name} disagrees: nullspace dim {direct.shape[0]}, "
            f"κA'κ* dim {via_klein.shape[0]}"
        )
    return direct


def _algebra_of_span(space: GradedSpace, basis: SubspaceBasis, name: str) -> GradedAlgebra:
    parts: list[Matrix] = []
    for b in basis:
        for part in (space.even_part(b), space.odd_part(b)):
            if np.any(np.abs(part) > SUBSPACE_TOLERANCE):
                parts.append(part.astype(np.complex128))
    return GradedAlgebra(space=space, generators=tuple(parts), name=name)


@beartype
def double_commutant_check(algebra: GradedAlgebra) -> bool:
    """A'' = A."""
    first = _algebra_of_span(algebra.space, commutant(algebra), f"{algebra.name}'")
    return same_span(commutant(first), algebra.closure)


@beartype
def double_supercommutant_check(algebra: GradedAlgebra) -> bool:
    """A^♮♮ = A для τ-инвариантной *-алгебры с единицей.

    Raises:
        DomainError: Если алгебра не τ-инвариантна
    """
    if not algebra.is_tau_invariant():
        raise DomainError(f"{algebra.name} is not τ-invariant")
    first = _algebra_of_span(algebra.space, supercommutant(algebra), f"{algebra.name}♮")
    second = supercommutant(first)
    return same_span(second, algebra.closure)


@beartype
def klein_identities_check(space: GradedSpace, tolerance: float = 1e-12) -> bool:
    """Проверить uxu = ±x и κxκ* = x либо −i·u·x на однородных частях E_ij.

    Заодно проверяются унитарность κ и κ² = u.
    """
    kappa = space.kappa
    kappa_star = kappa.conj().T
    d = space.dim
    identity = np.eye(d)

    def close(a: Matrix, b: Matrix) -> bool:
        return bool(np.max(np.abs(a - b), initial=0.0) <= tolerance)

    if not (close(kappa @ kappa_star, identity) and close(kappa @ kappa, space.u)):
        return False
    for i in range(d):
        for j in range(d):
            x = np.zeros((d, d), dtype=np.complex128)
            x[i, j] = 1
            x0, x1 = space.even_part(x), space.odd_part(x)
            checks = (
                close(space.tau(x0), x0),
                close(space.tau(x1), -x1),
                close(kappa @ x0 @ kappa_star, x0),
                close(kappa @ x1 @ kappa_star, -1j * space.u @ x1),
            )
            if not all(checks):
                return False
    return True
