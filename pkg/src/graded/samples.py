"""Библиотека примеров: полные, диагональные, с одним нечётным генератором и клиффордовы."""

from __future__ import annotations

import logging
from functools import reduce

import numpy as np
from beartype import beartype

from src.errors import DomainError
from src.graded.algebra import GradedAlgebra
from src.graded.space import GradedSpace, Matrix

logger = logging.getLogger(__name__)

MAX_MODES = 3

_PAULI_Z = np.diag([1.0, -1.0]).astype(np.complex128)
# a|1⟩ = |0⟩, заполненное состояние второе
_LOWER = np.array([[0, 1], [0, 0]], dtype=np.complex128)
_ID2 = np.eye(2, dtype=np.complex128)


def _elementary(d: int, i: int, j: int) -> Matrix:
    x = np.zeros((d, d), dtype=np.complex128)
    x[i, j] = 1
    return x


@beartype
def full_algebra(even: int, odd: int) -> GradedAlgebra:
    """M_d целиком; E_ij однородны при диагональной градуировке."""
    space = GradedSpace.standard(even, odd)
    d = space.dim
    generators = tuple(_elementary(d, i, j) for i in range(d) for j in range(d))
    return GradedAlgebra(space=space, generators=generators, name=f"full-{even}-{odd}")


@beartype
def diagonal_algebra(even: int, odd: int) -> GradedAlgebra:
    """Диагональные матрицы (чётная подалгебра)."""
    space = GradedSpace.standard(even, odd)
    d = space.dim
    generators = tuple(_elementary(d, i, i) for i in range(d))
    return GradedAlgebra(space=space, generators=generators, name=f"diagonal-{even}-{odd}")


@beartype
def scalar_algebra(even: int, odd: int) -> GradedAlgebra:
    """Только скаляры."""
    return GradedAlgebra(space=GradedSpace.standard(even, odd), generators=(), name=f"scalars-{even}-{odd}")


@beartype
def single_odd_algebra() -> GradedAlgebra:
    """span{I, c} в M_2, c = offdiag(1, 1), u = diag(1, −1)."""
    c = np.array([[0, 1], [1, 0]], dtype=np.complex128)
    return GradedAlgebra(space=GradedSpace.standard(1, 1), generators=(c,), name="single-odd")


def _kron_all(factors: list[Matrix]) -> Matrix:
    return reduce(np.kron, factors).astype(np.complex128)


@beartype
def annihilator(modes: int, k: int) -> Matrix:
    """a_k по Жордану-Вигнеру: Z ⊗ … ⊗ Z ⊗ a ⊗ I ⊗ … ⊗ I."""
    if not 0 <= k < modes:
        raise DomainError(f"Mode {k} outside 0..{modes - 1}")
    return _kron_all([_PAULI_Z] * k + [_LOWER] + [_ID2] * (modes - k - 1))


@beartype
def parity(modes: int) -> GradedSpace:
    """Градуировка чётностью числа фермионов u = Z ⊗ … ⊗ Z."""
    return GradedSpace(_kron_all([_PAULI_Z] * modes))


@beartype
def clifford_generator(modes: int, f: np.ndarray) -> Matrix:
    """c(f) = a(f) + a(f)*, a(f) антилинейно по f ∈ C^modes."""
    if f.shape != (modes,):
        raise DomainError(f"Vector f must have {modes} components")
    a_f = np.zeros((2**modes, 2**modes), dtype=np.complex128)
    for k in range(modes):
        a_f += np.conj(f[k]) * annihilator(modes, k)
    return (a_f + a_f.conj().T).astype(np.complex128)


@beartype
def clifford_algebra(modes: int, complex_structure: bool = False) -> GradedAlgebra:
    """Алгебра, порождённая c(e_k) (и c(i·e_k) при complex_structure).

    Raises:
        DomainError: Если modes вне 1..3
    """
    if not 1 <= modes <= MAX_MODES:
        raise DomainError(f"Clifford samples support 1..{MAX_MODES} modes, got {modes}")
    basis = np.eye(modes, dtype=np.complex128)
    vectors = list(basis) + ([1j * e for e in basis] if complex_structure else [])
    generators = tuple(clifford_generator(modes, f) for f in vectors)
    suffix = "-complex" if complex_structure else ""
    return GradedAlgebra(space=parity(modes), generators=generators, name=f"clifford-{modes}{suffix}")


@beartype
def car_check(modes: int, tolerance: float = 1e-12) -> bool:
    """[c(f), c(g)]_+ = 2·Re(f, g)·I на вещественном базисе {e_k, i·e_k}."""
    basis = np.eye(modes, dtype=np.complex128)
    vectors = list(basis) + [1j * e for e in basis]
    identity = np.eye(2**modes)
    for f in vectors:
        cf = clifford_generator(modes, f)
        for g in vectors:
            cg = clifford_generator(modes, g)
            expected = 2 * float(np.real(np.vdot(f, g))) * identity
            if np.max(np.abs(cf @ cg + cg @ cf - expected)) > tolerance:
                return False
    return True


@beartype
def sample_library() -> dict[str, GradedAlgebra]:
    """Все примеры в фиксированном порядке, d ≤ 8."""
    samples = [
        scalar_algebra(1, 1),
        full_algebra(1, 1),
        full_algebra(2, 2),
        diagonal_algebra(1, 1),
        diagonal_algebra(2, 1),
        single_odd_algebra(),
        clifford_algebra(1),
        clifford_algebra(2),
        clifford_algebra(2, complex_structure=True),
        clifford_algebra(3),
    ]
    return {algebra.name: algebra for algebra in samples}
