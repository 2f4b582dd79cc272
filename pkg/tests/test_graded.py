"""Тесты градуированных алгебр и суперкоммутанта."""

from __future__ import annotations

import numpy as np
import pytest

from src.errors import DomainError
from src.graded.algebra import (
    GradedAlgebra,
    commutant,
    double_commutant_check,
    double_supercommutant_check,
    klein_identities_check,
    same_span,
    span_basis,
    super_commutator,
    supercommutant,
    supercommutant_by_klein,
    supercommutant_by_nullspace,
)
from src.graded.samples import (
    annihilator,
    car_check,
    clifford_algebra,
    full_algebra,
    parity,
    sample_library,
    single_odd_algebra,
)
from src.graded.space import GradedSpace

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
ID2 = np.eye(2, dtype=np.complex128)


def test_single_odd_supercommutant_is_span_of_sigma_y():
    """A = span{I, σ_x}: A' = A, A^♮ = span{I, σ_y}."""
    algebra = single_odd_algebra()
    assert same_span(commutant(algebra), span_basis([ID2, SIGMA_X], 2))
    assert same_span(supercommutant(algebra), span_basis([ID2, SIGMA_Y], 2))


def test_super_commutator_of_odd_elements_is_anticommutator():
    """[σ_x, σ_x]_τ = 2I, [σ_x, σ_y]_τ = 0."""
    space = GradedSpace.standard(1, 1)
    np.testing.assert_allclose(super_commutator(SIGMA_X, SIGMA_X, space), 2 * ID2)
    np.testing.assert_allclose(super_commutator(SIGMA_X, SIGMA_Y, space), np.zeros((2, 2)))


def test_klein_identities():
    """κ унитарен, κ² = u, сопряжение по правилам на однородных частях."""
    assert klein_identities_check(GradedSpace.standard(2, 1))
    assert klein_identities_check(parity(2))


def test_supercommutant_two_ways_on_library():
    """Ядро и κA'κ* дают одно подпространство."""
    for algebra in sample_library().values():
        assert same_span(supercommutant_by_nullspace(algebra), supercommutant_by_klein(algebra)), algebra.name


def test_double_commutants_on_library():
    """A'' = A и A^♮♮ = A для всех примеров."""
    for algebra in sample_library().values():
        assert double_commutant_check(algebra), algebra.name
        assert double_supercommutant_check(algebra), algebra.name


def test_full_algebra_has_scalar_supercommutant():
    """M_d: A^♮ = C·I."""
    assert supercommutant(full_algebra(2, 2)).shape[0] == 1
    assert full_algebra(1, 1).closure.shape[0] == 4


def test_clifford_closures():
    """Клиффорд: span{I, σ_x} на одной моде, размерность 4 на двух, M_4 с комплексной структурой."""
    assert clifford_algebra(1).closure.shape[0] == 2
    assert clifford_algebra(2).closure.shape[0] == 4
    assert clifford_algebra(2, complex_structure=True).closure.shape[0] == 16
    with pytest.raises(DomainError):
        clifford_algebra(4)


def test_car_relations():
    """[c(f), c(g)]_+ = 2Re⟨f, g⟩ при 1..3 модах."""
    for modes in (1, 2, 3):
        assert car_check(modes)


def test_annihilators_anticommute():
    """a_0 a_1 + a_1 a_0 = 0 и a_0 a_0* + a_0* a_0 = I."""
    a0, a1 = annihilator(2, 0), annihilator(2, 1)
    np.testing.assert_allclose(a0 @ a1 + a1 @ a0, np.zeros((4, 4)))
    np.testing.assert_allclose(a0 @ a0.conj().T + a0.conj().T @ a0, np.eye(4))
    with pytest.raises(DomainError):
        annihilator(2, 2)


def test_invalid_spaces_and_generators():
    """u² ≠ I и неоднородные порождающие отвергаются."""
    with pytest.raises(DomainError):
        GradedSpace(np.diag([1.0, 2.0]).astype(np.complex128))
    with pytest.raises(DomainError):
        GradedSpace.standard(0, 0)
    mixed = np.array([[1, 1], [0, 1]], dtype=np.complex128)
    with pytest.raises(DomainError):
        GradedAlgebra(space=GradedSpace.standard(1, 1), generators=(mixed,))


def test_library_names():
    """Библиотека содержит все примеры в фиксированном порядке."""
    assert list(sample_library()) == [
        "scalars-1-1",
        "full-1-1",
        "full-2-2",
        "diagonal-1-1",
        "diagonal-2-1",
        "single-odd",
        "clifford-1",
        "clifford-2",
        "clifford-2-complex",
        "clifford-3",
    ]
    assert all(algebra.is_tau_invariant() and algebra.is_star_closed() for algebra in sample_library().values())
