"""Тесты квантовых размерностей и индексов."""

from __future__ import annotations

import math

import pytest

from src.errors import DomainError, InvariantViolation
from src.fusion.ring import build_ns_ring
from src.kac.labels import Level, NSLabel, Spin, alpha_label, beta_label
from src.qdim.dimensions import (
    DimVector,
    beta_index_set,
    beta_saturation_check,
    closed_form_dims,
    jones_admissible,
    pf_dims,
    qdim_ns,
    qdim_su2,
    subfactor_index,
    verify_multiplicativity,
)

PHI = (1 + math.sqrt(5)) / 2


def test_golden_ratio_at_level_one():
    """d(ε) = φ и индекс φ² при ℓ = 1."""
    eps = NSLabel.from_doubled(0, 2, 1)
    assert qdim_ns(eps) == pytest.approx(1.6180339887, abs=1e-9)
    assert subfactor_index(eps) == pytest.approx(2.6180339887, abs=1e-9)


def test_qdim_su2_values():
    """d(H_0) = 1, d(H_½) при ℓ = 2 равно √2."""
    assert qdim_su2(Spin(0), Level(4)) == pytest.approx(1.0)
    assert qdim_su2(Spin(1), Level(2)) == pytest.approx(math.sqrt(2))
    with pytest.raises(DomainError):
        qdim_su2(Spin(3), Level(2))


def test_pf_matches_closed_form():
    """Перрон-Фробениус по α совпадает с формулой для ℓ ≤ 8."""
    for ell in range(1, 9):
        level = Level(ell)
        ring = build_ns_ring(level)
        closed = closed_form_dims(ring, alpha_label(level))
        pf = pf_dims(ring, alpha_label(level))
        for x in ring.basis:
            assert pf[x] == pytest.approx(closed[x], abs=1e-9)
        assert pf.eigenvalue == pytest.approx(closed.eigenvalue, abs=1e-9)


def test_pf_at_level_one_gives_phi():
    """При ℓ = 1 собственное число M_ε равно φ."""
    level = Level(1)
    dims = pf_dims(build_ns_ring(level), alpha_label(level))
    assert dims.eigenvalue == pytest.approx(PHI, abs=1e-9)


def test_pf_rejects_non_generator():
    """β при ℓ = 2 не слабый генератор."""
    level = Level(2)
    with pytest.raises(DomainError):
        pf_dims(build_ns_ring(level), beta_label(level))


def test_multiplicativity():
    """d(x)d(y) = Σ N_{xy}^z d(z) и нарушение при искажении d."""
    level = Level(3)
    ring = build_ns_ring(level)
    dims = closed_form_dims(ring, alpha_label(level))
    assert verify_multiplicativity(ring, dims)
    skewed = DimVector(
        values={x: dims[x] * (1.1 if x == alpha_label(level) else 1.0) for x in ring.basis},
        eigenvalue=dims.eigenvalue,
    )
    assert not verify_multiplicativity(ring, skewed)


def test_dim_vector_rejects_small_values():
    """Размерность меньше 1 — нарушение инварианта."""
    with pytest.raises(InvariantViolation):
        DimVector(values={"x": 0.5}, eigenvalue=1.0)


def test_beta_saturation():
    """Равенство для β ⊠ x выполняется при ℓ ≤ 8."""
    for ell in range(0, 9):
        assert beta_saturation_check(Level(ell))


def test_beta_saturation_detects_truncated_index_set():
    """Урезанное индексное множество ломает равенство."""
    assert not beta_saturation_check(Level(2), index_set=lambda x: beta_index_set(x)[:-1])


def test_beta_index_set_keeps_repeats():
    """β ⊠ α при ℓ = 2 даёт класс α дважды."""
    level = Level(2)
    terms = beta_index_set(alpha_label(level))
    assert terms.count(alpha_label(level)) == 2


def test_jones_admissible():
    """4cos²(π/5) и значения ≥ 4 допустимы, 3.5 — нет."""
    assert jones_admissible(PHI**2)
    assert jones_admissible(4.5)
    assert jones_admissible(1.0)
    assert not jones_admissible(3.5)

