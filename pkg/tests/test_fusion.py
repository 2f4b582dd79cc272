"""Тесты колец слияния R_ℓ и T_m."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import pytest

from src.errors import DomainError
from src.fusion.axioms import (
    verify_associativity,
    verify_commutativity,
    verify_frobenius,
    verify_unit,
    weak_generator_check,
)
from src.fusion.ring import (
    FusionRing,
    build_ns_ring,
    build_su2_ring,
    dual,
    fuse,
    fusion_matrix,
    quotient_by_involution,
    su2_interval,
    tensor_ring,
    with_structure_constant,
)
from src.fusion.serialization import load_ring, ring_from_json, ring_to_json, save_ring
from src.kac.labels import Level, NSLabel, Spin, alpha_label, beta_label


DATA_DIR = Path(__file__).parent / "data"


def label(twice_i: int, twice_i_prime: int, ell: int) -> NSLabel:
    return NSLabel.from_doubled(twice_i, twice_i_prime, ell)


def test_su2_interval_truncation():
    """⟨½, ½⟩_1 = {0}, ⟨½, ½⟩_2 = {0, 1}."""
    assert su2_interval(Spin(1), Spin(1), 1) == [Spin(0)]
    assert su2_interval(Spin(1), Spin(1), 2) == [Spin(0), Spin(2)]


def test_ising_like_ring_at_level_one():
    """T_3: ε ⊠ ε = 1 + ε."""
    ring = build_ns_ring(Level(1))
    vacuum, eps = label(0, 0, 1), label(0, 2, 1)
    assert ring.basis == (vacuum, eps)
    assert fuse(ring, eps, eps) == [(vacuum, 1), (eps, 1)]


def test_fusion_matrix_of_epsilon():
    """M_ε = [[0, 1], [1, 1]]."""
    ring = build_ns_ring(Level(1))
    matrix = fusion_matrix(ring, label(0, 2, 1))
    np.testing.assert_array_equal(matrix.entries, np.array([[0, 1], [1, 1]]))


def test_multiplicity_two_at_level_two():
    """При ℓ = 2: α ⊠ α = 1 + 2·(0, 1) + (0, 2)."""
    ring = build_ns_ring(Level(2))
    alpha = alpha_label(Level(2))
    assert fuse(ring, alpha, alpha) == [
        (label(0, 0, 2), 1),
        (label(0, 2, 2), 2),
        (label(0, 4, 2), 1),
    ]


def test_level_zero_ring_is_trivial():
    """ℓ = 0: один класс, 1 ⊠ 1 = 1."""
    ring = build_ns_ring(Level(0))
    assert ring.size == 1
    assert fuse(ring, label(0, 0, 0), label(0, 0, 0)) == [(label(0, 0, 0), 1)]


def test_ns_ring_axioms():
    """Единица, ассоциативность, коммутативность и Фробениус для ℓ ≤ 6."""
    for ell in range(0, 7):
        ring = build_ns_ring(Level(ell))
        assert verify_unit(ring)
        assert verify_associativity(ring)
        assert verify_commutativity(ring)
        ok, detail = verify_frobenius(ring)
        assert ok, detail


def test_su2_ring_axioms():
    """R_ℓ — самодвойственное кольцо слияния."""
    for ell in range(0, 6):
        ring = build_su2_ring(Level(ell))
        assert verify_unit(ring)
        assert verify_associativity(ring)
        assert verify_frobenius(ring)[0]
        assert dual(ring, Spin(ell)) == Spin(ell)


def test_lift_independence():
    """Результат не зависит от выбора представителей классов."""
    for ell in range(0, 5):
        level = Level(ell)
        reference = build_ns_ring(level).tensor
        for lifts in ((False, True), (True, False), (True, True)):
            np.testing.assert_array_equal(build_ns_ring(level, lifts).tensor, reference)


def test_quotient_matches_direct_formula():
    """Фактор R_ℓ ⊗ R_{ℓ+2} по инволюции совпадает с прямой формулой."""
    for ell in range(0, 5):
        level = Level(ell)
        product = tensor_ring(build_su2_ring(level), build_su2_ring(level.shifted()))
        quotient = quotient_by_involution(product, level)
        direct = build_ns_ring(level)
        assert quotient.basis == direct.basis
        np.testing.assert_array_equal(quotient.tensor, direct.tensor)


@pytest.mark.parametrize("ell", range(1, 7))
def test_ring_matches_golden_file(ell):
    """Оба пути построения T_m дают сохранённый JSON кольца."""
    level = Level(ell)
    golden = json.loads((DATA_DIR / f"ns_ring_level_{ell}.json").read_text(encoding="utf-8"))
    quotient = quotient_by_involution(
        tensor_ring(build_su2_ring(level), build_su2_ring(level.shifted())), level
    )
    assert ring_to_json(build_ns_ring(level)) == golden
    assert ring_to_json(quotient) == golden


def test_golden_level_two_multiplicities():
    """В сохранённом кольце ℓ = 2 есть α ⊠ α ∋ 2·(0, 1)."""
    golden = json.loads((DATA_DIR / "ns_ring_level_2.json").read_text(encoding="utf-8"))
    assert golden["basis"] == [[0, 0], [0, 2], [0, 4], [1, 1]]
    assert [3, 3, 1, 2] in golden["N"]


def test_weak_generators():
    """α порождает T_m слабо, β при ℓ = 2 — нет."""
    for ell in range(1, 6):
        ring = build_ns_ring(Level(ell))
        assert weak_generator_check(ring, alpha_label(Level(ell)))
    assert not weak_generator_check(build_ns_ring(Level(2)), beta_label(Level(2)))


def test_mutation_breaks_frobenius():
    """Лишняя единица в N_{αα}^1 ломает взаимность Фробениуса."""
    level = Level(2)
    ring = build_ns_ring(level)
    alpha = ring.index_of(alpha_label(level))
    mutated = with_structure_constant(ring, (alpha, alpha, ring.unit), 1)
    assert not verify_frobenius(mutated)[0]


def test_ring_validation():
    """Отрицательные константы и единица вне базиса отвергаются."""
    with pytest.raises(DomainError):
        FusionRing(basis=(Spin(0),), structure={(0, 0, 0): -1}, unit=0)
    with pytest.raises(DomainError):
        FusionRing(basis=(Spin(0),), structure={}, unit=1)
    with pytest.raises(DomainError):
        build_ns_ring(Level(1)).index_of(label(1, 1, 2))


def test_ring_file_round_trip(tmp_path):
    """Кольцо, записанное в файл, читается обратно без изменений."""
    ring = build_ns_ring(Level(3))
    path = tmp_path / "t5.json"
    save_ring(ring, path)
    loaded = load_ring(path)
    assert loaded.basis == ring.basis
    assert loaded.unit == ring.unit
    np.testing.assert_array_equal(loaded.tensor, ring.tensor)
    assert loaded.name == "t5"
    assert json.loads(path.read_text(encoding="utf-8")) == ring_to_json(ring)


def test_ring_json_errors(tmp_path):
    """Повреждённые данные дают DomainError."""
    with pytest.raises(DomainError):
        ring_from_json({"level": 1})
    with pytest.raises(DomainError):
        ring_from_json({"level": 1, "basis": [[1, 1, 1]], "N": []})
    with pytest.raises(DomainError):
        load_ring(tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(DomainError):
        load_ring(broken)
