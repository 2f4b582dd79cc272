"""Тесты точной арифметики весов и меток."""

from __future__ import annotations

from fractions import Fraction

import pytest

from src.errors import DomainError
from src.kac.labels import (
    KacLabel,
    Level,
    NSLabel,
    Spin,
    alpha_label,
    beta_label,
    canonicalize,
    enumerate_ns_basis,
    from_kac,
    ns_pairs,
    to_kac,
)
from src.kac.weights import (
    c_coefficient,
    delta_ns,
    delta_su2,
    h_label,
    h_ns,
    h_su2,
    kac_table,
    triangle_relation_check,
    weight_relation_check,
)


def label(twice_i: int, twice_i_prime: int, ell: int) -> NSLabel:
    return NSLabel.from_doubled(twice_i, twice_i_prime, ell)


def test_spin_rejects_negative():
    """Отрицательный удвоенный спин недопустим."""
    with pytest.raises(DomainError):
        Spin(-1)


def test_spin_from_value():
    """Спин из значения i ∈ ½ℤ хранится удвоенным."""
    assert Spin.from_value(Fraction(1, 2)).twice_spin == 1
    assert Spin.from_value(2).twice_spin == 4
    with pytest.raises(DomainError):
        Spin.from_value(Fraction(1, 3))


def test_h_su2_values():
    """h_i^ℓ = (i² + i)/(ℓ + 2)."""
    assert h_su2(Spin(0), Level(5)) == 0
    assert h_su2(Spin(1), Level(1)) == Fraction(1, 4)
    assert h_su2(Spin(2), Level(2)) == Fraction(1, 2)


def test_h_su2_out_of_range():
    """Спин больше ℓ/2 — ошибка области."""
    with pytest.raises(DomainError):
        h_su2(Spin(3), Level(2))


def test_h_ns_examples():
    """Вакуум и поле с весом 1/10 при m = 3."""
    assert h_ns(KacLabel(1, 1, 3)) == 0
    assert h_ns(KacLabel(1, 3, 3)) == Fraction(1, 10)
    assert h_ns(KacLabel(2, 2, 3)) == Fraction(1, 10)


def test_kac_label_rejects_ramond_parity():
    """p ≢ q (mod 2) — сектор Рамона, не поддерживается."""
    with pytest.raises(DomainError):
        KacLabel(1, 2, 3)


def test_kac_label_ranges():
    """Границы 1 ≤ p ≤ m−1 и 1 ≤ q ≤ m+1."""
    with pytest.raises(DomainError):
        KacLabel(3, 1, 3)
    with pytest.raises(DomainError):
        KacLabel(1, 5, 3)
    with pytest.raises(DomainError):
        KacLabel(1, 1, 1)


def test_identification_symmetry_up_to_m_20():
    """h_pq = h_{m−p, m+2−q} точно для всех m ≤ 20."""
    for m in range(2, 21):
        for p in range(1, m):
            for q in range(1, m + 2):
                if (p - q) % 2 == 0:
                    kac = KacLabel(p, q, m)
                    assert h_ns(kac) == h_ns(kac.mirror())


def test_kac_round_trip():
    """to_kac и from_kac взаимно обратны."""
    x = label(1, 3, 2)
    assert to_kac(x) == KacLabel(2, 4, 4)
    assert from_kac(to_kac(x)) == x


def test_ns_label_rejects_ramond_pair():
    """i − i' ∉ ℤ недопустимо."""
    with pytest.raises(DomainError):
        label(0, 1, 1)


def test_canonicalize_idempotent_and_class_invariant():
    """Канонизация идемпотентна и постоянна на классе."""
    for ell in range(0, 7):
        for x in ns_pairs(Level(ell)):
            c = canonicalize(x)
            assert canonicalize(c) == c
            assert canonicalize(x.involution()) == c


def test_basis_sizes():
    """ℓ = 0: один класс, ℓ = 1: два, ℓ = 2: четыре."""
    assert enumerate_ns_basis(Level(0)) == [label(0, 0, 0)]
    assert len(enumerate_ns_basis(Level(1))) == 2
    assert len(enumerate_ns_basis(Level(2))) == 4


def test_level_one_weights():
    """При ℓ = 1 веса классов — 0 и 1/10."""
    weights = sorted(h_label(x) for x in enumerate_ns_basis(Level(1)))
    assert weights == [Fraction(0), Fraction(1, 10)]


def test_charge_classes():
    """При ℓ = 1 классы α и β совпадают, при ℓ = 2 различны."""
    assert alpha_label(Level(1)) == beta_label(Level(1))
    assert alpha_label(Level(2)) == label(1, 1, 2)
    assert beta_label(Level(2)) == label(0, 2, 2)


def test_weight_relation_exhaustive():
    """h_i = h_pq + h_i' − ½(i − i')² для всех ℓ ≤ 10."""
    for ell in range(0, 11):
        level = Level(ell)
        for x in ns_pairs(level):
            assert weight_relation_check(x.i, x.i_prime, level)


def test_delta_example():
    """Δ = h(target) − h(source) + h(charge): (½,½) <- (0,0) зарядом (½,½) при ℓ = 1."""
    x = label(1, 1, 1)
    vacuum = label(0, 0, 1)
    assert delta_ns(x, vacuum, x) == Fraction(1, 5)


def test_delta_rejects_mixed_levels():
    """Метки разных уровней — ошибка."""
    with pytest.raises(DomainError):
        delta_ns(label(0, 0, 1), label(0, 0, 2), label(0, 0, 1))


def test_delta_su2():
    """Δ_{ij}^{kℓ} для i = ½, j = 0, k = ½ при ℓ = 1 равно ½."""
    assert delta_su2(Spin(1), Spin(0), Spin(1), Level(1)) == Fraction(1, 2)


def test_c_coefficient():
    """C = ½[(i−i')² − (j−j')² + (k−k')²]."""
    assert c_coefficient(Spin(0), Spin(2), Spin(0), Spin(0), Spin(0), Spin(0)) == Fraction(1, 2)
    assert c_coefficient(Spin(1), Spin(1), Spin(0), Spin(2), Spin(0), Spin(0)) == Fraction(-1, 2)


def test_triangle_relation_exhaustive():
    """Треугольное соотношение для всех троек при ℓ ≤ 3."""
    for ell in range(0, 4):
        pairs = ns_pairs(Level(ell))
        for target in pairs:
            for source in pairs:
                for charge in pairs:
                    assert triangle_relation_check(target, source, charge)


def test_kac_table_marks_classes():
    """Таблица при ℓ = 1: четыре метки, по одному каноническому на класс."""
    table = kac_table(Level(1))
    assert len(table) == 4
    assert sum(1 for entry in table if entry.is_canonical) == 2
    for entry in table:
        assert entry.h == h_label(entry.canonical)
    assert [(e.p, e.q) for e in table] == sorted((e.p, e.q) for e in table)
