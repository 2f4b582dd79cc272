"""Тесты модулей плотностей на конечном окне."""

from __future__ import annotations

from fractions import Fraction

import pytest

from src.errors import DomainError
from src.density.module import (
    BasisVector,
    DensityModule,
    G,
    L,
    Mode,
    Relation,
    build_mode,
    check_relation,
    covariance_consistency,
    module_for_field,
    sector_grading_check,
    standard_relations,
)
from src.kac.labels import NSLabel
from src.kac.weights import delta_ns

HALF = Fraction(1, 2)


def test_g_acts_on_w_sector():
    """λ = ½, μ = 0: G_½ w_{−½} = ½ v_0."""
    module = DensityModule(lam=HALF, mu=Fraction(0), sigma=0, window=4)
    operator = build_mode(module, G(HALF))
    result = operator.apply({BasisVector("w", -HALF): Fraction(1)})
    assert result == {BasisVector("v", Fraction(0)): HALF}


def test_virasoro_bracket_holds():
    """[L_1, L_{−1}] = 2L_0 при λ = ¾, μ = ⅓, W = 12."""
    module = DensityModule(lam=Fraction(3, 4), mu=Fraction(1, 3), sigma=0, window=12)
    assert check_relation(module, Relation("LL", Fraction(1), Fraction(-1)))


@pytest.mark.parametrize("sigma", [0, 1])
@pytest.mark.parametrize("lam,mu", [(Fraction(0), Fraction(0)), (HALF, Fraction(1, 3)), (Fraction(1), Fraction(-1, 4))])
def test_all_relations_hold(lam, mu, sigma):
    """Все соотношения с |индексами| ≤ 3 выполняются точно."""
    module = DensityModule(lam=lam, mu=mu, sigma=sigma, window=12)
    operators = {}
    for relation in standard_relations(3):
        for mode in (*relation.modes, relation.rhs[1]):
            if mode not in operators:
                operators[mode] = build_mode(module, mode)
        assert check_relation(module, relation, operators=operators), str(relation)


def test_perturbed_coefficient_is_detected():
    """Изменённый коэффициент L_1 на v_0 ломает [L_1, L_{−1}]."""
    module = DensityModule(lam=Fraction(3, 4), mu=Fraction(1, 3), sigma=0, window=12)
    mutated = build_mode(module, L(1)).perturbed(BasisVector("v", Fraction(0)), Fraction(1))
    relation = Relation("LL", Fraction(1), Fraction(-1))
    assert not check_relation(module, relation, operators={L(1): mutated})


def test_covariance_with_h_equal_one_minus_lambda():
    """Действие L_n согласовано с ковариантностью при h = 1 − λ."""
    module = DensityModule(lam=Fraction(2, 3), mu=Fraction(1, 5), sigma=1, window=10)
    for n in range(-3, 4):
        assert covariance_consistency(module, n, module.conformal_weight)
    assert not covariance_consistency(module, 2, module.conformal_weight + 1)


def test_sector_grading():
    """L сохраняет сектор, G меняет его."""
    module = DensityModule(lam=HALF, mu=Fraction(0), sigma=1, window=6)
    assert sector_grading_check(build_mode(module, L(2)))
    assert sector_grading_check(build_mode(module, G(Fraction(-3, 2))))


def test_window_indices():
    """σ = 1: v-индексы полуцелые, w-индексы целые."""
    module = DensityModule(lam=HALF, mu=Fraction(0), sigma=1, window=1)
    assert module.indices("v") == [-HALF, HALF]
    assert module.indices("w") == [Fraction(-1), Fraction(0), Fraction(1)]


def test_mode_validation():
    """L_n с полуцелым n и G_s с целым s недопустимы."""
    with pytest.raises(DomainError):
        Mode("L", HALF)
    with pytest.raises(DomainError):
        G(Fraction(1))
    with pytest.raises(DomainError):
        DensityModule(lam=HALF, mu=Fraction(0), sigma=2, window=4)


def test_window_too_small():
    """Окно меньше суммы индексов мод — ошибка."""
    module = DensityModule(lam=HALF, mu=Fraction(0), sigma=0, window=2)
    with pytest.raises(DomainError):
        check_relation(module, Relation("LL", Fraction(2), Fraction(2)))
    with pytest.raises(DomainError):
        build_mode(module, L(3))


def test_module_for_field_offset():
    """Смещение h + μ равно Δ поля."""
    vacuum = NSLabel.from_doubled(0, 0, 1)
    x = NSLabel.from_doubled(1, 1, 1)
    module = module_for_field(x, vacuum, "alpha", 0, window=8)
    assert module.lam == Fraction(9, 10)
    assert module.mu == Fraction(1, 10)
    assert module.conformal_weight + module.mu == delta_ns(x, vacuum, x)
