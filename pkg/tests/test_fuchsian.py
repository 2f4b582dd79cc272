"""Тесты фуксовых систем, переноса и двойственности."""

from __future__ import annotations

import dataclasses
import json

import numpy as np
import pytest

from src.errors import DomainError, ResonanceError
from src.fuchsian.braiding import bare_transport, compose_ns_braiding
from src.fuchsian.frobenius import frobenius_basis
from src.fuchsian.system import (
    CANONICAL_PATH,
    FuchsianSystem,
    check_non_resonant,
    identity_system,
    random_scalar_pairs,
    random_system,
    scalar_system,
    validate_path,
)
from src.fuchsian.system_loader import load_system, system_from_dict, system_to_dict, transport_to_json
from src.fuchsian.transport import (
    contragredient_check,
    continue_solution,
    inverse_transpose_error,
    monodromy_check,
    transport_matrix,
)
from src.utils.config_loader import KitConfig

LOWER_ARC = (0.25 + 0j, 0.25 - 0.25j, -0.25 - 0.25j, -0.25 + 0j)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def test_scalar_transport_closed_form(rng):
    """Для z^a (1−z)^{−b} по нижней полуплоскости c = e^{−iπb} на 10 случайных парах."""
    pairs = random_scalar_pairs(rng, KitConfig.defaults().scalar_trials)
    assert len(pairs) == 10
    for a, b in pairs:
        assert abs(a) <= 0.5 and abs(b) <= 0.5
        c = transport_matrix(scalar_system(a, b)).c
        assert c.shape == (1, 1)
        assert abs(complex(c[0, 0]) - np.exp(-1j * np.pi * b)) < 1e-9, (a, b)


def test_scalar_continuation_to_negative_axis():
    """Продолжение ¼ -> −¼ снизу даёт (¼)^a e^{−iπa} (5/4)^{−b}."""
    a, b = 0.25, 0.1
    system = scalar_system(a, b)
    start = np.array([[0.25**a * 0.75 ** (-b)]], dtype=np.complex128)
    value = complex(continue_solution(system, start, LOWER_ARC)[0, 0])
    expected = 0.25**a * np.exp(-1j * np.pi * a) * 1.25 ** (-b)
    assert abs(value - expected) < 1e-9


def test_continuation_round_trip(rng):
    """Продолжение туда и обратно по тому же пути возвращает начальное значение."""
    settings = KitConfig.defaults()
    system = dataclasses.replace(random_system(rng, 2), ode_tol=settings.ode_tol)
    start = np.array([1.0 - 0.5j, 0.25 + 2j], dtype=np.complex128)
    there = continue_solution(system, start, LOWER_ARC)
    back = continue_solution(system, there, LOWER_ARC[::-1])
    assert np.max(np.abs(back - start)) < 1e-9
    assert np.max(np.abs(there - start)) > 1e-6


def test_continuation_of_zero_is_zero(rng):
    """Нулевое начальное значение остаётся нулём."""
    system = random_system(rng, 3)
    value = continue_solution(system, np.zeros(3, dtype=np.complex128), CANONICAL_PATH)
    assert value.shape == (3,)
    assert not np.any(value)


def test_identity_system_transport_is_identity():
    """P = Q = 0: решения постоянны, c = I."""
    transport = transport_matrix(identity_system(2))
    np.testing.assert_allclose(transport.c, np.eye(2), atol=1e-10)
    assert not transport.all_entries_nonzero
    assert transport.residual < 1e-10


def test_resonant_residue_rejected():
    """Собственные числа 0 и 1 у P — резонанс."""
    p = np.diag([0.0, 1.0]).astype(np.complex128)
    with pytest.raises(ResonanceError) as excinfo:
        FuchsianSystem(p=p, q=np.zeros((2, 2), dtype=np.complex128))
    assert excinfo.value.where == "P"
    check_non_resonant(np.diag([0.0, 0.5]).astype(np.complex128))


def test_resonance_at_infinity():
    """Резонансная Q − P обнаруживается при переходе к ∞."""
    p = np.zeros((2, 2), dtype=np.complex128)
    q = np.diag([0.0, 2.0]).astype(np.complex128)
    system = FuchsianSystem(p=p, q=q)
    with pytest.raises(ResonanceError) as excinfo:
        system.at_infinity()
    assert excinfo.value.where == "Q-P"


def test_shape_validation():
    """P и Q должны быть квадратными одного размера."""
    with pytest.raises(DomainError):
        FuchsianSystem(p=np.zeros((2, 3), dtype=np.complex128), q=np.zeros((2, 3), dtype=np.complex128))
    with pytest.raises(DomainError):
        FuchsianSystem(p=np.zeros((2, 2), dtype=np.complex128), q=np.zeros((1, 1), dtype=np.complex128))


def test_path_validation():
    """Путь не должен проходить рядом с 1 и должен начинаться у нуля."""
    validate_path(CANONICAL_PATH)
    with pytest.raises(DomainError):
        validate_path((0.25 + 0j, 4 + 0j))
    with pytest.raises(DomainError):
        validate_path((0.9 - 1j, 4 - 1j, 4 + 0j))
    with pytest.raises(DomainError):
        validate_path((0.25 + 0j,))
    with pytest.raises(DomainError, match="cut"):
        validate_path((0.25 + 0j, 0.25 - 1j, 3 - 1j, 3 + 1j, 4 + 1j, 4 + 0j))
    with pytest.raises(DomainError, match="cut"):
        validate_path((0.25 + 0j, 0.25 - 1j, 4 - 1j, 2 - 0.01j, 4 + 0j))


def test_gauge_series_solves_recursion(rng):
    """Ряд калибровки удовлетворяет уравнению в круге сходимости."""
    system = random_system(rng, 3)
    basis = frobenius_basis(system)
    assert basis.gauge_residual(0.3 + 0.1j) < 1e-9
    with pytest.raises(DomainError):
        basis(0.8 + 0j)


def test_contragredient_duality(rng):
    """Перенос двойственной системы равен (c⁻¹)ᵀ."""
    system = random_system(rng, 2)
    report = contragredient_check(system)
    assert report.passed, report


def test_scalar_dual_transport():
    """Для n = 1 перенос двойственной системы равен 1/c."""
    system = scalar_system(0.2, 0.3)
    c = transport_matrix(system, check_overlap=False).c
    c_dual = transport_matrix(system.dual(), check_overlap=False).c
    assert inverse_transpose_error(c, c_dual) < 1e-8
    assert abs(complex(c_dual[0, 0]) - np.exp(1j * np.pi * 0.3)) < 1e-8


def test_mutated_transport_detected(rng):
    """Изменение одного элемента на 1% нарушает закон (c⁻¹)ᵀ."""
    system = random_system(rng, 2)
    c = transport_matrix(system, check_overlap=False).c
    c_dual = transport_matrix(system.dual(), check_overlap=False).c.copy()
    position = np.unravel_index(int(np.argmax(np.abs(c_dual))), c_dual.shape)
    c_dual[position] *= 1.01
    assert inverse_transpose_error(c, c_dual) > 1e-6


def test_monodromy_around_zero(rng):
    """Обход нуля умножает базис на exp(2πiP)."""
    assert monodromy_check(random_system(rng, 2))


def test_overlap_residual_small():
    """Ряд и ОДУ согласованы в кольце перекрытия."""
    transport = transport_matrix(scalar_system(0.25, 0.1))
    assert transport.overlap_residual < 1e-8


def test_compose_with_trivial_shifted_transport():
    """С тождественным переносом уровня ℓ + 2 сплетение совпадает с c_ℓ на каналах."""
    c = np.array([[1.0, 2.0], [3.0, 4.0]], dtype=np.complex128)
    braiding = compose_ns_braiding(
        bare_transport(c),
        bare_transport(np.eye(2, dtype=np.complex128)),
        [(0, 0), (1, 1)],
    )
    np.testing.assert_allclose(braiding.entries, np.diag([1.0, 4.0]))
    assert braiding.nonzero == ((0, 0), (1, 1))


def test_compose_rejects_bad_channel():
    """Канал вне размеров матриц переноса — ошибка."""
    one = bare_transport(np.eye(1, dtype=np.complex128))
    with pytest.raises(DomainError):
        compose_ns_braiding(one, one, [(0, 1)])


def test_system_file_round_trip(tmp_path):
    """Система, записанная через system_to_dict, загружается обратно."""
    system = scalar_system(0.25, 0.1)
    path = tmp_path / "scalar.json"
    path.write_text(json.dumps(system_to_dict(system)), encoding="utf-8")
    loaded = load_system(path)
    np.testing.assert_array_equal(loaded.p, system.p)
    np.testing.assert_array_equal(loaded.q, system.q)
    assert loaded.path == system.path


def test_system_loader_errors(tmp_path):
    """Нарушения формата дают DomainError."""
    with pytest.raises(DomainError):
        system_from_dict({"n": 0, "P": [], "Q": []})
    with pytest.raises(DomainError):
        system_from_dict({"n": 1, "P": [[[0.1]]], "Q": [[[0.0, 0.0]]]})
    with pytest.raises(DomainError):
        system_from_dict({"n": 1, "P": [[[0.1, 0.0]]], "Q": [[[0.0, 0.0]]], "series_order": "60"})
    with pytest.raises(DomainError):
        load_system(tmp_path / "missing.json")


def test_transport_json_keys():
    """Выгрузка переноса содержит c и невязки."""
    data = transport_to_json(transport_matrix(scalar_system(0.25, 0.1)))
    assert set(data) == {"c", "residual", "condition", "overlap_residual", "all_entries_nonzero"}
    assert data["all_entries_nonzero"] is True
