"""Тесты реестра инвариантов и прогона."""

from __future__ import annotations

from src.errors import DomainError
from src.utils.config_loader import KitConfig
from src.verify.cases import CASES, InvariantCase, case_ids
from src.verify.runner import run_case, run_suite, select_cases


def test_case_ids_unique_and_prefixed():
    """Имена случаев уникальны и начинаются с имени модуля."""
    ids = case_ids()
    assert len(ids) == len(set(ids))
    prefixes = {"kac", "fusion", "qdim", "fields", "density", "fuchsian", "graded"}
    assert {case_id.split(".")[0] for case_id in ids} == prefixes


def test_every_module_has_a_mutation_case():
    """Мутационные случаи есть для кольца, размерностей, плотностей и переноса."""
    mutations = {case.id for case in select_cases("mutation")}
    assert mutations == {"fusion.mutation", "qdim.beta_mutation", "density.mutation", "fuchsian.mutation"}


def test_select_cases():
    """Выбор по подстроке, пустой шаблон — все случаи."""
    assert select_cases(None) == list(CASES)
    assert select_cases("") == list(CASES)
    selected = select_cases("graded.")
    assert selected and all(case.id.startswith("graded.") for case in selected)
    assert select_cases("no-such-case") == []


def test_run_suite_on_exact_cases():
    """Точные случаи при малом уровне проходят."""
    settings = KitConfig.defaults()
    cases = select_cases("kac.") + select_cases("fusion.") + select_cases("fields.")
    results = run_suite(2, settings, cases)
    assert [r.case_id for r in results] == [case.id for case in cases]
    assert all(r.passed for r in results), [r.detail for r in results if not r.passed]


def test_mutation_cases_detect_changes():
    """Мутации кольца и модуля плотностей обнаруживаются."""
    settings = KitConfig.defaults()
    results = run_suite(2, settings, select_cases("fusion.mutation") + select_cases("density.mutation"))
    assert all(r.passed for r in results)


def test_package_errors_become_failures():
    """Ошибка пакета внутри случая — провал с текстом ошибки."""

    def broken(level_max: int, settings: KitConfig) -> tuple[bool, str]:
        raise DomainError("window too small")

    case = InvariantCase("demo.broken", "demo", "always raises", broken)
    result = run_case(case, 1, KitConfig.defaults())
    assert not result.passed
    assert result.detail == "DomainError: window too small"
    assert result.elapsed >= 0


def test_graded_cases_pass():
    """Случаи градуированной лаборатории проходят на библиотеке примеров."""
    results = run_suite(0, KitConfig.defaults(), select_cases("graded."))
    assert all(r.passed for r in results), [r.detail for r in results if not r.passed]


def test_field_module_and_vacuum_braiding_cases():
    """Модули полей дают сдвиг Δ, сплетение с вакуумом имеет не больше одного канала."""
    settings = KitConfig.defaults()
    cases = select_cases("density.field_modules") + select_cases("fields.vacuum_braiding_abelian")
    assert [case.id for case in cases] == ["density.field_modules", "fields.vacuum_braiding_abelian"]
    results = run_suite(3, settings, cases)
    assert all(r.passed for r in results), [r.detail for r in results if not r.passed]


def test_scalar_oracle_case_uses_random_pairs():
    """Случай точной формулы проходит на случайных скалярных системах."""
    results = run_suite(0, KitConfig.defaults(), select_cases("fuchsian.scalar_oracle"))
    assert len(results) == 1
    assert results[0].passed, results[0].detail
