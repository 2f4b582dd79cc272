"""Команда graded: суперкоммутанты примеров и леммы о преобразовании Клейна."""

from __future__ import annotations

import argparse
from typing import Any

from beartype import beartype

from src.cli.formatting import OutputRecord
from src.cli.parsing import format_parent
from src.errors import DomainError
from src.graded.algebra import (
    GradedAlgebra,
    commutant,
    double_commutant_check,
    double_supercommutant_check,
    klein_identities_check,
    same_span,
    supercommutant_by_klein,
    supercommutant_by_nullspace,
)
from src.graded.samples import sample_library
from src.utils.config_loader import KitConfig


@beartype
def register(subparsers: Any) -> None:
    """Зарегистрировать команду graded."""
    parser = subparsers.add_parser("graded", parents=[format_parent()], help="Градуированные алгебры")
    parser.add_argument(
        "--example",
        default="all",
        help=f"Имя примера или all: {', '.join(sample_library())}",
    )
    parser.set_defaults(handler=handle)


@beartype
def select_examples(name: str) -> list[GradedAlgebra]:
    """Примеры по имени.

    Raises:
        DomainError: Если такого примера нет
    """
    library = sample_library()
    if name == "all":
        return list(library.values())
    if name not in library:
        raise DomainError(f"Unknown example '{name}', expected one of: {', '.join(library)}")
    return [library[name]]


@beartype
def handle(args: argparse.Namespace, settings: KitConfig) -> OutputRecord:
    """Размерности A, A', A^♮ и проверки лемм по каждому примеру."""
    rows = []
    checks: dict[str, bool] = {}
    for algebra in select_examples(args.example):
        direct = supercommutant_by_nullspace(algebra)
        via_klein = supercommutant_by_klein(algebra)
        rows.append(
            {
                "example": algebra.name,
                "dim": algebra.dim,
                "algebra_dim": int(algebra.closure.shape[0]),
                "commutant_dim": int(commutant(algebra).shape[0]),
                "supercommutant_dim": int(direct.shape[0]),
                "tau_invariant": algebra.is_tau_invariant(),
            }
        )
        checks[f"{algebra.name}:klein_identities"] = klein_identities_check(algebra.space)
        checks[f"{algebra.name}:supercommutant_via_klein"] = same_span(
            direct, via_klein, settings.subspace_tol
        )
        checks[f"{algebra.name}:double_commutant"] = double_commutant_check(algebra)
        checks[f"{algebra.name}:double_supercommutant"] = double_supercommutant_check(algebra)
    return OutputRecord(
        command="graded",
        inputs={"example": args.example},
        results=rows,
        tolerances={"subspace": settings.subspace_tol},
        checks=checks,
    )
