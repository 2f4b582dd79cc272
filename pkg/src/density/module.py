"""Модули плотностей F^σ_{λ,μ} алгебры Невё-Шварца на усечённом окне индексов.

Базис: v_i, i ∈ ℤ + σ/2, и w_j, j ∈ ℤ + (1−σ)/2, при |индекс| ≤ W.
Действие:

    L_n v_i = −(i + μ + λn) v_{i+n}
    G_s v_i = w_{i+s}
    L_n w_j = −(j + μ + (λ − ½)n) w_{j+n}
    G_s w_j = −(j + μ + (2λ − 1)s) v_{j+s}

Все операторы мономиальны, поэтому хранятся как словари
"базисный вектор -> (образ, коэффициент)".
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from beartype import beartype

from src.errors import DomainError
from src.fields.catalog import ChargeKind, charge_label
from src.kac.labels import NSLabel, Rational
from src.kac.weights import h_label, same_level

logger = logging.getLogger(__name__)

Sector = Literal["v", "w"]
ModeKind = Literal["L", "G"]
RelationKind = Literal["LL", "LG", "GG"]

HALF = Fraction(1, 2)


@beartype
@dataclass(frozen=True, order=True)
class BasisVector:
    """Базисный вектор v_i или w_j."""

    sector: Sector
    index: Fraction

    def __str__(self) -> str:
        return f"{self.sector}_{self.index}"


# Разреженный вектор с точными коэффициентами
SparseVector = dict[BasisVector, Fraction]


@beartype
@dataclass(frozen=True)
class DensityModule:
    """Модуль F^σ_{λ,μ}, усечённый окном |индекс| ≤ window."""

    lam: Rational
    mu: Rational
    sigma: int
    window: int

    def __post_init__(self) -> None:
        if self.sigma not in (0, 1):
            raise DomainError(f"sigma must be 0 or 1, got {self.sigma}")
        if self.window <= 0:
            raise DomainError(f"Window must be positive, got {self.window}")

    def offset(self, sector: Sector) -> Fraction:
        """Дробная часть индексов сектора: σ/2 для v, (1−σ)/2 для w."""
        return Fraction(self.sigma, 2) if sector == "v" else Fraction(1 - self.sigma, 2)

    def indices(self, sector: Sector, radius: Fraction | int | None = None) -> list[Fraction]:
        """Индексы сектора с |индекс| ≤ radius (по умолчанию окно)."""
        bound = Fraction(self.window if radius is None else radius)
        offset = self.offset(sector)
        start = -int(bound) - 1
        candidates = (offset + k for k in range(start, int(bound) + 2))
        return [x for x in candidates if abs(x) <= bound]

    def basis(self, radius: Fraction | int | None = None) -> Iterator[BasisVector]:
        """Базисные векторы обоих секторов внутри радиуса."""
        for sector in ("v", "w"):
            for index in self.indices(sector, radius):
                yield BasisVector(sector, index)

    def contains(self, vector: BasisVector) -> bool:
        """Лежит ли вектор в окне и на решётке своего сектора."""
        return (
            abs(vector.index) <= self.window
            and (vector.index - self.offset(vector.sector)).denominator == 1
        )

    @property
    def conformal_weight(self) -> Rational:
        """h = 1 − λ."""
        return 1 - self.lam


@beartype
@dataclass(frozen=True)
class Mode:
    """Мода L_n (n ∈ ℤ) или G_s (s ∈ ℤ + ½)."""

    kind: ModeKind
    index: Fraction

    def __post_init__(self) -> None:
        fractional = self.index - (self.index.numerator // self.index.denominator)
        if self.kind == "L" and fractional != 0:
            raise DomainError(f"L-mode index must be an integer, got {self.index}")
        if self.kind == "G" and fractional != HALF:
            raise DomainError(f"G-mode index must lie in ℤ + ½, got {self.index}")

    def __str__(self) -> str:
        return f"{self.kind}_{self.index}"


def L(n: int | Fraction) -> Mode:
    """Мода L_n."""
    return Mode("L", Fraction(n))


def G(s: Fraction | str) -> Mode:
    """Мода G_s."""
    return Mode("G", Fraction(s))


# Образ None означает выход за окно
Action = Mapping[BasisVector, tuple[BasisVector | None, Fraction]]


@beartype
@dataclass(frozen=True)
class ModeOperator:
    """Мономиальный оператор моды на усечённом базисе."""

    mode: Mode
    action: Action

    def apply(self, vector: SparseVector) -> SparseVector | None:
        """Применить к разреженному вектору; None если результат вышел за окно."""
        result: defaultdict[BasisVector, Fraction] = defaultdict(Fraction)
        for basis_vector, coefficient in vector.items():
            image, factor = self.action[basis_vector]
            if factor == 0:
                continue
            if image is None:
                return None
            result[image] += factor * coefficient
        return {b: c for b, c in result.items() if c != 0}

    def coefficient(self, vector: BasisVector) -> Fraction:
        """Коэффициент при образе базисного вектора."""
        return self.action[vector][1]

    def perturbed(self, vector: BasisVector, delta: Fraction) -> ModeOperator:
        """Копия с изменённым коэффициентом на одном векторе."""
        action = dict(self.action)
        image, factor = action[vector]
        action[vector] = (image, factor + delta)
        return ModeOperator(mode=self.mode, action=action)


def _image(module: DensityModule, vector: BasisVector, mode: Mode) -> tuple[BasisVector, Fraction]:
    i = vector.index
    lam, mu = module.lam, module.mu
    shift = mode.index
    if mode.kind == "L":
        weight = lam if vector.sector == "v" else lam - HALF
        return BasisVector(vector.sector, i + shift), -(i + mu + weight * shift)
    if vector.sector == "v":
        return BasisVector("w", i + shift), Fraction(1)
    return BasisVector("v", i + shift), -(i + mu + (2 * lam - 1) * shift)


@beartype
def build_mode(module: DensityModule, mode: Mode) -> ModeOperator:
    """Построить оператор моды по формулам действия.

    Args:
        module: Модуль плотностей
        mode: Мода L_n или G_s

    Returns:
        ModeOperator: Оператор; образы вне окна помечены None

    Raises:
        DomainError: Если |n| или |s| больше окна
    """
    if abs(mode.index) > module.window:
        raise DomainError(f"Mode {mode} does not fit into window {module.window}")
    action: dict[BasisVector, tuple[BasisVector | None, Fraction]] = {}
    for vector in module.basis():
        image, coefficient = _image(module, vector, mode)
        action[vector] = (image if module.contains(image) else None, coefficient)
    return ModeOperator(mode=mode, action=action)


@beartype
def sector_grading_check(operator: ModeOperator) -> bool:
    """L_n сохраняет сектор, G_s меняет v <-> w."""
    for vector, (image, _) in operator.action.items():
        if image is None:
            continue
        if (image.sector == vector.sector) != (operator.mode.kind == "L"):
            return False
    return True


@beartype
@dataclass(frozen=True)
class Relation:
    """Соотношение [L_m, L_n], [L_n, G_s] или [G_r, G_s]_+."""

    kind: RelationKind
    first: Fraction
    second: Fraction

    @property
    def modes(self) -> tuple[Mode, Mode]:
        """Моды левой части."""
        if self.kind == "LL":
            return L(self.first), L(self.second)
        if self.kind == "LG":
            return L(self.first), G(self.second)
        return G(self.first), G(self.second)

    @property
    def rhs(self) -> tuple[Fraction, Mode]:
        """Правая часть: (константа, мода). Центральный член равен нулю."""
        a, b = self.first, self.second
        if self.kind == "LL":
            return a - b, L(a + b)
        if self.kind == "LG":
            return a / 2 - b, G(a + b)
        return Fraction(2), L(a + b)

    def __str__(self) -> str:
        left, right = self.modes
        bracket = "]_+" if self.kind == "GG" else "]"
        return f"[{left},{right}{bracket}"


def _basis_state(vector: BasisVector) -> SparseVector:
    return {vector: Fraction(1)}


def _compose(outer: ModeOperator, inner: ModeOperator, vector: BasisVector) -> SparseVector:
    first = inner.apply(_basis_state(vector))
    second = outer.apply(first) if first is not None else None
    if second is None:
        raise DomainError(f"{outer.mode}{inner.mode} leaves the window on {vector}")
    return second


def _combine(x: SparseVector, y: SparseVector, sign: int) -> SparseVector:
    result: defaultdict[BasisVector, Fraction] = defaultdict(Fraction, x)
    for key, value in y.items():
        result[key] += sign * value
    return {k: v for k, v in result.items() if v != 0}


@beartype
def check_relation(
    module: DensityModule,
    relation: Relation,
    interior: int | None = None,
    operators: Mapping[Mode, ModeOperator] | None = None,
) -> bool:
    """Проверить соотношение точно на внутренних векторах окна.

    Внутренние векторы: |индекс| + |a| + |b| ≤ W, где a, b — индексы мод,
    так что ни одно промежуточное действие не выходит за окно.

    Args:
        module: Модуль плотностей
        relation: Проверяемое соотношение
        interior: Радиус внутренней области (по умолчанию максимальный)
        operators: Готовые операторы мод (для мутационных тестов)

    Returns:
        bool: True если левая и правая части совпадают на всей внутренней области

    Raises:
        DomainError: Если окно слишком мало для соотношения
    """
    left, right = relation.modes
    constant, result_mode = relation.rhs
    reach = abs(relation.first) + abs(relation.second)
    limit = module.window - reach
    radius = limit if interior is None else Fraction(interior)
    if limit < 0 or radius > limit or radius < 0:
        raise DomainError(f"Window {module.window} too small for {relation} with interior {radius}")

    cache: dict[Mode, ModeOperator] = dict(operators or {})

    def op(mode: Mode) -> ModeOperator:
        if mode not in cache:
            cache[mode] = build_mode(module, mode)
        return cache[mode]

    sign = 1 if relation.kind == "GG" else -1
    for vector in module.basis(radius):
        lhs = _combine(
            _compose(op(left), op(right), vector),
            _compose(op(right), op(left), vector),
            sign,
        )
        image = op(result_mode).apply(_basis_state(vector))
        if image is None:
            raise DomainError(f"{result_mode} leaves the window on {vector}")
        rhs = {k: constant * v for k, v in image.items() if constant * v != 0}
        if lhs != rhs:
            logger.info(f"[FAIL] {relation} breaks on {vector}: {lhs} != {rhs}")
            return False
    return True


@beartype
def standard_relations(bound: int = 3) -> list[Relation]:
    """Все соотношения с |индексами мод| ≤ bound."""
    integers = [Fraction(n) for n in range(-bound, bound + 1)]
    halves = [Fraction(2 * k + 1, 2) for k in range(-bound, bound)]
    relations = [Relation("LL", m, n) for m in integers for n in integers]
    relations += [Relation("LG", n, s) for n in integers for s in halves]
    relations += [Relation("GG", r, s) for r in halves for s in halves]
    return relations


@beartype
def covariance_consistency(
    module: DensityModule,
    n: int,
    h: Rational,
    operator: ModeOperator | None = None,
) -> bool:
    """Сверить формулу действия L_n с ковариантностью [L_n, φ(z)].

    Из [L_n, φ(z)] = (z^{n+1} d/dz + h(n+1) z^n) φ(z) и φ(z) = Σ φ(v_k) z^{−k−Δ},
    Δ = h + μ, следует коэффициент −(k+n) − Δ + h(n+1) при v_{k+n}.
    Для w-сектора то же с весом h + ½.

    Args:
        module: Модуль плотностей
        n: Индекс моды L_n
        h: Проверяемый конформный вес
        operator: Готовый оператор L_n (для мутационных тестов)

    Returns:
        bool: True если коэффициенты совпадают на всех векторах окна
    """
    mode = L(n)
    built = operator or build_mode(module, mode)
    radius = module.window - abs(n)
    if radius < 0:
        raise DomainError(f"Window {module.window} too small for L_{n}")
    for vector in module.basis(radius):
        weight = h if vector.sector == "v" else h + HALF
        delta = weight + module.mu
        k = vector.index
        expected = -(k + n) - delta + weight * (n + 1)
        if built.coefficient(vector) != expected:
            return False
    return True


@beartype
def module_for_field(
    target: NSLabel,
    source: NSLabel,
    charge: ChargeKind,
    sigma: int,
    window: int,
) -> DensityModule:
    """Модуль плотностей поля: λ = 1 − h(заряд), μ = h(target) − h(source).

    Тогда смещение мод h + μ совпадает с delta_ns(target, source, заряд).
    """
    level = same_level(target, source)
    h_charge = h_label(charge_label(charge, level))
    return DensityModule(
        lam=1 - h_charge,
        mu=h_label(target) - h_label(source),
        sigma=sigma,
        window=window,
    )
