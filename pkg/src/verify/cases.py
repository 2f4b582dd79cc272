"""Реестр инвариантов: каждый случай — функция (level_max, settings) -> (прошёл ли, пояснение)."""

from __future__ import annotations

import dataclasses
import itertools
import math
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx
import numpy as np
from beartype import beartype

from src.density.module import (
    BasisVector,
    DensityModule,
    G,
    L,
    Mode,
    ModeOperator,
    Relation,
    build_mode,
    check_relation,
    covariance_consistency,
    module_for_field,
    sector_grading_check,
    standard_relations,
)
from src.fields.catalog import (
    CHARGES,
    ChargeKind,
    adjacency_set,
    assigned_sigma,
    braiding_support,
    braiding_support_brute_force,
    charge_label,
    field_graph,
    is_abelian_braiding,
    sigma_consistency_report,
)
from src.fuchsian.braiding import bare_transport, compose_ns_braiding
from src.fuchsian.system import (
    FuchsianSystem,
    random_scalar_pairs,
    random_system,
    scalar_system,
    seeded_rng,
)
from src.fuchsian.transport import (
    contragredient_check,
    continue_solution,
    inverse_transpose_error,
    monodromy_check,
    transport_matrix,
)
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
    fuse,
    quotient_by_involution,
    tensor_ring,
    with_structure_constant,
)
from src.graded.algebra import (
    double_commutant_check,
    double_supercommutant_check,
    klein_identities_check,
    same_span,
    supercommutant_by_klein,
    supercommutant_by_nullspace,
)
from src.graded.samples import MAX_MODES, car_check, sample_library
from src.kac.labels import (
    KacLabel,
    Level,
    NSLabel,
    alpha_label,
    canonicalize,
    enumerate_ns_basis,
    ns_pairs,
    vacuum_label,
)
from src.kac.weights import delta_ns, h_label, h_ns, triangle_relation_check, weight_relation_check
from src.qdim.dimensions import (
    beta_index_set,
    beta_saturation_check,
    closed_form_dims,
    pf_dims,
    qdim_ns,
    subfactor_index,
    verify_multiplicativity,
)
from src.utils.config_loader import KitConfig

Outcome = tuple[bool, str]
CaseCheck = Callable[[int, KitConfig], Outcome]

PASS: Outcome = (True, "")
GOLDEN_INDEX = (3 + math.sqrt(5)) / 2


@beartype
@dataclass(frozen=True)
class InvariantCase:
    """Один инвариант набора.

    Attributes:
        id: Уникальное имя вида "модуль.свойство"
        module: Проверяемый модуль
        description: Что утверждается
        check: Функция проверки
    """

    id: str
    module: str
    description: str
    check: CaseCheck


def _levels(level_max: int, bound: int, start: int = 0) -> list[Level]:
    return [Level(ell) for ell in range(start, min(level_max, bound) + 1)]


# --- kac_core ---


def _identification_symmetry(level_max: int, settings: KitConfig) -> Outcome:
    for m in range(2, settings.sweep("kac_m_max") + 1):
        for p in range(1, m):
            for q in range(1, m + 2):
                if (p - q) % 2:
                    continue
                label = KacLabel(p, q, m)
                if h_ns(label) != h_ns(label.mirror()):
                    return False, f"h({p},{q}) differs from its image at m={m}"
    return PASS


def _class_partition(level_max: int, settings: KitConfig) -> Outcome:
    for level in _levels(level_max, settings.sweep("weight_level_max")):
        pairs = ns_pairs(level)
        basis = enumerate_ns_basis(level)
        if 2 * len(basis) != len(pairs):
            return False, f"{len(pairs)} pairs do not split into classes of two at level {level.ell}"
        for x in pairs:
            if x.involution() == x or canonicalize(canonicalize(x)) != canonicalize(x):
                return False, f"canonicalize misbehaves on {x} at level {level.ell}"
        if [b.doubled for b in basis] != sorted({b.doubled for b in basis}):
            return False, f"basis at level {level.ell} is not sorted and unique"
    return PASS


def _weight_relation(level_max: int, settings: KitConfig) -> Outcome:
    for level in _levels(level_max, settings.sweep("weight_level_max")):
        for x in ns_pairs(level):
            if not weight_relation_check(x.i, x.i_prime, level):
                return False, f"weight relation fails for {x} at level {level.ell}"
    return PASS


def _weights_nonnegative(level_max: int, settings: KitConfig) -> Outcome:
    for level in _levels(level_max, settings.sweep("weight_level_max")):
        if h_label(vacuum_label(level)) != 0:
            return False, f"vacuum weight is nonzero at level {level.ell}"
        for x in ns_pairs(level):
            if h_label(x) < 0 or h_label(x) != h_label(x.involution()):
                return False, f"weight of {x} is negative or not class-invariant"
    return PASS


def _triangle_relation(level_max: int, settings: KitConfig) -> Outcome:
    for level in _levels(level_max, settings.sweep("triangle_level_max")):
        pairs = ns_pairs(level)
        for target, source, charge in itertools.product(pairs, repeat=3):
            if not triangle_relation_check(target, source, charge):
                return False, f"triangle relation fails for {target}, {source}, {charge}"
    return PASS


# --- fusion_ring ---


def _axiom_failure(ring: FusionRing) -> str | None:
    if not verify_unit(ring):
        return "unit"
    if not verify_commutativity(ring):
        return "commutativity"
    if not verify_associativity(ring):
        return "associativity"
    ok, reason = verify_frobenius(ring)
    if not ok:
        return f"frobenius ({reason})"
    return None


def _ring_paths_agree(level_max: int, settings: KitConfig) -> Outcome:
    for level in _levels(level_max, settings.sweep("quotient_level_max")):
        reference = quotient_by_involution(
            tensor_ring(build_su2_ring(level), build_su2_ring(level.shifted())), level
        )
        for lifts in itertools.product((False, True), repeat=2):
            direct = build_ns_ring(level, lifts)
            if not np.array_equal(direct.tensor, reference.tensor):
                return False, f"direct formula with lifts {lifts} differs from tensor quotient at level {level.ell}"
    return PASS


def _ns_ring_axioms(level_max: int, settings: KitConfig) -> Outcome:
    for level in _levels(level_max, settings.sweep("ring_level_max")):
        failure = _axiom_failure(build_ns_ring(level))
        if failure:
            return False, f"T_{level.m} fails {failure}"
    return PASS


def _su2_ring_axioms(level_max: int, settings: KitConfig) -> Outcome:
    for level in _levels(level_max + 2, settings.sweep("ring_level_max") + 2):
        failure = _axiom_failure(build_su2_ring(level))
        if failure:
            return False, f"R_{level.ell} fails {failure}"
    return PASS


def _tensor_ring_axioms(level_max: int, settings: KitConfig) -> Outcome:
    # R_ℓ ⊗ R_{ℓ+2} быстро растёт, перебор только на малых уровнях
    for level in _levels(level_max, 2):
        product = tensor_ring(build_su2_ring(level), build_su2_ring(level.shifted()))
        if not (verify_unit(product) and verify_commutativity(product) and verify_associativity(product)):
            return False, f"{product.name} is not a commutative associative ring"
    return PASS


def _alpha_weak_generator(level_max: int, settings: KitConfig) -> Outcome:
    for level in _levels(level_max, settings.sweep("ring_level_max"), start=1):
        if not weak_generator_check(build_ns_ring(level), alpha_label(level)):
            return False, f"α is not a weak generator at level {level.ell}"
    return PASS


def _structure_mutation(level_max: int, settings: KitConfig) -> Outcome:
    level = Level(max(1, min(level_max, 2)))
    ring = build_ns_ring(level)
    if _axiom_failure(ring):
        return False, "unperturbed ring already fails"
    a = ring.index_of(alpha_label(level))
    mutated = with_structure_constant(ring, (a, a, ring.unit), 1)
    if _axiom_failure(mutated) is None:
        return False, "axioms still hold after N[α, α, 1] += 1"
    return PASS


# --- quantum_dim ---


def _closed_vs_pf(level_max: int, settings: KitConfig) -> Outcome:
    for level in _levels(level_max, settings.sweep("qdim_level_max"), start=1):
        ring = build_ns_ring(level)
        generator = alpha_label(level)
        pf = pf_dims(
            ring,
            generator,
            tolerance=settings.convergence_tol,
            max_iterations=settings.power_iterations,
        )
        worst = max(abs(pf[x] - qdim_ns(x)) for x in enumerate_ns_basis(level))
        worst = max(worst, abs(pf.eigenvalue - qdim_ns(generator)))
        if worst > settings.acceptance_tol:
            return False, f"closed form and Perron-Frobenius differ by {worst:.3e} at level {level.ell}"
    return PASS


def _multiplicativity(level_max: int, settings: KitConfig) -> Outcome:
    for level in _levels(level_max, settings.sweep("qdim_level_max")):
        ring = build_ns_ring(level)
        dims = closed_form_dims(ring, vacuum_label(level))
        if not verify_multiplicativity(ring, dims, settings.acceptance_tol):
            return False, f"closed-form dimensions are not a ring character at level {level.ell}"
    return PASS


def _golden_index(level_max: int, settings: KitConfig) -> Outcome:
    value = subfactor_index(NSLabel.from_doubled(0, 2, 1))
    if abs(value - GOLDEN_INDEX) > 1e-9:
        return False, f"index of ε at level 1 is {value!r}"
    return PASS


def _beta_saturation(level_max: int, settings: KitConfig) -> Outcome:
    for level in _levels(level_max, settings.sweep("qdim_level_max")):
        if not beta_saturation_check(level, tolerance=settings.acceptance_tol):
            return False, f"β totals do not balance at level {level.ell}"
    return PASS


def _beta_mutation(level_max: int, settings: KitConfig) -> Outcome:
    level = Level(2)

    def truncated(x: NSLabel) -> list[NSLabel]:
        return beta_index_set(x)[:-1]

    if beta_saturation_check(level, index_set=truncated):
        return False, "saturation still holds with one term dropped"
    return PASS


# --- field_catalog ---


def _adjacency_matches_fusion(level_max: int, settings: KitConfig) -> Outcome:
    bound = settings.sweep("quotient_level_max")
    for charge in CHARGES:
        start = 1 if charge == "alpha" else 0
        for level in _levels(level_max, bound, start=start):
            ring = build_ns_ring(level)
            charge_class = canonicalize(charge_label(charge, level))
            for x in enumerate_ns_basis(level):
                fused = {label for label, _ in fuse(ring, charge_class, x)}
                if fused != adjacency_set(x, charge):
                    return False, f"⟨{charge}, {x}⟩ differs from fusion at level {level.ell}"
    return PASS


def _alpha_graph_connected(level_max: int, settings: KitConfig) -> Outcome:
    for level in _levels(level_max, settings.sweep("ring_level_max"), start=1):
        graph = field_graph(level, "alpha")
        if not nx.is_connected(graph):
            return False, f"G_α is disconnected at level {level.ell}"
    return PASS


_BRAIDING_PAIRS: tuple[tuple[ChargeKind, ChargeKind], ...] = (
    ("alpha", "alpha"),
    ("alpha", "beta"),
    ("beta", "alpha"),
)


def _braiding_support_agrees(level_max: int, settings: KitConfig) -> Outcome:
    for level in _levels(level_max, 4, start=1):
        basis = enumerate_ns_basis(level)
        for left, right in _BRAIDING_PAIRS:
            for outer, inner in itertools.product(basis, repeat=2):
                fast = braiding_support(left, right, outer, inner)
                slow = braiding_support_brute_force(left, right, outer, inner)
                if fast != slow:
                    return False, f"support ({left},{right}) for {outer}, {inner} differs"
    return PASS


def _vacuum_braiding_abelian(level_max: int, settings: KitConfig) -> Outcome:
    for level in _levels(level_max, 4, start=1):
        vacuum = vacuum_label(level)
        for left, right in _BRAIDING_PAIRS:
            for inner in enumerate_ns_basis(level):
                support = braiding_support(left, right, vacuum, inner)
                if is_abelian_braiding(left, right, vacuum, inner) != bool(support):
                    return False, f"braiding ({left},{right}) from the vacuum to {inner} has {len(support)} channels"
    return PASS

def _sigma_consistency(level_max: int, settings: KitConfig) -> Outcome:
    for level in _levels(level_max, settings.sweep("triangle_level_max")):
        mismatches = sigma_consistency_report(level)
        if mismatches:
            first = mismatches[0]
            return False, f"σ rule disagrees with Δ parity for {first.source} -> {first.target}"
    return PASS


# --- density_module ---

_GRID_LAMBDA = (Fraction(0), Fraction(1, 2), Fraction(1))
_GRID_MU = (Fraction(0), Fraction(1, 3), Fraction(-1, 4))


def _modes(bound: int) -> list[Mode]:
    reach = 2 * bound
    modes = [L(n) for n in range(-reach, reach + 1)]
    modes += [G(Fraction(2 * k + 1, 2)) for k in range(-reach, reach)]
    return modes


def _grid_modules(settings: KitConfig) -> list[DensityModule]:
    window = settings.sweep("density_window")
    return [
        DensityModule(lam=lam, mu=mu, sigma=sigma, window=window)
        for lam in _GRID_LAMBDA
        for mu in _GRID_MU
        for sigma in (0, 1)
    ]


def _operators(module: DensityModule, bound: int) -> dict[Mode, ModeOperator]:
    return {mode: build_mode(module, mode) for mode in _modes(bound)}


def _density_relations(level_max: int, settings: KitConfig) -> Outcome:
    bound = settings.sweep("density_mode_bound")
    relations = standard_relations(bound)
    for module in _grid_modules(settings):
        operators = _operators(module, bound)
        for relation in relations:
            if not check_relation(module, relation, operators=operators):
                return False, f"{relation} fails for λ={module.lam}, μ={module.mu}, σ={module.sigma}"
    return PASS


def _density_covariance(level_max: int, settings: KitConfig) -> Outcome:
    bound = settings.sweep("density_mode_bound")
    for module in _grid_modules(settings):
        for n in range(-bound, bound + 1):
            if not covariance_consistency(module, n, module.conformal_weight):
                return False, f"L_{n} is not covariant for λ={module.lam}, μ={module.mu}"
    return PASS


def _density_grading(level_max: int, settings: KitConfig) -> Outcome:
    bound = settings.sweep("density_mode_bound")
    for module in _grid_modules(settings):
        for operator in _operators(module, bound).values():
            if not sector_grading_check(operator):
                return False, f"{operator.mode} breaks the sector grading"
    return PASS


def _field_modules(level_max: int, settings: KitConfig) -> Outcome:
    window = settings.sweep("density_window")
    for level in _levels(level_max, settings.sweep("triangle_level_max"), start=1):
        for charge in CHARGES:
            k = charge_label(charge, level)
            for target, source in itertools.product(ns_pairs(level), repeat=2):
                sigma = assigned_sigma(target, source, charge)
                if sigma is None:
                    continue
                module = module_for_field(target, source, charge, sigma, window)
                if module.conformal_weight + module.mu != delta_ns(target, source, k):
                    return False, f"mode offset of {charge} field {source} -> {target} differs from Δ"
                if level.ell == 1 and not all(
                    covariance_consistency(module, n, module.conformal_weight) for n in (-1, 0, 1)
                ):
                    return False, f"module of {charge} field {source} -> {target} is not covariant"
    return PASS

def _density_mutation(level_max: int, settings: KitConfig) -> Outcome:
    module = DensityModule(
        lam=Fraction(3, 4), mu=Fraction(1, 3), sigma=0, window=settings.sweep("density_window")
    )
    relation = Relation("LL", Fraction(1), Fraction(-1))
    if not check_relation(module, relation):
        return False, "unperturbed [L_1, L_-1] already fails"
    mutated = build_mode(module, L(1)).perturbed(BasisVector("v", Fraction(0)), Fraction(1))
    if check_relation(module, relation, operators={L(1): mutated}):
        return False, "[L_1, L_-1] still holds after changing one coefficient"
    if covariance_consistency(module, 1, module.conformal_weight, operator=mutated):
        return False, "covariance still holds after changing one coefficient"
    return PASS


# --- fuchsian_braid ---

_LOWER_ARC: tuple[complex, ...] = (0.25 + 0j, 0.25 - 0.25j, -0.25 - 0.25j, -0.25 + 0j)


def _with_settings(system: FuchsianSystem, settings: KitConfig) -> FuchsianSystem:
    return dataclasses.replace(
        system,
        series_order=settings.series_order,
        ode_tol=settings.ode_tol,
        match_tol=settings.match_tol,
    )


def _scalar_oracle(level_max: int, settings: KitConfig) -> Outcome:
    for a, b in random_scalar_pairs(seeded_rng(), settings.scalar_trials):
        system = _with_settings(scalar_system(a, b), settings)
        c = complex(transport_matrix(system).c[0, 0])
        expected = complex(np.exp(-1j * np.pi * b))
        if abs(c - expected) > 1e-9:
            return False, f"transport of scalar({a}, {b}) is {c}, expected {expected}"
        start = np.array([[0.25**a * 0.75 ** (-b)]], dtype=np.complex128)
        value = complex(continue_solution(system, start, _LOWER_ARC)[0, 0])
        closed = 0.25**a * complex(np.exp(-1j * np.pi * a)) * 1.25 ** (-b)
        if abs(value - closed) > 1e-9:
            return False, f"continuation of scalar({a}, {b}) to -1/4 is {value}, expected {closed}"
    return PASS


def _random_systems(settings: KitConfig, count: int) -> list[FuchsianSystem]:
    rng = seeded_rng()
    return [
        _with_settings(random_system(rng, 1 + trial % settings.max_dimension), settings)
        for trial in range(count)
    ]


def _random_duality(level_max: int, settings: KitConfig) -> Outcome:
    for trial, system in enumerate(_random_systems(settings, settings.random_trials)):
        report = contragredient_check(
            system, pairing_tol=settings.match_tol, transport_tol=settings.duality_tol
        )
        if not report.passed:
            return False, (
                f"trial {trial} (n={system.n}): gauge={report.gauge_error:.2e}, "
                f"pairing={report.pairing_drift:.2e}, transport={report.transport_error:.2e}"
            )
    return PASS


def _monodromy(level_max: int, settings: KitConfig) -> Outcome:
    for trial, system in enumerate(_random_systems(settings, settings.max_dimension)):
        if not monodromy_check(system):
            return False, f"loop around 0 does not multiply by exp(2πiP) for trial {trial}"
    return PASS


def _transport_mutation(level_max: int, settings: KitConfig) -> Outcome:
    system = _random_systems(settings, 2)[1]
    c = transport_matrix(system, check_overlap=False).c
    c_dual = transport_matrix(system.dual(), check_overlap=False).c
    if inverse_transpose_error(c, c_dual) > settings.duality_tol:
        return False, "unperturbed transport already violates (c⁻¹)ᵀ"
    mutated = c_dual.copy()
    position = np.unravel_index(int(np.argmax(np.abs(mutated))), mutated.shape)
    mutated[position] *= 1.01
    if inverse_transpose_error(c, mutated) <= settings.duality_tol:
        return False, "(c⁻¹)ᵀ law still holds after scaling one entry by 1.01"
    return PASS


def _braiding_composition(level_max: int, settings: KitConfig) -> Outcome:
    system = _random_systems(settings, 2)[1]
    transport = transport_matrix(system, check_overlap=False)
    identity = bare_transport(np.eye(system.n, dtype=np.complex128))
    pairing = [(r, r) for r in range(system.n)]
    braiding = compose_ns_braiding(transport, identity, pairing)
    expected = transport.c * np.eye(system.n)
    if not np.allclose(braiding.entries, expected, atol=settings.acceptance_tol, rtol=0):
        return False, "composition with a trivial shifted transport is not diagonal"
    return PASS


# --- graded_lab ---


def _klein_identities(level_max: int, settings: KitConfig) -> Outcome:
    for algebra in sample_library().values():
        if not klein_identities_check(algebra.space):
            return False, f"Klein identities fail on the space of {algebra.name}"
    return PASS


def _supercommutant_via_klein(level_max: int, settings: KitConfig) -> Outcome:
    for algebra in sample_library().values():
        direct = supercommutant_by_nullspace(algebra)
        via_klein = supercommutant_by_klein(algebra)
        if not same_span(direct, via_klein, settings.subspace_tol):
            return False, f"A♮ differs from κA'κ* for {algebra.name}"
    return PASS


def _double_supercommutant(level_max: int, settings: KitConfig) -> Outcome:
    for algebra in sample_library().values():
        if not double_supercommutant_check(algebra):
            return False, f"A♮♮ differs from A for {algebra.name}"
    return PASS


def _double_commutant(level_max: int, settings: KitConfig) -> Outcome:
    for algebra in sample_library().values():
        if not double_commutant_check(algebra):
            return False, f"A'' differs from A for {algebra.name}"
    return PASS


def _canonical_anticommutation(level_max: int, settings: KitConfig) -> Outcome:
    for modes in range(1, MAX_MODES + 1):
        if not car_check(modes):
            return False, f"[c(f), c(g)]_+ = 2Re(f, g) fails on {modes} modes"
    return PASS


CASES: tuple[InvariantCase, ...] = (
    InvariantCase("kac.identification_symmetry", "kac_core", "h_pq = h_{m-p,m+2-q} for m up to kac_m_max", _identification_symmetry),
    InvariantCase("kac.class_partition", "kac_core", "involution splits NS pairs into classes of two", _class_partition),
    InvariantCase("kac.weight_relation", "kac_core", "h_i = h_pq + h_i' - (i-i')^2/2 exactly", _weight_relation),
    InvariantCase("kac.weights_nonnegative", "kac_core", "weights are nonnegative, vacuum has weight zero", _weights_nonnegative),
    InvariantCase("kac.triangle_relation", "kac_core", "SU(2) offset equals NS offset plus shifted offset minus C", _triangle_relation),
    InvariantCase("fusion.paths_agree", "fusion_ring", "direct formula equals tensor quotient for every lift", _ring_paths_agree),
    InvariantCase("fusion.ns_axioms", "fusion_ring", "T_m is unital, commutative, associative, self-dual, Frobenius", _ns_ring_axioms),
    InvariantCase("fusion.su2_axioms", "fusion_ring", "R_l satisfies the fusion ring axioms", _su2_ring_axioms),
    InvariantCase("fusion.tensor_axioms", "fusion_ring", "R_l x R_l+2 is a commutative associative ring", _tensor_ring_axioms),
    InvariantCase("fusion.alpha_weak_generator", "fusion_ring", "alpha has a connected fusion graph", _alpha_weak_generator),
    InvariantCase("fusion.mutation", "fusion_ring", "one structure constant +1 breaks the axioms", _structure_mutation),
    InvariantCase("qdim.closed_vs_pf", "quantum_dim", "sine products equal the Perron-Frobenius vector", _closed_vs_pf),
    InvariantCase("qdim.multiplicativity", "quantum_dim", "d(x)d(y) = sum N_xy^z d(z)", _multiplicativity),
    InvariantCase("qdim.golden_index", "quantum_dim", "index of epsilon at level 1 is the golden ratio squared", _golden_index),
    InvariantCase("qdim.beta_saturation", "quantum_dim", "beta fusion totals balance the dimensions", _beta_saturation),
    InvariantCase("qdim.beta_mutation", "quantum_dim", "dropping one beta term breaks the balance", _beta_mutation),
    InvariantCase("fields.adjacency_matches_fusion", "field_catalog", "field adjacency sets equal fusion index sets", _adjacency_matches_fusion),
    InvariantCase("fields.alpha_graph_connected", "field_catalog", "G_alpha is connected", _alpha_graph_connected),
    InvariantCase("fields.braiding_support", "field_catalog", "braiding support equals the brute-force enumeration", _braiding_support_agrees),
    InvariantCase("fields.sigma_parity", "field_catalog", "sign rule for sigma agrees with the parity of 2C", _sigma_consistency),
    InvariantCase("fields.vacuum_braiding_abelian", "field_catalog", "braiding with the vacuum as outer class has at most one channel", _vacuum_braiding_abelian),
    InvariantCase("density.relations", "density_module", "NS relations with zero central term hold on the window", _density_relations),
    InvariantCase("density.covariance", "density_module", "L_n action matches covariance with h = 1 - lambda", _density_covariance),
    InvariantCase("density.grading", "density_module", "L preserves and G swaps the v/w sectors", _density_grading),
    InvariantCase("density.field_modules", "density_module", "field modules have mode offset h + mu = Delta and are covariant", _field_modules),
    InvariantCase("density.mutation", "density_module", "one altered coefficient breaks [L_1, L_-1]", _density_mutation),
    InvariantCase("fuchsian.scalar_oracle", "fuchsian_braid", "scalar transport and continuation match closed forms", _scalar_oracle),
    InvariantCase("fuchsian.duality", "fuchsian_braid", "dual transport equals the inverse transpose", _random_duality),
    InvariantCase("fuchsian.monodromy", "fuchsian_braid", "loop around 0 multiplies by exp(2 pi i P)", _monodromy),
    InvariantCase("fuchsian.mutation", "fuchsian_braid", "scaling one transport entry by 1.01 is detected", _transport_mutation),
    InvariantCase("fuchsian.braiding_composition", "fuchsian_braid", "composition with a trivial transport is diagonal", _braiding_composition),
    InvariantCase("graded.klein_identities", "graded_lab", "kappa is unitary, kappa^2 = u, conjugation rules hold", _klein_identities),
    InvariantCase("graded.supercommutant", "graded_lab", "nullspace supercommutant equals kappa A' kappa*", _supercommutant_via_klein),
    InvariantCase("graded.double_supercommutant", "graded_lab", "A♮♮ = A on the sample library", _double_supercommutant),
    InvariantCase("graded.double_commutant", "graded_lab", "A'' = A on the sample library", _double_commutant),
    InvariantCase("graded.car", "graded_lab", "Clifford generators satisfy the anticommutation relations", _canonical_anticommutation),
)


@beartype
def case_ids() -> list[str]:
    """Имена всех случаев в порядке прогона."""
    return [case.id for case in CASES]
