"""Проверка аксиом кольца слияния полным перебором."""

from __future__ import annotations

import logging
from collections.abc import Hashable

import networkx as nx
import numpy as np
from beartype import beartype

from src.fusion.ring import FusionRing, dual

logger = logging.getLogger(__name__)


@beartype
def verify_unit(ring: FusionRing) -> bool:
    """Проверить N_{a,unit}^c = δ_{ac} и N_{unit,b}^c = δ_{bc}."""
    identity = np.eye(ring.size, dtype=np.int64)
    n = ring.tensor
    return bool(np.array_equal(n[:, ring.unit, :], identity) and np.array_equal(n[ring.unit], identity))


@beartype
def verify_associativity(ring: FusionRing) -> bool:
    """Проверить Σ_e N_{ab}^e N_{ec}^d = Σ_f N_{bc}^f N_{af}^d для всех a, b, c, d.

    Args:
        ring: Кольцо слияния

    Returns:
        bool: True если ассоциативность выполнена
    """
    size = ring.size
    # Целые значения малы, float64 точен и даёт BLAS
    n = ring.tensor.astype(np.float64)
    flat_right = n.reshape(size, size * size)
    flat_left = n.reshape(size * size, size)
    for a in range(size):
        lhs = (n[a] @ flat_right).reshape(size, size, size)
        rhs = (flat_left @ n[a]).reshape(size, size, size)
        if not np.array_equal(lhs, rhs):
            logger.info(f"[FAIL] Associativity broken in {ring.name} at a={ring.basis[a]}")
            return False
    return True


@beartype
def verify_commutativity(ring: FusionRing) -> bool:
    """Проверить N_{ab}^c = N_{ba}^c."""
    n = ring.tensor
    return bool(np.array_equal(n, n.transpose(1, 0, 2)))


@beartype
def verify_frobenius(ring: FusionRing, require_self_dual: bool = True) -> tuple[bool, str]:
    """Проверить взаимность Фробениуса N_{bc}^a = N_{b* a}^c.

    Args:
        ring: Кольцо слияния
        require_self_dual: Требовать ли N_{aa}^{unit} = 1 для всех a

    Returns:
        tuple[bool, str]: (выполнено ли, описание первого нарушения)
    """
    n = ring.tensor
    for b_idx, b in enumerate(ring.basis):
        b_star = dual(ring, b)
        if b_star is None:
            return False, f"missing dual for {b}"
        star_idx = ring.index_of(b_star)
        if require_self_dual and (star_idx != b_idx or n[b_idx, b_idx, ring.unit] != 1):
            return False, f"{b} is not self-dual"
        # n[b][c, a] против n[b*][a, c]
        if not np.array_equal(n[b_idx].T, n[star_idx]):
            return False, f"reciprocity fails for b={b}"
    return True, ""


@beartype
def fusion_graph(ring: FusionRing, x: Hashable) -> nx.Graph:
    """Граф с ребром (j, k) при N_{xj}^k ≥ 1 на меткам базиса."""
    graph = nx.Graph()
    graph.add_nodes_from(ring.basis)
    row = ring.tensor[ring.index_of(x)]
    for j, k in zip(*np.nonzero(row)):
        graph.add_edge(ring.basis[int(j)], ring.basis[int(k)])
    return graph


@beartype
def weak_generator_check(ring: FusionRing, x: Hashable) -> bool:
    """Является ли x слабым генератором (граф слияния связен)."""
    return bool(nx.is_connected(fusion_graph(ring, x)))
