"""Degree-based topological indices.

Sum indices aggregate a function of the endpoint degrees over edges.
Multiplicative indices are returned as natural logarithms (sums of logs):
the raw products grow exponentially with connectivity. Vertex products
run over non-isolated vertices only, so a single isolated vertex cannot
collapse the whole product to zero; empty sums and empty products both
evaluate to 0 (the log of 1).
"""

from __future__ import annotations

import numpy as np

from .errors import ParameterError
from .kinds import DEGREE_LOGPROD_KINDS, DEGREE_SUM_KINDS, IndexKind
from .models import Graph

_LN2 = float(np.log(2.0))


def nonisolated_count(g: Graph) -> int:
    """Number of vertices with degree >= 1."""
    return int(np.count_nonzero(g.degrees))


def _endpoint_degrees(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    d = g.degrees
    return d[g.edges[:, 0]], d[g.edges[:, 1]]


def sum_index(g: Graph, kind: IndexKind) -> float:
    """Evaluate one of the edge-sum indices M1, M2, SO, R, H."""
    if kind not in DEGREE_SUM_KINDS:
        raise ParameterError(f"{kind} is not a degree sum index")
    if g.edge_count == 0:
        return 0.0
    du, dv = _endpoint_degrees(g)
    du = du.astype(float)
    dv = dv.astype(float)
    if kind is IndexKind.M1:
        return float(np.sum(du + dv))
    if kind is IndexKind.M2:
        return float(np.sum(du * dv))
    if kind is IndexKind.SO:
        return float(np.sum(np.sqrt(du * du + dv * dv)))
    if kind is IndexKind.R:
        return float(np.sum(1.0 / np.sqrt(du * dv)))
    return float(np.sum(2.0 / (du + dv)))  # harmonic


def log_multiplicative_index(g: Graph, kind: IndexKind) -> float:
    """Natural log of one of the multiplicative indices.

    NK and PI1 are vertex products over degrees >= 1; the remaining four
    are edge products. Edge endpoints always have degree >= 1, so every
    log is finite.
    """
    if kind not in DEGREE_LOGPROD_KINDS:
        raise ParameterError(f"{kind} is not a multiplicative degree index")
    if kind in (IndexKind.NK, IndexKind.PI1):
        active = g.degrees[g.degrees >= 1].astype(float)
        total = float(np.sum(np.log(active)))
        return total if kind is IndexKind.NK else 2.0 * total
    if g.edge_count == 0:
        return 0.0
    du, dv = _endpoint_degrees(g)
    du = du.astype(float)
    dv = dv.astype(float)
    if kind is IndexKind.PI2:
        return float(np.sum(np.log(du * dv)))
    if kind is IndexKind.PI1_STAR:
        return float(np.sum(np.log(du + dv)))
    if kind is IndexKind.R_PI:
        return -0.5 * float(np.sum(np.log(du * dv)))
    return float(np.sum(_LN2 - np.log(du + dv)))  # multiplicative harmonic
