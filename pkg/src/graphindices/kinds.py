"""Enumeration of every index kind the package can compute.

The kinds split into five families, each evaluated by its own module:

* ``count``: the non-isolated vertex count.
* ``degree-sum``: edge sums of a function of the endpoint degrees.
* ``degree-logprod``: natural logs of multiplicative degree indices.
* ``revan-sum`` / ``revan-logprod``: the same shapes over Revan degrees.
* ``spectral``: indices of the RMT-weighted adjacency spectrum.

Multiplicative kinds are always handled in log space; the raw products
grow exponentially with the mean degree and overflow doubles quickly.
"""

from __future__ import annotations

import enum


class IndexKind(enum.Enum):
    # counting
    V_COUNT = "v_count"

    # degree-based sum indices
    M1 = "m1"  # first Zagreb
    M2 = "m2"  # second Zagreb
    SO = "so"  # Sombor
    R = "r"    # Randic connectivity
    H = "h"    # harmonic

    # logs of multiplicative degree indices
    NK = "nk"            # Narumi-Katayama
    PI1 = "pi1"          # multiplicative first Zagreb
    PI2 = "pi2"          # multiplicative second Zagreb
    PI1_STAR = "pi1star"
    R_PI = "rpi"         # multiplicative Randic
    H_PI = "hpi"         # multiplicative harmonic

    # Revan sum indices
    R1 = "r1"            # first Revan Zagreb, edge-sum form
    R1_VERTEX = "r1vertex"  # vertex-sum variant, sum of squared Revan degrees
    R2 = "r2"
    RSO = "rso"
    RR = "rr"
    RH = "rh"

    # logs of multiplicative Revan indices
    RNK = "rnk"
    R1_PI = "r1pi"
    R1_PI_STAR = "r1pistar"
    R2_PI = "r2pi"
    RR_PI = "rrpi"
    RH_PI = "rhpi"

    # spectral indices (logs where the raw index grows exponentially)
    ENERGY = "energy"
    LOG_EE = "log_ee"
    LOG_RV_A = "log_rv_a"
    LOG_RV_B = "log_rv_b"

    def __str__(self) -> str:
        return self.value


COUNT_KINDS = frozenset({IndexKind.V_COUNT})

DEGREE_SUM_KINDS = frozenset({
    IndexKind.M1, IndexKind.M2, IndexKind.SO, IndexKind.R, IndexKind.H,
})

DEGREE_LOGPROD_KINDS = frozenset({
    IndexKind.NK, IndexKind.PI1, IndexKind.PI2,
    IndexKind.PI1_STAR, IndexKind.R_PI, IndexKind.H_PI,
})

REVAN_SUM_KINDS = frozenset({
    IndexKind.R1, IndexKind.R1_VERTEX, IndexKind.R2,
    IndexKind.RSO, IndexKind.RR, IndexKind.RH,
})

REVAN_LOGPROD_KINDS = frozenset({
    IndexKind.RNK, IndexKind.R1_PI, IndexKind.R1_PI_STAR,
    IndexKind.R2_PI, IndexKind.RR_PI, IndexKind.RH_PI,
})

REVAN_KINDS = REVAN_SUM_KINDS | REVAN_LOGPROD_KINDS

SPECTRAL_KINDS = frozenset({
    IndexKind.ENERGY, IndexKind.LOG_EE,
    IndexKind.LOG_RV_A, IndexKind.LOG_RV_B,
})

ALL_KINDS = tuple(IndexKind)

# arity of the defining function: vertex vs edge, sum vs product
_VERTEX_KINDS = frozenset({
    IndexKind.V_COUNT, IndexKind.NK, IndexKind.PI1,
    IndexKind.R1_VERTEX, IndexKind.RNK, IndexKind.R1_PI,
})
_PRODUCT_KINDS = DEGREE_LOGPROD_KINDS | REVAN_LOGPROD_KINDS


def arity(kind: IndexKind) -> str:
    """Return one of vertex-sum, edge-sum, vertex-product, edge-product.

    Spectral kinds are classified as vertex-sum: they aggregate per-vertex
    (or per-eigenvalue) quantities.
    """
    base = "vertex" if kind in _VERTEX_KINDS or kind in SPECTRAL_KINDS else "edge"
    form = "product" if kind in _PRODUCT_KINDS else "sum"
    return f"{base}-{form}"


def parse_kind(name: str) -> IndexKind:
    """Look up a kind by its command-line name (case-insensitive)."""
    try:
        return IndexKind(name.strip().lower())
    except ValueError:
        valid = ", ".join(k.value for k in ALL_KINDS)
        raise ValueError(f"unknown index kind {name!r}; expected one of: {valid}") from None


def parse_kind_list(spec: str) -> tuple[IndexKind, ...]:
    """Parse a comma-separated kind list; ``all`` selects every kind."""
    names = [part for part in (s.strip() for s in spec.split(",")) if part]
    if not names:
        raise ValueError("empty index list")
    if any(n.lower() == "all" for n in names):
        return ALL_KINDS
    out = []
    for name in names:
        kind = parse_kind(name)
        if kind not in out:
            out.append(kind)
    return tuple(out)
