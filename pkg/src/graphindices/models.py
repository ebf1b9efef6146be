"""Random graph models and connectivity calibration.

Two models are supported: Erdős–Rényi graphs G(n, p), where each vertex
pair is linked independently with probability p, and random geometric
graphs on the unit square, where vertices are uniform points linked when
their Euclidean distance is at most the connection radius r.

A graph is stored as an edge list plus a degree vector; dense adjacency
matrices are only materialized by the spectral module, since the sparse
regimes would waste memory otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial.distance import pdist

from .errors import CalibrationError, ParameterError

SQRT2 = math.sqrt(2.0)

_MAX_BISECTION_ITERATIONS = 200


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``edges`` is an (m, 2) integer array with u < v per row, sorted
    lexicographically; the spectral weight-consumption order relies on
    this. Arrays are read-only so instances can be shared freely.
    """

    n: int
    edges: np.ndarray
    degrees: np.ndarray

    def __post_init__(self):
        self.edges.setflags(write=False)
        self.degrees.setflags(write=False)

    @property
    def edge_count(self) -> int:
        return self.edges.shape[0]

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a validated graph from an iterable of vertex pairs."""
        if n < 1:
            raise ParameterError(f"vertex count must be >= 1, got {n}")
        arr = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        if arr.size:
            if arr.min() < 0 or arr.max() >= n:
                raise ParameterError("edge endpoint outside [0, n)")
            if (arr[:, 0] == arr[:, 1]).any():
                raise ParameterError("self-loops are not allowed")
            arr = np.sort(arr, axis=1)
            order = np.lexsort((arr[:, 1], arr[:, 0]))
            arr = arr[order]
            if arr.shape[0] > 1 and (np.diff(arr, axis=0) == 0).all(axis=1).any():
                raise ParameterError("duplicate edges are not allowed")
        degrees = np.bincount(arr.ravel(), minlength=n)
        return cls(n=n, edges=arr, degrees=degrees)

    def validate(self) -> None:
        """Check the structural invariants; raises ParameterError on breach."""
        rebuilt = Graph.from_edges(self.n, self.edges)
        if not np.array_equal(rebuilt.degrees, self.degrees):
            raise ParameterError("degree vector inconsistent with edge list")
        if self.degrees.sum() != 2 * self.edge_count:
            raise ParameterError("handshake identity violated")
        if self.degrees.size and self.degrees.max(initial=0) > self.n - 1:
            raise ParameterError("degree exceeds n - 1")


@dataclass(frozen=True)
class ModelSpec:
    """A random graph model with exactly one connectivity setting.

    The settings are mutually exclusive: a raw parameter (``p`` for ERG
    or ``r`` for RGG), a target mean degree, or a target non-isolated
    vertex ratio.
    """

    model: str
    n: int
    p: float | None = None
    r: float | None = None
    ratio: float | None = None
    mean_degree: float | None = None
    calibration_samples: int = field(default=10_000)
    calibration_tol: float = field(default=0.005)

    def __post_init__(self):
        if self.model not in ("erg", "rgg"):
            raise ParameterError(f"model must be 'erg' or 'rgg', got {self.model!r}")
        if self.n < 1:
            raise ParameterError(f"vertex count must be >= 1, got {self.n}")
        settings = [s for s in (self.p, self.r, self.ratio, self.mean_degree) if s is not None]
        if len(settings) != 1:
            raise ParameterError("exactly one of p, r, ratio, mean_degree must be set")
        if self.p is not None:
            if self.model != "erg":
                raise ParameterError("p applies to the ERG model only")
            if not 0.0 <= self.p <= 1.0:
                raise ParameterError(f"p must lie in [0, 1], got {self.p}")
        if self.r is not None:
            if self.model != "rgg":
                raise ParameterError("r applies to the RGG model only")
            if not 0.0 <= self.r <= SQRT2:
                raise ParameterError(f"r must lie in [0, sqrt(2)], got {self.r}")
        if self.ratio is not None and not 0.0 < self.ratio < 1.0:
            raise ParameterError(f"ratio must lie in (0, 1), got {self.ratio}")
        if self.mean_degree is not None:
            if not 0.0 < self.mean_degree <= self.n - 1:
                raise ParameterError(
                    f"mean degree must lie in (0, n-1], got {self.mean_degree}"
                )

    def resolve_parameter(self, rng: np.random.Generator | None = None) -> float:
        """Return the concrete p or r realizing this connectivity setting.

        Ratio targets on the RGG model need a Monte Carlo calibration and
        therefore an ``rng``; every other setting is closed-form.
        """
        if self.p is not None:
            return self.p
        if self.r is not None:
            return self.r
        if self.model == "erg":
            if self.ratio is not None:
                return calibrate_erg_p(self.n, self.ratio)
            return self.mean_degree / (self.n - 1)
        if self.mean_degree is not None:
            return solve_r_for_mean_degree(self.n, self.mean_degree)
        if rng is None:
            raise ParameterError("RGG ratio calibration needs an rng")
        return calibrate_rgg_r(
            self.n, self.ratio, self.calibration_samples, self.calibration_tol, rng
        )


_TRIU_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _pair_indices(n: int) -> tuple[np.ndarray, np.ndarray]:
    # cached upper-triangle indices; their row-major order defines the
    # edge order every stream consumption depends on
    cached = _TRIU_CACHE.get(n)
    if cached is None:
        cached = np.triu_indices(n, k=1)
        cached[0].setflags(write=False)
        cached[1].setflags(write=False)
        if len(_TRIU_CACHE) > 8:
            _TRIU_CACHE.clear()
        _TRIU_CACHE[n] = cached
    return cached


def generate_erg(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Draw one Erdős–Rényi graph G(n, p).

    Consumes exactly n(n-1)/2 uniforms, one per vertex pair in
    lexicographic order.
    """
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"p must lie in [0, 1], got {p}")
    if n < 1:
        raise ParameterError(f"vertex count must be >= 1, got {n}")
    iu, ju = _pair_indices(n)
    mask = rng.random(iu.size) < p
    edges = np.column_stack((iu[mask], ju[mask])).astype(np.int64)
    degrees = np.bincount(edges.ravel(), minlength=n)
    return Graph(n=n, edges=edges, degrees=degrees)


def generate_rgg(n: int, r: float, rng: np.random.Generator) -> Graph:
    """Draw one random geometric graph on the unit square.

    Vertices are uniform points; u and v are linked when their Euclidean
    distance is <= r (hard, non-periodic boundaries). Consumes exactly 2n
    uniforms for the coordinates.
    """
    if not 0.0 <= r <= SQRT2:
        raise ParameterError(f"r must lie in [0, sqrt(2)], got {r}")
    if n < 1:
        raise ParameterError(f"vertex count must be >= 1, got {n}")
    points = rng.random((n, 2))
    if n == 1:
        return Graph(n=1, edges=np.empty((0, 2), dtype=np.int64),
                     degrees=np.zeros(1, dtype=np.int64))
    mask = pdist(points) <= r
    iu, ju = _pair_indices(n)
    edges = np.column_stack((iu[mask], ju[mask])).astype(np.int64)
    degrees = np.bincount(edges.ravel(), minlength=n)
    return Graph(n=n, edges=edges, degrees=degrees)


def generate(spec: ModelSpec, parameter: float, rng: np.random.Generator) -> Graph:
    """Draw one graph from ``spec``'s model at a resolved raw parameter."""
    if spec.model == "erg":
        return generate_erg(spec.n, parameter, rng)
    return generate_rgg(spec.n, parameter, rng)


def rgg_mean_degree_factor(r):
    """Mean covered-area fraction g(r) of a disk of radius r on the unit square.

    The RGG mean degree is g(r) * (n - 1). The formula is piecewise over
    the branch point r = 1 and accounts for hard boundaries; both branches
    agree at r = 1 (value pi - 13/6) and g(sqrt(2)) = 1.
    """
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < 0.0) or np.any(r_arr > SQRT2):
        raise ParameterError("r must lie in [0, sqrt(2)]")
    result = np.empty_like(r_arr)
    low = r_arr <= 1.0
    rl = r_arr[low]
    result[low] = rl ** 2 * (np.pi - (8.0 / 3.0) * rl + 0.5 * rl ** 2)
    rh = r_arr[~low]
    if rh.size:
        inv = 1.0 / rh
        root = np.sqrt(rh ** 2 - 1.0)
        result[~low] = (
            1.0 / 3.0
            - 2.0 * rh ** 2 * (1.0 - np.arcsin(inv) + np.arccos(inv))
            + (4.0 / 3.0) * (2.0 * rh ** 2 + 1.0) * root
            - 0.5 * rh ** 4
        )
    if np.isscalar(r) or result.ndim == 0:
        return float(result)
    return result


def calibrate_erg_p(n: int, t: float) -> float:
    """Closed-form p making the expected non-isolated vertex ratio equal t.

    A vertex is isolated with probability (1-p)^(n-1), so
    E[V]/n = 1 - (1-p)^(n-1) = t solves to p = 1 - (1-t)^(1/(n-1)).
    """
    if n < 2:
        raise ParameterError(f"calibration needs n >= 2, got {n}")
    if not 0.0 < t < 1.0:
        raise ParameterError(f"target ratio must lie in (0, 1), got {t}")
    return 1.0 - (1.0 - t) ** (1.0 / (n - 1))


def erg_nonisolated_ratio(n: int, p: float) -> float:
    """Analytic expected non-isolated vertex ratio 1 - (1-p)^(n-1)."""
    if n < 2:
        return float(p > 0) if n == 1 else 0.0
    return 1.0 - (1.0 - p) ** (n - 1)


def calibrate_rgg_r(
    n: int,
    t: float,
    samples: int,
    tol: float,
    rng: np.random.Generator,
) -> float:
    """Bisect the connection radius until the estimated E[V]/n hits t.

    No closed form exists for the RGG isolated-vertex probability with
    hard boundaries, so the estimate is Monte Carlo: ``samples`` point
    sets are drawn once from ``rng`` and reused at every bisection step
    (common random numbers), which makes the estimate exactly monotone in
    r and the whole procedure deterministic given the stream.
    """
    if n < 2:
        raise ParameterError(f"calibration needs n >= 2, got {n}")
    if not 0.0 < t < 1.0:
        raise ParameterError(f"target ratio must lie in (0, 1), got {t}")
    if samples < 1000:
        raise ParameterError(f"calibration needs >= 1000 samples, got {samples}")
    if tol <= 0.0:
        raise ParameterError(f"tolerance must be positive, got {tol}")

    # a vertex is non-isolated iff its nearest neighbor is within r, so
    # the estimate at any r is one pass over precomputed NN distances
    nn = np.empty((samples, n))
    for i in range(samples):
        points = rng.random((n, 2))
        dm = np.sqrt(((points[:, None, :] - points[None, :, :]) ** 2).sum(-1))
        np.fill_diagonal(dm, np.inf)
        nn[i] = dm.min(axis=1)
    flat = np.sort(nn.ravel())

    def estimate(radius: float) -> float:
        return np.searchsorted(flat, radius, side="right") / flat.size

    lo, hi = 0.0, SQRT2
    best_r, best_gap = hi, abs(estimate(hi) - t)
    for _ in range(_MAX_BISECTION_ITERATIONS):
        mid = 0.5 * (lo + hi)
        est = estimate(mid)
        gap = abs(est - t)
        if gap < best_gap:
            best_r, best_gap = mid, gap
        if gap <= tol:
            return mid
        if est < t:
            lo = mid
        else:
            hi = mid
    raise CalibrationError(
        f"no radius within tol={tol} of target {t} after "
        f"{_MAX_BISECTION_ITERATIONS} bisections (best gap {best_gap:.3g})",
        lo=lo, hi=hi, estimate=estimate(best_r),
    )


def solve_r_for_mean_degree(n: int, k: float) -> float:
    """Invert g(r)(n-1) = k for the connection radius.

    g is strictly increasing on [0, sqrt(2)], so plain bisection converges;
    the stopping tolerance is 1e-12 measured in g.
    """
    if n < 2:
        raise ParameterError(f"inversion needs n >= 2, got {n}")
    if not 0.0 < k <= n - 1:
        raise ParameterError(f"mean degree must lie in (0, n-1], got {k}")
    target = k / (n - 1)
    if target == 1.0:
        return SQRT2
    lo, hi = 0.0, SQRT2
    for _ in range(_MAX_BISECTION_ITERATIONS):
        mid = 0.5 * (lo + hi)
        value = rgg_mean_degree_factor(mid)
        if abs(value - target) <= 1e-12:
            return mid
        if value < target:
            lo = mid
        else:
            hi = mid
    # bracket is below double resolution; g-gap can stay above 1e-12 only
    # on a pathological plateau, which g does not have
    return 0.5 * (lo + hi)
