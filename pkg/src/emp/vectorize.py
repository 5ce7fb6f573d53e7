"""Fixed-size vectorizations of persistence diagrams.

Every method maps a diagram to a vector whose length depends only on the
threshold sequence (and, for images, the chosen resolution) — never on the
diagram itself.  Landscape-family methods sample on the thresholds plus their
midpoints (2n-1 points); curve methods sample on the n thresholds.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import ndtr

from .errors import ConfigError
from .persistence import PersistenceDiagram

METHODS = ("betti", "landscape", "silhouette", "entropy", "image")

DEFAULT_IMAGE_RESOLUTION = (50, 50)


@dataclass(frozen=True)
class VectorizedDiagram:
    """A vectorized diagram: ``values`` (vector, or matrix for images), the
    sampling ``grid``, the method name, and its parameters."""

    values: np.ndarray
    grid: np.ndarray
    method: str
    params: dict = field(default_factory=dict)

    @property
    def vector(self) -> np.ndarray:
        """Row form used when stacking into summary matrices (row-major for images)."""
        return np.asarray(self.values, dtype=float).ravel()


def sample_grid(betas) -> np.ndarray:
    """Thresholds interleaved with their midpoints: 2n-1 points."""
    betas = np.asarray(betas, dtype=float)
    if betas.size == 1:
        return betas.copy()
    out = np.empty(2 * betas.size - 1)
    out[0::2] = betas
    out[1::2] = 0.5 * (betas[:-1] + betas[1:])
    return out


def vector_length(method: str, n_thresholds: int, resolution=DEFAULT_IMAGE_RESOLUTION) -> int:
    if method in ("betti", "entropy"):
        return n_thresholds
    if method in ("landscape", "silhouette"):
        return 2 * n_thresholds - 1
    if method == "image":
        return resolution[0] * resolution[1]
    raise ConfigError(f"unknown vectorization method {method!r}")


def _finite_points(pd: PersistenceDiagram) -> np.ndarray:
    pts = pd.points
    if pts.size and not np.all(np.isfinite(pts)):
        raise ConfigError("diagram has non-finite entries; cap essential bars first")
    return pts


def _tents(pts: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Tent functions, one row per bar: clip(min(x - b, d - x), 0)."""
    b = pts[:, 0][:, None]
    d = pts[:, 1][:, None]
    return np.maximum(np.minimum(x[None, :] - b, d - x[None, :]), 0.0)


def landscape(pd: PersistenceDiagram, betas, order: int = 1) -> VectorizedDiagram:
    """Order-th largest tent value on the 2n-1 grid; zeros when the diagram
    has fewer than ``order`` bars."""
    if order < 1:
        raise ConfigError("landscape order must be >= 1")
    x = sample_grid(betas)
    pts = _finite_points(pd)
    if len(pts) < order:
        vals = np.zeros_like(x)
    else:
        t = _tents(pts, x)
        if order == 1:
            vals = t.max(axis=0)
        else:
            vals = -np.partition(-t, order - 1, axis=0)[order - 1]
    return VectorizedDiagram(vals, x, "landscape", {"order": order})


def silhouette(pd: PersistenceDiagram, betas, power: float = 1.0) -> VectorizedDiagram:
    """Lifespan-power weighted average of the tents on the 2n-1 grid."""
    x = sample_grid(betas)
    pts = _finite_points(pd)
    w = (pts[:, 1] - pts[:, 0]) ** power if len(pts) else np.zeros(0)
    total = w.sum()
    if total <= 0:
        vals = np.zeros_like(x)
    else:
        vals = (w[:, None] * _tents(pts, x)).sum(axis=0) / total
    return VectorizedDiagram(vals, x, "silhouette", {"power": power})


def betti_curve(pd: PersistenceDiagram, betas) -> VectorizedDiagram:
    betas = np.asarray(betas, dtype=float)
    vals = np.array([pd.betti_at(t) for t in betas], dtype=float)
    return VectorizedDiagram(vals, betas, "betti", {})


def entropy_curve(pd: PersistenceDiagram, betas) -> VectorizedDiagram:
    """Normalized life entropy: at each threshold, -sum over alive bars of
    (l_i / L) log(l_i / L), with L the total lifespan of the whole diagram."""
    betas = np.asarray(betas, dtype=float)
    spans = pd.lifespans
    total = spans.sum()
    if total <= 0:
        return VectorizedDiagram(np.zeros_like(betas), betas, "entropy", {})
    terms = np.zeros_like(spans)
    pos = spans > 0
    frac = spans[pos] / total
    terms[pos] = -frac * np.log(frac)
    vals = np.array([terms[pd.alive_at(t)].sum() for t in betas])
    return VectorizedDiagram(vals, betas, "entropy", {})


def persistence_image(
    pd: PersistenceDiagram,
    betas,
    resolution=DEFAULT_IMAGE_RESOLUTION,
    bandwidth: float | None = None,
    weight_power: float = 1.0,
) -> VectorizedDiagram:
    """Gaussian persistence image on the (birth, lifespan) plane.

    The grid spans [beta_1, beta_n] x [0, beta_n - beta_1] with ``resolution``
    = (birth cells, lifespan cells); each cell holds the exact integral of the
    weighted Gaussian mixture over the cell (product of 1d normal CDFs).
    Bandwidth defaults to the diagonal of one grid cell.
    """
    betas = np.asarray(betas, dtype=float)
    k, l = int(resolution[0]), int(resolution[1])
    if k < 1 or l < 1:
        raise ConfigError("image resolution must be at least 1x1")
    lo, hi = float(betas[0]), float(betas[-1])
    span = hi - lo
    if span <= 0:
        raise ConfigError("image domain needs at least two distinct thresholds")
    xs = np.linspace(lo, hi, k + 1)
    ys = np.linspace(0.0, span, l + 1)
    if bandwidth is None:
        bandwidth = float(np.hypot(span / k, span / l))
    if bandwidth <= 0:
        raise ConfigError("image bandwidth must be positive")
    pts = _finite_points(pd)
    if len(pts) == 0:
        img = np.zeros((k, l))
    else:
        b = pts[:, 0]
        q = pts[:, 1] - pts[:, 0]
        w = q**weight_power
        dx = ndtr((xs[None, 1:] - b[:, None]) / bandwidth) - ndtr(
            (xs[None, :-1] - b[:, None]) / bandwidth
        )
        dy = ndtr((ys[None, 1:] - q[:, None]) / bandwidth) - ndtr(
            (ys[None, :-1] - q[:, None]) / bandwidth
        )
        img = np.einsum("i,ir,is->rs", w, dx, dy)
    params = {"resolution": (k, l), "bandwidth": float(bandwidth), "weight_power": weight_power}
    return VectorizedDiagram(img, betas, "image", params)


def vectorize(pd: PersistenceDiagram, method: str, betas, **params) -> VectorizedDiagram:
    """Dispatch by method name (one of ``METHODS``)."""
    if method == "betti":
        return betti_curve(pd, betas)
    if method == "landscape":
        return landscape(pd, betas, **params)
    if method == "silhouette":
        return silhouette(pd, betas, **params)
    if method == "entropy":
        return entropy_curve(pd, betas)
    if method == "image":
        return persistence_image(pd, betas, **params)
    raise ConfigError(f"unknown vectorization method {method!r}")
