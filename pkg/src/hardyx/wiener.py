"""The k-fold rotation-averaging transform on the unit disc.

W_k f(z) = (1/k) sum_{j<k} f(omega^j z) with omega = e^{2 pi i/k} keeps
exactly the Taylor coefficients at indices divisible by k.  The transform is
bounded on H^p by max(k^{1/p-1}, 1); for p < 1 that constant is sharp but
never attained, which ``sharpness_ratio`` demonstrates on the family
f_eps(z) = (z - (1+eps))^{-1/p} as eps shrinks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fn_repr import PolyCoeffs, StructuredExtremal
from .hardy_norm import QuadConfig, circle_mean, norm_hinf, norm_hp

__all__ = [
    "WienerRatioReport",
    "wiener_coeffs",
    "wiener_eval",
    "wiener_bound_check",
    "sharpness_ratio",
    "inner_defect",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class WienerRatioReport:
    """Outcome of a single bound check.

    For p < 1 both ratio and bound are stated in the p-th power convention
    (ratio = ||W_k f||^p / ||f||^p against bound k^{1-p}); for p >= 1 they
    are plain norm ratios against bound 1.
    """

    k: int
    p: float
    ratio: float
    bound: float
    f_descriptor: str

    @property
    def passed(self) -> bool:
        return self.ratio <= self.bound * (1 + 1e-6)


def _check_k(k: int) -> int:
    if k < 2:
        raise ValueError(f"k must be >= 2 (got {k})")
    return int(k)


def wiener_coeffs(c: PolyCoeffs, k: int) -> PolyCoeffs:
    """Zero every coefficient whose index is not a multiple of k."""
    _check_k(k)
    return PolyCoeffs(tuple(a if i % k == 0 else 0 for i, a in enumerate(c.coeffs)))


def wiener_eval(f, k: int, z):
    """(1/k) sum_{j<k} f(omega^j z); z may be a scalar or an array."""
    _check_k(k)
    zs = np.asarray(z, dtype=complex)
    scalar = zs.ndim == 0
    zs = np.atleast_1d(zs)
    acc = np.zeros_like(zs)
    for j in range(k):
        rot = np.exp(2j * math.pi * j / k)
        try:
            vals = np.asarray(f(rot * zs), dtype=complex)
            if vals.shape != zs.shape:
                raise TypeError
        except (TypeError, ValueError):
            vals = np.array([complex(f(rot * zv)) for zv in zs])
        acc = acc + vals
    acc /= k
    return complex(acc[0]) if scalar else acc


def _describe(f) -> str:
    if isinstance(f, PolyCoeffs):
        return f"poly degree {f.degree}"
    if isinstance(f, StructuredExtremal):
        return f"structured extremal k={f.k} l={f.zero_count}"
    return getattr(f, "__name__", None) or type(f).__name__


def wiener_bound_check(f, k: int, p: float, cfg: QuadConfig | None = None) -> WienerRatioReport:
    """Compare ||W_k f|| with the H^p bound max(k^{1/p-1}, 1) ||f||."""
    _check_k(k)
    if p <= 0:
        raise ValueError(f"p must be positive (got {p})")
    if isinstance(f, PolyCoeffs):
        wf = wiener_coeffs(f, k)
    else:
        wf = lambda z: wiener_eval(f, k, z)  # noqa: E731

    if math.isinf(p):
        nf = norm_hinf(f, cfg)
        nw = norm_hinf(wf, cfg)
    else:
        nf = norm_hp(f, p, cfg)
        nw = norm_hp(wf, p, cfg)
    if nf == 0:
        raise ValueError("f has zero norm; the ratio is undefined")
    if p < 1:
        ratio, bound = (nw / nf) ** p, float(k) ** (1.0 - p)
    else:
        ratio, bound = nw / nf, 1.0
    return WienerRatioReport(k=k, p=p, ratio=ratio, bound=bound, f_descriptor=_describe(f))


# ---------------------------------------------------------------------------
# sharpness family f_eps(z) = (z - (1+eps))^{-1/p}
# ---------------------------------------------------------------------------

def _feps_values(theta: np.ndarray, p: float, a: float) -> np.ndarray:
    """f_eps at e^{i theta} for the pole location a = 1 + eps.

    w = e^{i theta} - a has Re w <= -(a-1) < 0, so a logarithm cut along the
    positive reals never meets the range; taking arg in (0, 2 pi) keeps
    w^{-1/p} continuous around the whole circle.  (Any fixed branch shifts
    f_eps by a global unimodular constant only, leaving norms unchanged.)
    """
    w = np.exp(1j * theta) - a
    logw = np.log(np.abs(w)) + 1j * (np.angle(w) % _TWO_PI)
    return np.exp(-logw / p)


def sharpness_ratio(p: float, k: int, eps: float, rel_tol: float = 1e-11) -> float:
    """||W_k f_eps||^p / ||f_eps||^p; tends to k^{1-p} from below as eps -> 0."""
    if not (0 < p < 1):
        raise ValueError(f"p must lie in (0, 1) (got {p})")
    _check_k(k)
    if eps <= 0:
        raise ValueError(f"eps must be positive (got {eps})")
    a = 1.0 + eps

    # |f_eps|^p has the explicit form |e^{i theta} - a|^{-1}, peaked at 0
    def den(theta):
        return 1.0 / np.abs(np.exp(1j * theta) - a)

    # the averaged function peaks near every k-th root of unity
    roots = [_TWO_PI * j / k for j in range(k)]

    def num(theta):
        acc = np.zeros(np.shape(theta), dtype=complex)
        for j in range(k):
            acc += _feps_values(np.asarray(theta) + roots[j], p, a)
        return np.abs(acc / k) ** p

    den_mean = circle_mean(den, rel_tol, seeds=(0.0,))
    num_mean = circle_mean(num, rel_tol, seeds=roots)
    return num_mean / den_mean


def inner_defect(f, k: int, N: int = 4096) -> float:
    """max over an N-grid of |1 - |W_k f||, for f of unit boundary modulus.

    A vanishing defect certifies that the averaged function is inner again,
    which forces W_k f = f; a positive defect witnesses W_k f != f.
    """
    _check_k(k)
    if N < 4:
        raise ValueError("N must be at least 4")
    theta = _TWO_PI * np.arange(N) / N
    z = np.exp(1j * theta)
    try:
        fv = np.asarray(f(z), dtype=complex)
        if fv.shape != z.shape:
            raise TypeError
    except (TypeError, ValueError):
        fv = np.array([complex(f(zv)) for zv in z])
    if np.max(np.abs(np.abs(fv) - 1.0)) > 1e-8:
        raise ValueError("f does not have unit modulus on the boundary grid")
    wv = wiener_eval(f, k, z)
    return float(np.max(np.abs(1.0 - np.abs(wv))))
