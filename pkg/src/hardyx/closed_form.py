"""Closed forms and implicit equations for the first-coefficient extremum.

phi1(p, t) evaluates the sharp bound on Re a_1 over the unit ball of H^p
with f(0) = t fixed.  Two regimes meet at a switch point: below it the
extremal is a Moebius-type product (parameter alpha), above it an outer
function (parameter beta).  For p >= 1 the switch sits at 2^{-1/p}; for
0 < p < 1 it sits at the threshold t_p defined implicitly by F_p(alpha_p)=0,
where both regimes attain the same value and the extremal is non-unique.

All implicit equations are solved by bracketed bisection in log(alpha)
followed by one Newton polish.  The log coordinate matters: alpha_1(p)
behaves like 2^{-1/p}, which is on the order of 1e-150 near the small end
of the supported p range, where a linear-coordinate bisection would lose
all relative accuracy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "MOEBIUS_OUTER",
    "OUTER",
    "BOTH",
    "ClosedFormResult",
    "RootBracket",
    "solve_alpha",
    "solve_beta",
    "phi1",
    "F_p",
    "alpha1",
    "alpha2",
    "alpha_p",
    "t_p",
    "beta_of_alpha",
    "t_star",
    "psi1",
    "AppendixValues",
    "appendix_functions",
]

MOEBIUS_OUTER = "MOEBIUS_OUTER"
OUTER = "OUTER"
BOTH = "BOTH"

# threshold for treating t as sitting exactly on a regime boundary
_BOUNDARY_SNAP = 1e-13


@dataclass(frozen=True)
class ClosedFormResult:
    value: float
    regime: str
    alpha: float | None = None
    beta: float | None = None

    def __post_init__(self):
        if self.regime not in (MOEBIUS_OUTER, OUTER, BOTH):
            raise ValueError(f"unknown regime tag {self.regime!r}")
        if self.value < 0:
            raise ValueError("value must be non-negative")
        if (self.alpha is None) == (self.regime in (MOEBIUS_OUTER, BOTH)):
            raise ValueError("alpha present iff regime is MOEBIUS_OUTER or BOTH")
        if (self.beta is None) == (self.regime in (OUTER, BOTH)):
            raise ValueError("beta present iff regime is OUTER or BOTH")


@dataclass(frozen=True)
class RootBracket:
    """A sign-changing interval, the precondition every bisection starts from."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("bracket requires lo < hi")
        if not self.f_lo * self.f_hi < 0:
            raise ValueError("bracket endpoints must have opposite signs")


def _bisect(f, br: RootBracket, tol: float = 1e-13):
    """Plain bisection on a verified bracket down to interval width tol."""
    lo, hi, f_lo = br.lo, br.hi, br.f_lo
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _newton_polish(x, f, df, lo, hi):
    """One guarded Newton step; falls back to x if it leaves [lo, hi]."""
    d = df(x)
    if d == 0 or not math.isfinite(d):
        return x
    step = f(x) / d
    y = x - step
    if not (lo <= y <= hi) or not math.isfinite(y):
        return x
    return y


# ---------------------------------------------------------------------------
# forward maps and implicit equations
# ---------------------------------------------------------------------------

def _t_of_log_alpha(p: float, L: float) -> float:
    # alpha (1+alpha^2)^{-1/p} evaluated from L = log(alpha), overflow-free
    if math.isinf(p):
        return math.exp(L)
    return math.exp(L - math.log1p(math.exp(2 * L)) / p)


def solve_alpha(p: float, t: float) -> float:
    """Invert t = alpha (1+alpha^2)^{-1/p} on the relevant increasing branch.

    For p >= 1 that branch is alpha in [0, 1) onto [0, 2^{-1/p}); for
    0 < p < 1 it is [0, alpha2(p)], beyond which the map turns around.
    """
    if p <= 0:
        raise ValueError(f"p must be positive (got {p})")
    if t < 0:
        raise ValueError(f"t must be non-negative (got {t})")
    if t == 0:
        return 0.0
    if math.isinf(p):
        if t >= 1:
            raise ValueError(f"t={t} outside [0, 1) for the p=inf branch")
        return t

    if p >= 1:
        hi_L = 0.0
        top = 2.0 ** (-1.0 / p)
    else:
        hi_L = 0.5 * (math.log(p) - math.log(2.0 - p))  # log alpha2
        top = _t_of_log_alpha(p, hi_L)
    if t > top:
        # boundary rounding noise is snapped, anything worse is a domain error
        if t <= top * (1 + 1e-12):
            return math.exp(hi_L) if p < 1 else 1.0
        raise ValueError(f"t={t} exceeds the branch maximum {top}")

    # the map is squeezed between alpha (1+alpha^2)^{-1/p} <= alpha, so the
    # root sits at log t or above
    lo_L = math.log(t)
    g = lambda L: _t_of_log_alpha(p, L) - t  # noqa: E731
    g_lo, g_hi = g(lo_L), g(hi_L)
    if g_lo >= 0.0:
        # exp(log t) can overshoot t by ~eps*|log t| relative, leaving the
        # analytic lower endpoint a few ulps on the wrong side; step down
        # until the sign shows.  If the map cannot resolve below t at all
        # (t near the denormal floor) exp(lo_L) is already the best
        # representable preimage.
        widen = 32 * 2.220446049250313e-16 * (1.0 + abs(lo_L))
        while g_lo > 0.0 and widen <= 1.0:
            lo_L -= widen
            widen *= 4.0
            g_lo = g(lo_L)
        if g_lo >= 0.0:
            return math.exp(lo_L)
    if g_hi == 0.0:
        return math.exp(hi_L)
    L = _bisect(g, RootBracket(lo_L, hi_L, g_lo, g_hi))

    def dg(Lx):
        a2 = math.exp(2 * Lx)
        return _t_of_log_alpha(p, Lx) * (1.0 - (2.0 / p) * a2 / (1.0 + a2))

    L = _newton_polish(L, g, dg, lo_L, hi_L)
    return math.exp(L)


def solve_beta(p: float, t: float) -> float:
    """beta = sqrt(t^{-p} - 1), valid while it lands in [0, 1]."""
    if not (0 < p < math.inf):
        raise ValueError(f"p must lie in (0, inf) (got {p})")
    if not (0 < t <= 1):
        raise ValueError(f"t must lie in (0, 1] (got {t})")
    b2 = t ** (-p) - 1.0
    beta = math.sqrt(max(b2, 0.0))
    if beta > 1.0:
        if beta <= 1.0 + 1e-12:
            return 1.0
        raise ValueError(f"t={t} lies below the outer branch (beta={beta} > 1)")
    return beta


def _case1_value(p: float, alpha: float) -> float:
    if math.isinf(p):
        return 1.0 - alpha * alpha
    a2 = alpha * alpha
    return math.exp(-math.log1p(a2) / p) * (1.0 + (2.0 / p - 1.0) * a2)


def _case2_value(p: float, beta: float) -> float:
    if math.isinf(p):
        return 0.0
    b2 = beta * beta
    return math.exp(-math.log1p(b2) / p) * 2.0 * beta / p


def phi1(p: float, t: float) -> ClosedFormResult:
    """The sharp first-coefficient bound at fixed f(0) = t, with regime tag."""
    if p <= 0:
        raise ValueError(f"p must be positive (got {p})")
    if not (0 <= t <= 1):
        raise ValueError(f"t must lie in [0, 1] (got {t})")

    if p >= 1:
        switch = 1.0 if math.isinf(p) else 2.0 ** (-1.0 / p)
        if t < switch - _BOUNDARY_SNAP:
            alpha = solve_alpha(p, t)
            return ClosedFormResult(_case1_value(p, alpha), MOEBIUS_OUTER, alpha=alpha)
        if math.isinf(p):
            return ClosedFormResult(0.0, OUTER, beta=0.0)
        beta = solve_beta(p, max(t, switch))
        return ClosedFormResult(_case2_value(p, beta), OUTER, beta=beta)

    tp = t_p(p)
    if abs(t - tp) <= _BOUNDARY_SNAP * max(1.0, tp):
        ap = alpha_p(p)
        beta = beta_of_alpha(p, ap)
        return ClosedFormResult(_case1_value(p, ap), BOTH, alpha=ap, beta=beta)
    if t < tp:
        alpha = solve_alpha(p, t)
        return ClosedFormResult(_case1_value(p, alpha), MOEBIUS_OUTER, alpha=alpha)
    beta = solve_beta(p, t)
    return ClosedFormResult(_case2_value(p, beta), OUTER, beta=beta)


# ---------------------------------------------------------------------------
# the 0 < p < 1 implicit machinery
# ---------------------------------------------------------------------------

def _Fp_scaled_log(p: float, L: float) -> float:
    # e^{2L} F_p(e^L); every exponent is a positive multiple of L <= 0, so
    # the value stays bounded no matter how far left the bracket reaches
    return (
        p * p
        + 2 * p * (2 - p) * math.exp(2 * L)
        + (2 - p) ** 2 * math.exp(4 * L)
        - 4 * (math.exp((2 - p) * L) + math.exp((4 - p) * L) - math.exp(2 * L))
    )


def _dFp_scaled_dlog(p: float, L: float) -> float:
    return (
        4 * p * (2 - p) * math.exp(2 * L)
        + 4 * (2 - p) ** 2 * math.exp(4 * L)
        - 4 * ((2 - p) * math.exp((2 - p) * L)
               + (4 - p) * math.exp((4 - p) * L)
               - 2 * math.exp(2 * L))
    )


def F_p(p: float, alpha: float) -> float:
    """p^2 a^{-2} + 2p(2-p) + (2-p)^2 a^2 - 4(a^{-p} + a^{2-p} - 1).

    For alpha so small that a^{-2} leaves the double range the sign is still
    well defined (the a^{-2} term dominates); +-inf is returned accordingly.
    """
    if not (0 < p < 1):
        raise ValueError(f"p must lie in (0, 1) (got {p})")
    if not (0 < alpha <= 1):
        raise ValueError(f"alpha must lie in (0, 1] (got {alpha})")
    L = math.log(alpha)
    scaled = _Fp_scaled_log(p, L)
    if 2 * L < -708.0:
        return math.copysign(math.inf, scaled) if scaled != 0.0 else 0.0
    return scaled * math.exp(-2 * L)


def _Jp_log(p: float, L: float) -> float:
    return 1.0 - 2.0 * math.exp(p * L) + math.exp(2 * L)


def _alpha1_log(p: float) -> float:
    """log of the root in (0, 1) of 1 - 2 a^p + a^2 = 0."""
    if not (0 < p < 1):
        raise ValueError(f"p must lie in (0, 1) (got {p})")
    # J_p decreases to its minimum at a = p^{1/(2-p)} and is negative there,
    # so the interior root lies left of the minimum; widen downward to a
    # positive value
    hi_L = math.log(p) / (2.0 - p)
    f_hi = _Jp_log(p, hi_L)
    if f_hi >= 0:
        raise RuntimeError(f"no sign change at the J_p minimum for p={p}")
    # at L = -log(2)/p - 1 the middle term is e^{-p} < 1, so J_p > 0 there
    lo_L = min(hi_L - 2.0, -math.log(2.0) / p - 1.0)
    f_lo = _Jp_log(p, lo_L)
    while f_lo <= 0:
        lo_L -= 4.0
        if lo_L < -1500.0:
            raise RuntimeError(f"failed to bracket the J_p root for p={p}")
        f_lo = _Jp_log(p, lo_L)
    L = _bisect(lambda Lx: _Jp_log(p, Lx), RootBracket(lo_L, hi_L, f_lo, f_hi))
    L = _newton_polish(
        L,
        lambda Lx: _Jp_log(p, Lx),
        lambda Lx: -2 * p * math.exp(p * Lx) + 2 * math.exp(2 * Lx),
        lo_L,
        hi_L,
    )
    if abs(_Jp_log(p, L)) > 1e-13:
        raise RuntimeError(f"J_p residual too large at the computed root for p={p}")
    return L


def alpha1(p: float) -> float:
    """The root in (0, 1) of 1 - 2 a^p + a^2 = 0; behaves like 2^{-1/p}."""
    out = math.exp(_alpha1_log(p))
    if out == 0.0:
        raise RuntimeError(f"alpha_1 underflows the double range for p={p}")
    return out


def alpha2(p: float) -> float:
    """sqrt(p / (2-p)), the stationary point of F_p."""
    if not (0 < p < 1):
        raise ValueError(f"p must lie in (0, 1) (got {p})")
    return math.sqrt(p / (2.0 - p))


def alpha_p(p: float) -> float:
    """The unique zero of F_p between alpha1 and alpha2, to |F_p| < 1e-12."""
    if not (0 < p < 1):
        raise ValueError(f"p must lie in (0, 1) (got {p})")
    lo_L = _alpha1_log(p)
    hi_L = math.log(alpha2(p))
    # work on e^{2L} F_p, which has the same zero set but stays in range
    # arbitrarily far left
    f_lo = _Fp_scaled_log(p, lo_L)
    f_hi = _Fp_scaled_log(p, hi_L)
    if not (f_lo > 0 and f_hi < 0):
        raise RuntimeError(
            f"F_p sign pattern violated at the bracket for p={p}: "
            f"scaled F(alpha1)={f_lo}, scaled F(alpha2)={f_hi}"
        )
    L = _bisect(lambda Lx: _Fp_scaled_log(p, Lx), RootBracket(lo_L, hi_L, f_lo, f_hi))
    for _ in range(2):
        L = _newton_polish(
            L,
            lambda Lx: _Fp_scaled_log(p, Lx),
            lambda Lx: _dFp_scaled_dlog(p, Lx),
            lo_L,
            hi_L,
        )
    if abs(_Fp_scaled_log(p, L) * math.exp(-2 * L)) > 1e-12:
        raise RuntimeError(f"F_p residual too large at the computed root for p={p}")
    return math.exp(L)


def t_p(p: float) -> float:
    """The regime-switch point alpha_p (1 + alpha_p^2)^{-1/p} for p < 1."""
    ap = alpha_p(p)
    return _t_of_log_alpha(p, math.log(ap))


def beta_of_alpha(p: float, alpha: float) -> float:
    """The outer-branch parameter reaching the same t as alpha."""
    if not (0 < alpha <= 1):
        raise ValueError(f"alpha must lie in (0, 1] (got {alpha})")
    L = math.log(alpha)
    b2 = math.exp(math.log1p(alpha * alpha) - p * L) - 1.0
    return math.sqrt(max(b2, 0.0))


def t_star(p: float) -> float:
    """(1 - p/2)^{1/p}, where t -> phi1(p, t) peaks for 0 < p < 1."""
    if not (0 < p < 2):
        raise ValueError(f"p must lie in (0, 2) (got {p})")
    return math.exp(math.log1p(-0.5 * p) / p)


def psi1(p: float) -> float:
    """(1 - p/2)^{1/p} * 2 / sqrt(p(2-p)), the peak value of phi1(p, .)."""
    return t_star(p) * 2.0 / math.sqrt(p * (2.0 - p))


# ---------------------------------------------------------------------------
# auxiliary functions backing the sign analysis of F_p
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AppendixValues:
    G_p: float
    H: float
    I: float
    J_p: float
    K: float


def appendix_functions(p: float, x: float) -> AppendixValues:
    """Evaluate the auxiliary quantities used in the F_p sign analysis.

    G_p and J_p are functions of x = alpha; H, I, K depend on p alone.
    G_p is the scaled derivative a^{1+p} F_p'(a) / (2(2-p)) in closed form.
    """
    if not (0 < p < 1):
        raise ValueError(f"p must lie in (0, 1) (got {p})")
    if not (0 < x <= 1):
        raise ValueError(f"x must lie in (0, 1] (got {x})")
    L = math.log(x)
    g = (
        -p * p / (2.0 - p) * math.exp((p - 2.0) * L)
        + (2.0 - p) * math.exp((2.0 + p) * L)
        + 2.0 * p / (2.0 - p)
        - 2.0 * math.exp(2.0 * L)
    )
    h = 2.0 - (1.0 + 2.0 * p - p * p) * p ** (0.5 * p) * (2.0 - p) ** (
        0.5 * (2.0 - p)
    )
    i = 4.0 * (1.0 - p) / (1.0 + 2.0 * p - p * p) + math.log(p / (2.0 - p))
    j = 1.0 - 2.0 * math.exp(p * L) + math.exp(2.0 * L)
    k = 2.0 - 2.0 * p + p * p - p ** p * (2.0 - p) ** (2.0 - p)
    return AppendixValues(G_p=g, H=h, I=i, J_p=j, K=k)
