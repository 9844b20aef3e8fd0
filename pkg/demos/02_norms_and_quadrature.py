"""Boundary-integral H^p norms, their exact cross-checks, and a cusp.

The p-th power mean of |f| on the unit circle is computed by a doubling
periodic trapezoid rule.  Two independent routes keep it honest:
Parseval for p = 2, and a binomial identity for the H^1 norm of
(1 + z)^(2k).
"""

import math

import numpy as np

from hardyx import (
    PolyCoeffs,
    circle_mean,
    norm_hinf,
    norm_hp,
    parseval_norm,
)


def main():
    # --- the binomial identity -------------------------------------------
    # ||(1+z)^(2k)||_{H^1} equals the central binomial coefficient
    for k in (1, 2, 3):
        f = PolyCoeffs(tuple(float(math.comb(2 * k, j)) for j in range(2 * k + 1)))
        got = norm_hp(f, 1.0)
        print(f"||(1+z)^{2*k}||_1 = {got:.10f}   expected C({2*k},{k}) = {math.comb(2*k, k)}")

    # --- Parseval at p = 2 -----------------------------------------------
    rng = np.random.default_rng(7)
    c = rng.standard_normal(9) + 1j * rng.standard_normal(9)
    f = PolyCoeffs(tuple(c))
    print(f"\nrandom degree-8 polynomial:")
    print(f"  quadrature H^2 norm  {norm_hp(f, 2.0):.12f}")
    print(f"  sqrt(sum |c_m|^2)    {parseval_norm(f):.12f}")

    # --- the sup norm with a witness -------------------------------------
    # (1+z^2)^2 - z(1-z^2)^2 has constant modulus-4 peaks
    g = PolyCoeffs((1.0, -1.0, 2.0, 2.0, 1.0, -1.0))
    print(f"\n||(1+z^2)^2 - z(1-z^2)^2||_inf = {norm_hinf(g):.10f}")

    # --- integrable singularities ----------------------------------------
    # |1+z|^(1/2) has a cusp at z = -1; seeding a panel break there lets
    # the adaptive rule grade into it
    cusp = lambda th: np.abs(1.0 + np.exp(1j * th)) ** 0.5  # noqa: E731
    got = circle_mean(cusp, rel_tol=1e-10, seeds=(math.pi,))
    # exact: (1/2pi) int |2 cos(th/2)|^(1/2) dth
    exact = 2.0 ** 0.5 * math.gamma(0.75) / (math.pi ** 0.5 * math.gamma(1.25))
    print(f"\nmean of |1+z|^(1/2):  quadrature {got:.12f}  exact {exact:.12f}")


if __name__ == "__main__":
    main()
