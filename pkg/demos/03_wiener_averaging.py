"""The k-fold rotation average and how much norm it can gain.

Averaging f over the k-th roots of unity keeps exactly the Taylor
coefficients at indices divisible by k.  In the quasi-Banach range the
averaged function can be LARGER than f, but never by more than
k^(1/p - 1); a one-parameter family of near-singular functions shows
that exponent cannot be improved.
"""

import numpy as np

from hardyx import (
    PolyCoeffs,
    sharpness_ratio,
    wiener_bound_check,
    wiener_coeffs,
    wiener_eval,
)


def main():
    # --- what the transform does -----------------------------------------
    f = PolyCoeffs((1.0, 4.0, 6.0, 4.0, 1.0))  # (1+z)^4
    print("coefficients of (1+z)^4:        ", [c.real for c in f.coeffs])
    print("after 2-fold averaging:         ",
          [c.real for c in wiener_coeffs(f, 2).coeffs])

    # --- the norm bound across p -----------------------------------------
    rng = np.random.default_rng(11)
    c = rng.standard_normal(13) + 1j * rng.standard_normal(13)
    g = PolyCoeffs(tuple(c))
    print("\nrandom degree-12 polynomial, k = 3:")
    print(f"  {'p':>5}  {'ratio':>10}  {'bound':>10}")
    for p in (0.4, 0.7, 1.0, 2.0, 4.0):
        rep = wiener_bound_check(g, 3, p)
        print(f"  {p:>5.1f}  {rep.ratio:>10.6f}  {rep.bound:>10.6f}")
    # for p >= 1 averaging never grows the norm; the p < 1 rows compare
    # p-th powers against k^(1-p)

    # --- sharpness of the exponent ---------------------------------------
    # f_eps(z) = (z - (1+eps))^(-1/p) concentrates near z = 1 as eps -> 0
    # and pushes the powered ratio toward the k^(1-p) wall
    p, k = 0.5, 2
    print(f"\nsharpness family at p = {p}, k = {k} (limit k^(1-p) = {k ** (1-p):.6f}):")
    for eps in (1e-1, 1e-2, 1e-3, 1e-4, 1e-5):
        print(f"  eps = {eps:7.0e}   ratio = {sharpness_ratio(p, k, eps):.10f}")

    # at p = 1/2 the exponent -1/p is an integer and the k = 2 average of
    # f_eps(z) = (z-a)^(-2), a = 1+eps, collapses to rational form
    a = 1.25
    fam = lambda z: (z - a) ** -2.0  # noqa: E731
    z = 0.3 + 0.4j
    direct = wiener_eval(fam, 2, z)
    closed = (z * z + a * a) / (z * z - a * a) ** 2
    print(f"\nW_2 (z-{a})^-2 at z = {z}:")
    print(f"  averaged evaluation  {direct:.12f}")
    print(f"  rational closed form {closed:.12f}")


if __name__ == "__main__":
    main()
