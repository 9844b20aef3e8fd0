"""Walk the closed-form coefficient bound across its two regimes.

phi1(p, t) is the largest Re a_1 an H^p function of unit norm can have
once its origin value is pinned to t.  Below a switch point the winner
is a Moebius-type product; above it, a zero-free outer function.  This
script traces both regimes and the quantities that locate the switch.
"""

import math

from hardyx import phi1, psi1, t_p, t_star


def trace_curve(p, n=11):
    label = "inf" if math.isinf(p) else f"{p:g}"
    print(f"\np = {label}")
    print(f"  {'t':>6}  {'phi1':>12}  regime")
    for i in range(n):
        t = i / (n - 1)
        res = phi1(p, t)
        print(f"  {t:>6.2f}  {res.value:>12.8f}  {res.regime}")


def main():
    # p >= 1: the curve falls from 1 to 0, switching branch at 2^(-1/p)
    for p in (1.0, 2.0, math.inf):
        trace_curve(p)
        if not math.isinf(p):
            print(f"  switch at t = 2^(-1/{p:g}) = {2.0 ** (-1.0 / p):.6f}")

    # 0 < p < 1 behaves differently: the curve first rises above 1,
    # peaks at t_star, and the regimes swap at an implicit point t_p
    p = 0.5
    trace_curve(p, n=21)
    print(f"  switch at t_p({p}) = {t_p(p):.12f}")
    print(f"  peak   at t*({p}) = {t_star(p):.12f}")
    print(f"  peak value psi1({p}) = {psi1(p):.12f}")

    # at the switch both parameter families attain the bound
    res = phi1(p, t_p(p))
    print(f"  at t_p: regime = {res.regime}, alpha = {res.alpha:.9f}, "
          f"beta = {res.beta:.9f}")


if __name__ == "__main__":
    main()
