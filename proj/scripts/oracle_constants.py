#!/usr/bin/env python3
"""Recompute the frozen constants asserted by the test suite from first principles.

Run with no arguments; prints each constant with full precision so the hard-coded
oracles in tests/ can be audited independently of the C++ implementation.
"""

import math

C = 299792458.0  # m/s


def unit(v):
    n = math.sqrt(sum(x * x for x in v))
    return [x / n for x in v]


def sub(a, b):
    return [x - y for x, y in zip(a, b)]


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def relative_doppler(p_m, v_m, p_k, v_k):
    """Nominal shift in m/s along the canonical line-of-sight axis."""
    d = unit(sub(p_k, p_m))
    return dot(sub(v_m, v_k), d)


def main():
    f_c = 1e9
    T = 1e-6
    P = 10.0

    # Default three-node geometry.
    p_a, v_a = [0.0, 0.0, 0.0], [6700.0, 0.0, 0.0]
    ang = math.radians(10.0)
    p_b, v_b = [1e5, 0.0, 0.0], [6700.0 * math.cos(ang), 6700.0 * math.sin(ang), 0.0]
    p_e = [96691.0, 314088.0, 0.0]
    v_e = [2000.0 * math.sqrt(0.5), 2000.0 * math.sqrt(0.5), 0.0]

    f_ab = relative_doppler(p_a, v_a, p_b, v_b)
    f_ae = relative_doppler(p_a, v_a, p_e, v_e)
    f_be = relative_doppler(p_b, v_b, p_e, v_e)
    print(f"f_ab nominal           = {f_ab!r} m/s")
    print(f"f_ab cyclic            = {f_c / C * f_ab!r} Hz")
    print(f"f_ae nominal           = {f_ae!r} m/s")
    print(f"f_be nominal           = {f_be!r} m/s")
    print(f"theta ratio A-E        = {(f_ae / f_ab) ** 2!r}")
    print(f"theta ratio B-E        = {(f_be / f_ab) ** 2!r}")

    # Stochastic-velocity budget: kappa = sigma_v^2 / speed, both nodes at 0.1.
    sigma_d_sq = 0.1 * 6700.0 + 0.1 * 6700.0
    print(f"sigma_d^2 at kappa 0.1 = {sigma_d_sq!r} (m/s)^2")

    # Upper key rate: Gaussian entropy of the shift plus the carrier scaling.
    r_star = 0.5 * math.log(2.0 * math.pi * math.e * sigma_d_sq) + math.log(f_c / C)
    print(f"max key rate           = {r_star!r} nats")

    # Spectral peak law for the default pair.
    sigma_theta_sq = (P * T**3 / 2.0) * (f_c / C) ** 2 * sigma_d_sq
    lam = f_ab**2 / sigma_d_sq
    print(f"sigma_theta^2          = {sigma_theta_sq!r}")
    print(f"lambda                 = {lam!r}")
    print(f"mean peak              = {sigma_theta_sq * (1.0 + lam)!r}")

    # Exact vs small-shift peak laws at |f_D| T = 0.1 and 0.01.
    for fdt in (0.1, 0.01):
        f_d = fdt / T
        s = math.sin(math.pi * (1.0 - fdt)) / (math.pi * (1.0 - fdt))
        exact = P * T / 2.0 * s * s
        quad = P * T**3 / 2.0 * f_d * f_d
        print(f"exact peak  |f_D|T={fdt:<5} = {exact!r}")
        print(f"law gap     |f_D|T={fdt:<5} = {abs(quad - exact) / exact!r}")

    # Pilot-exchange timing at the default inter-satellite distance.
    d = 3.8e7
    delta_t = 2.0 * d / C
    print(f"delta_t at 3.8e7 m     = {delta_t!r} s")
    print(f"accel bound (exact c)  = {1000.0 / delta_t!r} m/s^2")
    print(f"accel bound (c=3e8)    = {1000.0 / (2.0 * d / 3e8)!r} m/s^2")

    # Doppler magnitude check: 1 km/s radial at a 2 GHz carrier.
    print(f"doppler at 1 km/s,2GHz = {2e9 / C * 1000.0!r} Hz")

    # Standard normal spot values used by the quadrature tests.
    def phi(x):
        return 0.5 * math.erfc(-x / math.sqrt(2.0))

    print(f"Phi(1.96)              = {phi(1.96)!r}")
    print(f"Phi(5) - Phi(0)        = {phi(5.0) - phi(0.0)!r}")


if __name__ == "__main__":
    main()
