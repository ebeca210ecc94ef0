"""Generate frozen spot values for composite special-function expressions.

Everything here is evaluated with mpmath at 200 significant digits and then
rounded to double precision. The library must reproduce these numbers through
its own float-level code paths, so the frozen values act as an independent
arbitrary-precision oracle for the composite formulas.

Run from the repository root:

    python3 tools/gen_frozen_spots.py > tests/data/frozen_spots.json
"""

import json

import mpmath as mp

mp.mp.dps = 200


def xi_highprec(M, p, t):
    """Lab-frame background kernel at arbitrary precision."""
    M, p, t = mp.mpf(M), mp.mpf(p), mp.mpf(t)
    x = p * t
    c = (1 - (p / M) ** 2) / (1 + (p / M) ** 2) ** 2
    h1 = mp.struveh(1, x)
    j1 = mp.besselj(1, x)
    y1 = mp.bessely(1, x)
    half_pi = mp.pi / 2
    return half_pi * (h1 - 1j * j1) - 1 + c * (1 + half_pi * (y1 - h1))


def phi_highprec(M, p, Omega, a, t):
    """Three-component background combination at arbitrary precision."""
    M, p, Omega, a, t = (mp.mpf(M), mp.mpf(p), mp.mpf(Omega), mp.mpf(a), mp.mpf(t))
    main = (1 - a) * xi_highprec(M, p, t)
    lo = xi_highprec(M - Omega, p, t) / (1 - Omega / M) ** 2
    hi = xi_highprec(M + Omega, p, t) / (1 + Omega / M) ** 2
    return main + (a / 2) * (lo + hi)


def lambda_pm_highprec(M, Gamma, p):
    """Square-root split of the complex pole position, high precision."""
    M, Gamma, p = mp.mpf(M), mp.mpf(Gamma), mp.mpf(p)
    z = p * p + (M - 1j * Gamma / 2) ** 2
    root = mp.sqrt(z)
    # root = (lam_plus - 1j*lam_minus)/2 up to the principal-branch convention
    lam_plus = 2 * mp.re(root)
    lam_minus = -2 * mp.im(root)
    return lam_minus, lam_plus


def w_highprec(M, Omega, a):
    """Oscillation enhancement factor of the background amplitude."""
    M, Omega, a = mp.mpf(M), mp.mpf(Omega), mp.mpf(a)
    r = (Omega / M) ** 2
    return 1 + a * r * (3 - r) / (1 - r) ** 2


def xi_prime_highprec(M, Gamma, Omega, a, p):
    """Single-mode window gate parameter, high precision."""
    M, Gamma, Omega, a, p = (mp.mpf(M), mp.mpf(Gamma), mp.mpf(Omega),
                             mp.mpf(a), mp.mpf(p))
    gamma = mp.sqrt(1 + (p / M) ** 2)
    v = mp.sqrt(1 - 1 / gamma ** 2)
    bg = Gamma * w_highprec(M, Omega, a)
    return mp.sqrt(Gamma / (mp.pi * M) * v) * bg / (2 * M * (1 - 2 * a))


def c2(z):
    return [float(mp.re(z)), float(mp.im(z))]


def main():
    out = {}

    xi_spot = xi_highprec(100, 210, 1)
    out["xi_M100_p210_t1"] = c2(xi_spot)

    phi_spot = phi_highprec(80, 200, 10, mp.mpf("0.04"), 5)
    out["phi_M80_p200_Om10_a004_t5"] = c2(phi_spot)

    lm, lp = lambda_pm_highprec(100, mp.mpf("0.1"), 210)
    out["lambda_pm_M100_G01_p210"] = [float(lm), float(lp)]

    out["W_M100_Om10_a004"] = float(w_highprec(100, 10, mp.mpf("0.04")))
    out["W_M80_Om10_a004"] = float(w_highprec(80, 10, mp.mpf("0.04")))
    out["W_endpoint_29_18"] = float(w_highprec(2, 1, mp.mpf("0.5")))

    out["xi_prime_M80_G1_Om10_a004_p200"] = float(
        xi_prime_highprec(80, 1, 10, mp.mpf("0.04"), 200))

    # first positive zero of J1, refined at high precision
    out["j1_first_zero"] = float(mp.findroot(lambda x: mp.besselj(1, x), mp.mpf("3.83")))

    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
