#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
# Independent high-precision reference values for the unit tests (mpmath, 30 digits).
# Re-run after changing a scenario; paste the printed values into the C++ tests.

import mpmath as mp

mp.mp.dps = 30
pi = mp.pi

lam = mp.mpf("0.125")
d = lam / 5
A = (d / 2) ** 2
xi = A / d**2


def F(theta, k):
    return mp.ellipf(theta, k)  # parameter convention: 1 - k sin^2


def show(name, v):
    print(f"{name:42s} {mp.nstr(v, 20)}")


print("# incomplete elliptic integral, parameter convention")
for theta, k in [("pi/4", 2), ("pi/8", 2), ("0.3", 2), ("1.0", "0.5"), ("1.2", "-3"), ("0.7", "0.99"),
                 ("2.5", "0.3"), ("-0.4", 1.5), ("7.0", "0.8")]:
    show(f"F({theta}|{k})", F(mp.mpmathify(eval(theta, {"pi": pi})), mp.mpf(k)))
show("F(pi/4 - 1e-6 | 2)", F(pi / 4 - mp.mpf("1e-6"), 2))
show("F(pi/4|2)^2", F(pi / 4, 2) ** 2)

print("# complete integral K(m)")
for m in ["0", "0.5", "0.9", "0.999999", "1 - 1e-12"]:
    show(f"K({m})", mp.ellipk(mp.mpf(eval(m))))


def boresight_asymptote(rho, pbar):
    if rho == 1:
        return xi**2 * pbar / 4
    c = mp.sqrt(1 - rho**2) / rho
    return xi**2 * pbar * (F(mp.atan(c) / 2, 2) / c) ** 2 / rho


print("# boresight asymptote, xi = 1/4, pbar = 1e9")
show("asymptote rho=0.1", boresight_asymptote(mp.mpf("0.1"), mp.mpf(10) ** 9))
show("F(atan(sqrt(0.99)/0.1)/2|2)", F(mp.atan(mp.sqrt(mp.mpf("0.99")) / mp.mpf("0.1")) / 2, 2))


def boresight_disk(rq, rp, R, pbar):
    # direct quadrature of the radial boresight integral over a disk of radius R
    f = lambda r: 2 * pi * r * ((1 + r**2 / rq**2) * (1 + r**2 / rp**2)) ** mp.mpf("-0.75")
    integral = mp.quad(f, [0, R])
    return A**2 * pbar / (16 * pi**2 * d**4 * rq**2 * rp**2) * integral**2


print("# boresight disk values (rq=10, rp=100, pbar=1e9), L = 5.025 m")
L = 201 * d
show("disk lower R=L/2", boresight_disk(10, 100, L / 2, mp.mpf(10) ** 9))
show("disk upper R=L/sqrt2", boresight_disk(10, 100, L / mp.sqrt(2), mp.mpf(10) ** 9))


def ula_asymptote(rp, th_p, ph_p, th_q, ph_q, pbar):
    psi_p = mp.sin(th_p) * mp.cos(ph_p)
    cos_phi_q = mp.cos(ph_q)
    return A**2 * pbar * psi_p * cos_phi_q / (pi**2 * d**2 * rp**2) * F(pi / 4, 2) ** 2


print("# line-array asymptote, rp=100, pbar=1e12")
show("ula asymptote", ula_asymptote(100, 3 * pi / 4, -pi / 5, pi / 3, pi / 6, mp.mpf(10) ** 12))


def exact_sum(m_y, m_z, q, p, pbar):
    # q, p = (r, theta, phi); direct Euclidean distances, double loop in mpmath is slow so keep M small
    def node(r, t, ph):
        return (r * mp.sin(t) * mp.cos(ph), r * mp.sin(t) * mp.sin(ph), r * mp.cos(t))

    Q, P = node(*q), node(*p)
    total = mp.mpf(0)
    for iz in range(-(m_z // 2), m_z // 2 + 1):
        for iy in range(-(m_y // 2), m_y // 2 + 1):
            w = (0, iy * d, iz * d)
            dq = mp.sqrt(sum((a - b) ** 2 for a, b in zip(Q, w)))
            dp = mp.sqrt(sum((a - b) ** 2 for a, b in zip(P, w)))
            a = A * Q[0] / (4 * pi * dq**3)
            b = A * P[0] / (4 * pi * dp**3)
            total += mp.sqrt(a * b)
    return total**2 * pbar


print("# exact sum via Cartesian distances")
show("11x7 oblique", exact_sum(11, 7, (3, mp.mpf("1.1"), mp.mpf("0.4")), (7, 2, mp.mpf("-0.3")), mp.mpf(10) ** 9))
show("21x21 boresight", exact_sum(21, 21, (10, pi / 2, 0), (100, pi / 2, 0), mp.mpf(10) ** 9))
