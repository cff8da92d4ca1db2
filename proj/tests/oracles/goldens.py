#!/usr/bin/env python3
"""Independent oracle values for the C++ tests (mpmath / plain Python).

Nothing here shares code with the library: Lambda comes from trial
factorization, sums of G from sum_k Lambda(k) Psi(X - k), H from mpmath
complex arithmetic over +-gamma. Run from the repository root; prints
name = value lines that are frozen into the tests.
"""
import math
import sys

import mpmath as mp

mp.mp.dps = 40


def lambda_table(n):
    spf = list(range(n + 1))
    for i in range(2, int(n ** 0.5) + 1):
        if spf[i] == i:
            for j in range(i * i, n + 1, i):
                if spf[j] == j:
                    spf[j] = i
    lam = [mp.mpf(0)] * (n + 1)
    logs = {}
    for m in range(2, n + 1):
        p = spf[m]
        k = m
        while k % p == 0:
            k //= p
        if k == 1:
            if p not in logs:
                logs[p] = mp.log(p)
            lam[m] = logs[p]
    return lam


def show(name, value):
    print(f"{name} = {mp.nstr(value, 17)}")


def main():
    big = int(sys.argv[1]) if len(sys.argv) > 1 else 100000
    lam = lambda_table(big)
    psi = [mp.mpf(0)] * (big + 1)
    for n in range(1, big + 1):
        psi[n] = psi[n - 1] + lam[n]
    powers = [k for k in range(2, big + 1) if lam[k] != 0]

    def G(n):
        return mp.fsum(lam[k] * lam[n - k] for k in powers if k < n and lam[n - k] != 0)

    def sum_g(X):
        # sum_{n<=X} G(n) = sum_k Lambda(k) Psi(X - k)
        return mp.fsum(lam[k] * psi[X - k] for k in powers if k < X)

    show("psi10", psi[10])
    show("g4", G(4))
    show("g5", G(5))
    show("g6", G(6))
    show("gsum6", sum_g(6))
    show("gsum_1e5", sum_g(100000))
    show("gsum_1000", sum_g(1000))

    best_n, best_g = None, None
    for n in range(210, 100001, 210):
        g = G(n)
        if best_g is None or g > best_g:
            best_n, best_g = n, g
    print(f"max210_n = {best_n}")
    show("max210_g", best_g)

    # second term closed form 2 sum_{n<=K-1} (Psi(n) - n)
    for x in (10, 100, 500, 1000):
        show(f"second_closed_{x}", 2 * mp.fsum(psi[n] - n for n in range(1, x)))
    show("second_closed_3", 2 * mp.fsum(psi[n] - n for n in range(1, 3)))

    # h_term single zero at x = 100
    g1 = mp.mpf("14.134725141735")
    rho = mp.mpc(0.5, g1)
    show("h100_g1", -4 * mp.re(mp.power(100, 1 + rho) / (rho * (1 + rho))))
    show("psi_explicit_10_T0", 10 - mp.log(2 * mp.pi) - mp.log(1 - mp.mpf(10) ** -2) / 2)

    # local L2 of R at x = y = 1000 from the exact autocorrelation formula
    N = 1000
    c = [lam[n] - 1 for n in range(N + 1)]
    a = mp.mpf(1) / 1000
    total = 2 * a * mp.fsum(c[n] ** 2 for n in range(1, N + 1))
    for k in range(1, N):
        r = mp.fsum(c[n] * c[n + k] for n in range(1, N - k + 1))
        total += 2 * r * mp.sin(2 * mp.pi * k * a) / (mp.pi * k)
    show("local_l2_1000_1000", total)

    # same quantity by direct evaluation of R at 10^4 Gauss-Legendre nodes
    import numpy as np
    nodes, weights = np.polynomial.legendre.leggauss(10000)
    alpha = nodes * 1e-3
    cf = np.array([float(v) for v in c[1:]])
    ns = np.arange(1, N + 1)
    acc = 0.0
    for lo in range(0, len(alpha), 500):
        ph = np.exp(2j * np.pi * np.outer(alpha[lo:lo + 500], ns))
        acc += float(np.sum(weights[lo:lo + 500] * np.abs(ph @ cf) ** 2))
    print(f"local_l2_1000_1000_gauss = {acc * 1e-3!r}")

    # int_1^10 |Psi(t+2) - Psi(t) - 2|^2 dt, 10^6-point midpoint sum
    psif = np.array([float(v) for v in psi[:20]])
    steps = 10 ** 6
    t = 1 + (np.arange(steps) + 0.5) * (9 / steps)
    d = psif[np.floor(t + 2).astype(int)] - psif[np.floor(t).astype(int)] - 2
    print(f"selberg_10_2_riemann = {float(np.sum(d * d)) * 9 / steps!r}")

    try:
        with open("data/zeros100k.txt") as f:
            gammas = [mp.mpf(line.strip()) for line in f if line.strip()]
    except FileNotFoundError:
        return
    x = mp.mpf("1000.5")
    s = mp.mpf(0)
    lx = mp.log(x)
    for g in gammas:
        rho = mp.mpc(0.5, g)
        s += mp.exp(mp.mpc(0, g * lx)) / (rho * (1 + rho))
    h = -4 * x ** 1.5 * mp.re(s)
    sg = sum_g(1000)
    show("h_1000.5_full", h)
    show("e_1000.5_full", sg - x * x / 2 - h)
    print(f"zeros_used = {len(gammas)}")


if __name__ == "__main__":
    main()
