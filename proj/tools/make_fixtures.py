#!/usr/bin/env python3
"""Regenerates data/fixtures.json from mpmath (50 digits)."""
import json
import sys

import mpmath as mp

mp.mp.dps = 50


def zeta(n, s, t):
    x = mp.tanh(t / 2) ** 2
    return mp.cosh(t / 2) ** (-2 * s) * mp.hyp2f1(s - n, s + n, 1, x)


def discrete(n):
    s = mp.mpf(1) if float(n).is_integer() else mp.mpf(1.5)
    out = []
    while s <= abs(n):
        out.append(s)
        s += 1
    return out


def main(path):
    refs = []
    for twice_n in (0, 1, 2, 3, 4, 6):
        n = mp.mpf(twice_n) / 2
        params = [mp.mpc(0.5, lam) for lam in (0, 1, 5, 10)] + [mp.mpc(s, 0) for s in discrete(n)]
        for s in params:
            for t in ("0.5", "2", "5"):
                v = zeta(n, s, mp.mpf(t))
                refs.append({"twice_n": twice_n, "s": [float(s.real), float(s.imag)], "t": float(t),
                             "value": [float(mp.re(v)), float(mp.im(v))]})
    gammas = []
    for z in (mp.mpc(0.5, 0), mp.mpc(0, 1), mp.mpc(-3.5, 2), mp.mpc(7.25, -30)):
        g = mp.gamma(z)
        gammas.append({"z": [float(z.real), float(z.imag)], "value": [float(mp.re(g)), float(mp.im(g))]})
    c0 = mp.gamma(1j) / mp.gamma(0.5 + 1j) / mp.sqrt(mp.pi)
    doc = {
        "version": 1,
        "b0": float(2 / mp.sqrt(mp.pi)),
        "b0_tolerance": 1e-3,
        "zeta_tolerance": 1e-9,
        "zeta": refs,
        "gamma": gammas,
        "c0_at_1": [float(mp.re(c0)), float(mp.im(c0))],
    }
    with open(path, "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/fixtures.json")
