#!/usr/bin/env python3
"""Generate src/weylshell/_olver_tables.py.

The uniform large-order expansion coefficient functions a1, b0, b1, c0, c1, d1
have closed forms in (zeta, t) that cancel catastrophically near the turning
point zeta = 0.  This script evaluates them at 60-digit precision and fits
Chebyshev polynomials on zeta in [-ZETA_CUT, ZETA_CUT], plus a Taylor series
for zeta(z) about z = 1.  Run from the repo root:

    python3 tools/gen_olver_tables.py > src/weylshell/_olver_tables.py
"""

import sys

import mpmath as mp

mp.mp.dps = 60

ZETA_CUT = 0.45
DEG = 40
NPTS = 220

LAM = [mp.mpf(1), mp.mpf(5) / 48, mp.mpf(385) / 4608, mp.mpf(85085) / 663552]
MU = [-(6 * s + 1) * LAM[s] / (6 * s - 1) for s in range(4)]


def upoly(k, t):
    if k == 0:
        return mp.mpf(1)
    if k == 1:
        return (3 * t - 5 * t ** 3) / 24
    if k == 2:
        return (81 * t ** 2 - 462 * t ** 4 + 385 * t ** 6) / 1152
    return (30375 * t ** 3 - 369603 * t ** 5 + 765765 * t ** 7 - 425425 * t ** 9) / 414720


def vpoly(k, t):
    if k == 0:
        return mp.mpf(1)
    if k == 1:
        return (-9 * t + 7 * t ** 3) / 24
    if k == 2:
        return (-135 * t ** 2 + 594 * t ** 4 - 455 * t ** 6) / 1152
    return (-42525 * t ** 3 + 451737 * t ** 5 - 883575 * t ** 7 + 475475 * t ** 9) / 414720


def zeta_of_z(z):
    if z > 1:
        w = mp.sqrt(z * z - 1) - mp.acos(1 / z)
        return -(mp.mpf(3) / 2 * w) ** mp.mpf("2/3")
    if z < 1:
        w = mp.log((1 + mp.sqrt(1 - z * z)) / z) - mp.sqrt(1 - z * z)
        return (mp.mpf(3) / 2 * w) ** mp.mpf("2/3")
    return mp.mpf(0)


def z_of_zeta(zeta_target):
    f = lambda z: zeta_of_z(z) - zeta_target
    return mp.findroot(f, mp.mpf(1) - zeta_target / 2 ** mp.mpf("1/3"))


def coeff_six(z):
    zeta = mp.mpc(zeta_of_z(z))
    t = 1 / mp.sqrt(mp.mpc(1 - z * z))
    zm12 = 1 / mp.sqrt(zeta)
    zm32 = zm12 ** 3
    zp12 = mp.sqrt(zeta)
    a1 = MU[0] * upoly(2, t) + MU[1] * zm32 * upoly(1, t) + MU[2] * zm32 ** 2
    b0 = -zm12 * (upoly(1, t) + LAM[1] * zm32)
    b1 = -zm12 * (upoly(3, t) + LAM[1] * zm32 * upoly(2, t)
                  + LAM[2] * zm32 ** 2 * upoly(1, t) + LAM[3] * zm32 ** 3)
    c0 = -zp12 * (vpoly(1, t) + MU[1] * zm32)
    c1 = -zp12 * (vpoly(3, t) + MU[1] * zm32 * vpoly(2, t)
                  + MU[2] * zm32 ** 2 * vpoly(1, t) + MU[3] * zm32 ** 3)
    d1 = LAM[0] * vpoly(2, t) + LAM[1] * zm32 * vpoly(1, t) + LAM[2] * zm32 ** 2
    for c in (a1, b0, b1, c0, c1, d1):
        assert abs(mp.im(c)) < mp.mpf('1e-40'), c
    return [mp.re(c) for c in (a1, b0, b1, c0, c1, d1)]


def cheb_fit(values, nodes_x):
    """Least-squares Chebyshev fit at the given normalized nodes."""
    n = len(nodes_x)
    A = mp.matrix(n, DEG + 1)
    for i, x in enumerate(nodes_x):
        tkm1, tk = mp.mpf(1), x
        A[i, 0] = 1
        if DEG >= 1:
            A[i, 1] = x
        for k in range(2, DEG + 1):
            tkp1 = 2 * x * tk - tkm1
            A[i, k] = tkp1
            tkm1, tk = tk, tkp1
    ATA = A.T * A
    ATb = A.T * mp.matrix(values)
    sol = mp.lu_solve(ATA, ATb)
    return [sol[k] for k in range(DEG + 1)]


def main():
    # nodes in zeta, Chebyshev-distributed
    xs = [mp.cos(mp.pi * (i + mp.mpf("0.5")) / NPTS) for i in range(NPTS)]
    zetas = [ZETA_CUT * x for x in xs]
    zs = [z_of_zeta(zt) for zt in zetas]
    sixes = [coeff_six(z) for z in zs]
    names = ["A1", "B0", "B1", "C0", "C1", "D1"]
    tables = {}
    for j, name in enumerate(names):
        vals = [six[j] for six in sixes]
        tables[name] = cheb_fit(vals, xs)

    # residual check on off-node points
    worst = mp.mpf(0)
    for i in range(60):
        zt = ZETA_CUT * (2 * mp.mpf(i) / 59 - 1) * mp.mpf("0.995")
        z = z_of_zeta(zt)
        six = coeff_six(z)
        x = zt / ZETA_CUT
        for j, name in enumerate(names):
            c = tables[name]
            tkm1, tk, acc = mp.mpf(1), x, c[0] + c[1] * x
            for k in range(2, DEG + 1):
                tkp1 = 2 * x * tk - tkm1
                acc += c[k] * tkp1
                tkm1, tk = tk, tkp1
            worst = max(worst, abs(acc - six[j]))
    print("# residual check max abs err: %s" % mp.nstr(worst, 3), file=sys.stderr)

    # Taylor of zeta(1+e) = -2^{1/3} e (1 + q1 e + q2 e^2 + ...)
    def reduced(e):
        if e == 0:
            return mp.mpf(1)
        return zeta_of_z(1 + e) / (-(2 ** mp.mpf("1/3")) * e)

    qdeg = 12
    # fit polynomial in e on [-0.06, 0.06]
    es = [mp.mpf("0.06") * mp.cos(mp.pi * (i + mp.mpf("0.5")) / 80) for i in range(80)]
    V = mp.matrix(len(es), qdeg + 1)
    for i, e in enumerate(es):
        for k in range(qdeg + 1):
            V[i, k] = e ** k
    rhs = mp.matrix([reduced(e) for e in es])
    q = mp.lu_solve(V.T * V, V.T * rhs)
    print("# zeta taylor q0..q%d: %s" % (qdeg, mp.nstr(q[0], 20)), file=sys.stderr)

    out = []
    out.append('"""Generated by tools/gen_olver_tables.py -- do not edit by hand."""')
    out.append("")
    out.append("import numpy as np")
    out.append("")
    out.append("ZETA_CUT = %r" % ZETA_CUT)
    out.append("")
    for name in names:
        vals = ", ".join(repr(float(v)) for v in tables[name])
        out.append("CHEB_%s = np.array([%s])" % (name, vals))
        out.append("")
    out.append("# zeta(1+e) = -2**(1/3) * e * (Q[0] + Q[1] e + Q[2] e^2 + ...)")
    vals = ", ".join(repr(float(q[k])) for k in range(qdeg + 1))
    out.append("ZETA_Q = np.array([%s])" % vals)
    print("\n".join(out))


if __name__ == "__main__":
    main()
