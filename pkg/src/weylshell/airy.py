"""Airy functions Ai, Bi and derivatives on the real line.

Three evaluation zones:

- |t| <= 8.7: Maclaurin f/g series in double-double arithmetic.  The series is
  exponentially ill-conditioned for t > 0 (condition ~ e^{2 xi}), which plain
  doubles cannot survive past t ~ 4; the compensated accumulation keeps ~31
  digits and delivers full double accuracy over the whole window.
- t > 8.7: exponential asymptotic expansion, computed in scaled form
  (Ai = ai_s * e^{-xi}, Bi = bi_s * e^{+xi}, xi = (2/3) t^{3/2}).
- t < -8.7: oscillatory asymptotic expansion.

`airy_scaled` exposes the scaled values and the exponent; they are exact
factorizations (not approximations) and feed the log-scaled Bessel path.
"""

import math

import numpy as np

from .accel import jitted
from . import ddouble as dd

# Ai(0), -Ai'(0) split into double-double parts (hi, lo).
_C1_HI = 0.3550280538878172
_C1_LO = 2.05233632436212e-17
_C2_HI = 0.2588194037928068
_C2_LO = -2.522243111610832e-17
_SQRT3 = 1.7320508075688772

_T_SERIES = 8.7


@jitted
def _airy_series(t):
    """f/g Maclaurin sums and their derivatives, double-double."""
    # t^3 must itself be double-double: a rounded cube caps the sum at ~1e-16
    t2_hi, t2_lo = dd.two_prod(t, t)
    t3_hi, t3_lo = dd.dd_mul_d(t2_hi, t2_lo, t)
    # f: sum t^{3k} prod; g: sum t^{3k+1} prod
    tf_hi, tf_lo = 1.0, 0.0
    tg_hi, tg_lo = t, 0.0
    f_hi, f_lo = 1.0, 0.0
    g_hi, g_lo = t, 0.0
    fp_hi, fp_lo = 0.0, 0.0
    gp_hi, gp_lo = 1.0, 0.0
    k = 0
    while k < 80:
        # advance f term: * t^3 / ((3k+2)(3k+3))
        tf_hi, tf_lo = dd.dd_mul(tf_hi, tf_lo, t3_hi, t3_lo)
        tf_hi, tf_lo = dd.dd_div_d(tf_hi, tf_lo, (3.0 * k + 2.0) * (3.0 * k + 3.0))
        tg_hi, tg_lo = dd.dd_mul(tg_hi, tg_lo, t3_hi, t3_lo)
        tg_hi, tg_lo = dd.dd_div_d(tg_hi, tg_lo, (3.0 * k + 3.0) * (3.0 * k + 4.0))
        k += 1
        f_hi, f_lo = dd.dd_add(f_hi, f_lo, tf_hi, tf_lo)
        g_hi, g_lo = dd.dd_add(g_hi, g_lo, tg_hi, tg_lo)
        # derivative terms: f' term = f term * 3k / t ; g' term = g term * (3k+1) / t
        if t != 0.0:
            dfh, dfl = dd.dd_div_d(tf_hi, tf_lo, t)
            dfh, dfl = dd.dd_mul_d(dfh, dfl, 3.0 * k)
            fp_hi, fp_lo = dd.dd_add(fp_hi, fp_lo, dfh, dfl)
            dgh, dgl = dd.dd_div_d(tg_hi, tg_lo, t)
            dgh, dgl = dd.dd_mul_d(dgh, dgl, 3.0 * k + 1.0)
            gp_hi, gp_lo = dd.dd_add(gp_hi, gp_lo, dgh, dgl)
        if abs(tf_hi) < 1e-35 * (1.0 + abs(f_hi)) and abs(tg_hi) < 1e-35 * (1.0 + abs(g_hi)):
            break
    return f_hi, f_lo, g_hi, g_lo, fp_hi, fp_lo, gp_hi, gp_lo


@jitted
def _combine_series(t):
    f_hi, f_lo, g_hi, g_lo, fp_hi, fp_lo, gp_hi, gp_lo = _airy_series(t)
    # Ai = c1 f - c2 g, Bi = sqrt3 (c1 f + c2 g); keep dd until the end
    c1f_h, c1f_l = dd.dd_mul(_C1_HI, _C1_LO, f_hi, f_lo)
    c2g_h, c2g_l = dd.dd_mul(_C2_HI, _C2_LO, g_hi, g_lo)
    ai_h, _ = dd.dd_add(c1f_h, c1f_l, -c2g_h, -c2g_l)
    bi_h, _ = dd.dd_add(c1f_h, c1f_l, c2g_h, c2g_l)
    c1fp_h, c1fp_l = dd.dd_mul(_C1_HI, _C1_LO, fp_hi, fp_lo)
    c2gp_h, c2gp_l = dd.dd_mul(_C2_HI, _C2_LO, gp_hi, gp_lo)
    aip_h, _ = dd.dd_add(c1fp_h, c1fp_l, -c2gp_h, -c2gp_l)
    bip_h, _ = dd.dd_add(c1fp_h, c1fp_l, c2gp_h, c2gp_l)
    return ai_h, bi_h * _SQRT3, aip_h, bip_h * _SQRT3


@jitted
def _uv_sums_pos(xi, sgn):
    """sum u_k (sgn/xi)^k and sum v_k (sgn/xi)^k with optimal-ish truncation."""
    us = 1.0
    vs = 1.0
    uk = 1.0
    r = sgn / xi
    rk = 1.0
    k = 0
    prev = 1.0e300
    while k < 40:
        uk = uk * (6.0 * k + 1.0) * (6.0 * k + 5.0) / (72.0 * (k + 1.0))
        rk *= r
        k += 1
        term_u = uk * rk
        if abs(term_u) > prev:  # asymptotic series turned; stop
            break
        prev = abs(term_u)
        vk = -uk * (6.0 * k + 1.0) / (6.0 * k - 1.0)
        us += term_u
        vs += vk * rk
        if abs(term_u) < 1e-18:
            break
    return us, vs


@jitted
def _uv_sums_osc(xi):
    """Even/odd u- and v-sums for the oscillatory side.

    Returns (Pu, Qu, Pv, Qv) with Pu = sum (-1)^k u_{2k} xi^{-2k},
    Qu = sum (-1)^k u_{2k+1} xi^{-2k-1}, and the v twins.
    """
    pu = 1.0
    qu = 0.0
    pv = 1.0
    qv = 0.0
    uk = 1.0
    xij = 1.0
    j = 0
    prev = 1.0e300
    while j < 40:
        uk = uk * (6.0 * j + 1.0) * (6.0 * j + 5.0) / (72.0 * (j + 1.0))
        xij /= xi
        j += 1
        term = uk * xij
        if abs(term) > prev:
            break
        prev = abs(term)
        vk = -uk * (6.0 * j + 1.0) / (6.0 * j - 1.0)
        if j % 2 == 1:
            s = -1.0 if ((j - 1) // 2) % 2 == 1 else 1.0
            qu += s * term
            qv += s * vk * xij
        else:
            s = -1.0 if (j // 2) % 2 == 1 else 1.0
            pu += s * term
            pv += s * vk * xij
        if abs(term) < 1e-18:
            break
    return pu, qu, pv, qv


@jitted
def airy_osc_quad(s, xi):
    """Oscillatory-side quad at t = -s (s >= 8.7) with caller-supplied phase.

    xi must equal (2/3) s^{3/2}; passing it avoids the ulp amplification of
    recomputing the phase from s when xi is large (the caller often knows xi
    to ~1 ulp from a cancellation-free formula).
    """
    s4 = math.sqrt(math.sqrt(s))
    spi = math.sqrt(math.pi)
    pu, qu, pv, qv = _uv_sums_osc(xi)
    c = math.cos(xi + 0.25 * math.pi)
    sn = math.sin(xi + 0.25 * math.pi)
    ai = (sn * pu - c * qu) / (spi * s4)
    bi = (c * pu + sn * qu) / (spi * s4)
    aip = -(c * pv + sn * qv) * s4 / spi
    bip = (sn * pv - c * qv) * s4 / spi
    return ai, bi, aip, bip


@jitted
def airy_scaled(t):
    """Return (ai_s, bi_s, aip_s, bip_s, xi): Ai = ai_s e^{-xi}, Bi = bi_s e^{xi}.

    For t < 0, xi = 0 and the scaled values are the plain ones.
    """
    if t >= _T_SERIES:
        xi = (2.0 / 3.0) * t * math.sqrt(t)
        t4 = math.sqrt(math.sqrt(t))
        us_m, vs_m = _uv_sums_pos(xi, -1.0)
        us_p, vs_p = _uv_sums_pos(xi, 1.0)
        spi = math.sqrt(math.pi)
        ai_s = 0.5 / (spi * t4) * us_m
        aip_s = -0.5 * t4 / spi * vs_m
        bi_s = 1.0 / (spi * t4) * us_p
        bip_s = t4 / spi * vs_p
        return ai_s, bi_s, aip_s, bip_s, xi
    if t >= 0.0:
        ai, bi, aip, bip = _combine_series(t)
        xi = (2.0 / 3.0) * t * math.sqrt(t)
        e = math.exp(xi)
        return ai * e, bi / e, aip * e, bip / e, xi
    if t > -_T_SERIES:
        ai, bi, aip, bip = _combine_series(t)
        return ai, bi, aip, bip, 0.0
    s = -t
    xi = (2.0 / 3.0) * s * math.sqrt(s)
    s4 = math.sqrt(math.sqrt(s))
    spi = math.sqrt(math.pi)
    pu, qu, pv, qv = _uv_sums_osc(xi)
    c = math.cos(xi + 0.25 * math.pi)
    sn = math.sin(xi + 0.25 * math.pi)
    ai = (sn * pu - c * qu) / (spi * s4)
    bi = (c * pu + sn * qu) / (spi * s4)
    aip = -(c * pv + sn * qv) * s4 / spi
    bip = (sn * pv - c * qv) * s4 / spi
    return ai, bi, aip, bip, 0.0


@jitted
def airy_quad_values(t):
    """(Ai, Bi, Ai', Bi') at real t; Bi overflows for t ≳ 700^{2/3}*?~103."""
    ai_s, bi_s, aip_s, bip_s, xi = airy_scaled(t)
    if xi == 0.0:
        return ai_s, bi_s, aip_s, bip_s
    em = math.exp(-xi)
    ep = math.exp(xi)
    return ai_s * em, bi_s * ep, aip_s * em, bip_s * ep


def airy_quad(t):
    """Public quad with the standard Wronskian guarantee.

    Returns a dict-like tuple (ai, bi, aip, bip).
    """
    t = float(t)
    if not math.isfinite(t):
        raise ValueError("airy_quad requires finite t")
    return airy_quad_values(t)


# ---------------------------------------------------------------------------
# Zeros of Ai(-x) and Ai'(-x), cached for the phase bookkeeping.

_ai_zero_cache = None
_aip_zero_cache = None
_N_ZERO_CACHE = 140


@jitted
def _ai_neg(x):
    ai, _, _, _ = airy_quad_values(-x)
    return ai


@jitted
def _aip_neg(x):
    _, _, aip, _ = airy_quad_values(-x)
    return aip


def _bisect_zero(fn, lo, hi):
    flo = fn(lo)
    fhi = fn(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise RuntimeError("airy zero bracket does not straddle a sign change")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm = fn(mid)
        if fm == 0.0:
            return mid
        if flo * fm < 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def _build_zero_caches():
    global _ai_zero_cache, _aip_zero_cache
    if _ai_zero_cache is not None:
        return
    tp = 1.5 * math.pi
    aip = np.empty(_N_ZERO_CACHE)
    ai = np.empty(_N_ZERO_CACHE)
    for k in range(1, _N_ZERO_CACHE + 1):
        # brackets from the classical phase counts; widened until a sign change
        lo = (tp * (k - 0.80)) ** (2.0 / 3.0)
        hi = (tp * (k - 0.70)) ** (2.0 / 3.0)
        while _aip_neg(lo) * _aip_neg(hi) > 0.0:
            lo -= 0.05
            hi += 0.05
        aip[k - 1] = _bisect_zero(_aip_neg, lo, hi)
        lo = (tp * (k - 0.30)) ** (2.0 / 3.0)
        hi = (tp * (k - 0.20)) ** (2.0 / 3.0)
        while _ai_neg(lo) * _ai_neg(hi) > 0.0:
            lo -= 0.05
            hi += 0.05
        ai[k - 1] = _bisect_zero(_ai_neg, lo, hi)
    _aip_zero_cache = aip
    _ai_zero_cache = ai


def ai_negative_zeros():
    """First zeros s_k of Ai(-x), increasing."""
    _build_zero_caches()
    return _ai_zero_cache


def aip_negative_zeros():
    """First zeros t_k of Ai'(-x), increasing."""
    _build_zero_caches()
    return _aip_zero_cache
