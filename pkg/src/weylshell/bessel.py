"""Bessel functions J_nu, Y_nu and derivatives for real order nu >= 0, x > 0.

Evaluation strategy (regime tags in parentheses):

- nu >= NU_OLVER: two-term uniform large-order asymptotics, `olver.py`
  (``olver_uniform``, or ``airy_transition`` inside |x - nu| <= nu^{1/3+0.1});
- nu <  NU_OLVER, x < 2: Temme's series for Y at reduced order plus a
  CF1-normalized downward recurrence for J (``series``);
- nu <  NU_OLVER, x >= 2: Steed's method -- CF1 for J'/J, the continued
  fraction of the Hankel-function logarithmic derivative (CF2) for p + iq,
  Wronskian normalization, stable upward recurrence for Y (``hankel``).

The continued-fraction engine is accurate to ~1e-13 relative over its whole
range; the Olver branch contributes ~0.7/nu^4.  Magnitudes are carried as
(mantissa, base-2 exponent) through the recurrences, so the same engine backs
both the plain quad (overflow raises, underflow flushes to signed zero) and
the log-scaled variant.
"""

import math

import numpy as np

from .accel import jitted
from .errors import DomainError, OverflowEvaluationError
from .olver import olver_quad_scaled, zeta_of_z

NU_OLVER = 120.0

REGIME_SERIES = 0
REGIME_HANKEL = 1
REGIME_OLVER = 2
REGIME_AIRY_TRANSITION = 3

REGIME_NAMES = ("series", "hankel", "olver_uniform", "airy_transition")

_EPS = 1.0e-16
_FPMIN = 1.0e-290
_MAXIT = 400000
_XMIN_CF2 = 2.0

# odd Taylor coefficients of 1/Gamma(1+t); gam1(mu) = -sum c_{2k+1} mu^{2k}
_RG1 = 0.5772156649015329
_RG3 = -0.04200263503409524
_RG5 = -0.04219773455554433
_RG7 = 0.0072189432466631
_RG9 = -0.00021524167411495098
_RG11 = -2.013485478078824e-05
_RG13 = 1.133027231981696e-06

_STATUS_OK = 0
_STATUS_Y_OVERFLOW = 1
_STATUS_NOCONV = 2


@jitted
def _cf1(nu, x):
    """J'_nu/J_nu by Lentz; returns (ratio, sign_flips, converged)."""
    xi = 1.0 / x
    xi2 = 2.0 * xi
    h = nu * xi
    if h < _FPMIN:
        h = _FPMIN
    b = xi2 * nu
    c = h
    d = 0.0
    isign = 1
    for _ in range(_MAXIT):
        b += xi2
        d = b - d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = b - 1.0 / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        dl = c * d
        h *= dl
        if d < 0.0:
            isign = -isign
        if abs(dl - 1.0) < _EPS:
            return h, isign, True
    return h, isign, False


@jitted
def _cf2(mu, x):
    """p + iq = (J' + iY')/(J + iY) at order mu, x >= 2 (complex Lentz)."""
    mu2 = mu * mu
    # C = a1/(b1 + a2/(b2 + ...)), a_k = (k-1/2)^2 - mu^2, b_k = 2(x + k i)
    fc = complex(_FPMIN, 0.0)
    cc = fc
    dc = complex(0.0, 0.0)
    converged = False
    for k in range(1, _MAXIT):
        ak = (k - 0.5) * (k - 0.5) - mu2
        bk = complex(2.0 * x, 2.0 * k)
        dc = bk + ak * dc
        if abs(dc.real) + abs(dc.imag) < _FPMIN:
            dc = complex(_FPMIN, 0.0)
        cc = bk + ak / cc
        if abs(cc.real) + abs(cc.imag) < _FPMIN:
            cc = complex(_FPMIN, 0.0)
        dc = 1.0 / dc
        delta = cc * dc
        fc = fc * delta
        if abs(delta.real - 1.0) + abs(delta.imag) < _EPS:
            converged = True
            break
    ratio = complex(-0.5 / x, 1.0) + complex(0.0, 1.0 / x) * fc
    return ratio.real, ratio.imag, converged


@jitted
def _gam1(mu):
    if abs(mu) < 0.05:
        m2 = mu * mu
        return -(_RG1 + m2 * (_RG3 + m2 * (_RG5 + m2 * (_RG7 + m2 * (
            _RG9 + m2 * (_RG11 + m2 * _RG13))))))
    return (1.0 / math.gamma(1.0 - mu) - 1.0 / math.gamma(1.0 + mu)) / (2.0 * mu)


@jitted
def _temme_y(mu, x):
    """Y_mu(x), Y_{mu+1}(x) for |mu| <= 1/2, 0 < x <= 2 (Temme's series)."""
    gampl = 1.0 / math.gamma(1.0 + mu)
    gammi = 1.0 / math.gamma(1.0 - mu)
    gam1 = _gam1(mu)
    gam2 = 0.5 * (gammi + gampl)
    pimu = math.pi * mu
    if abs(pimu) < 1.0e-15:
        fact = 1.0
    else:
        fact = pimu / math.sin(pimu)
    d = -math.log(0.5 * x)
    e = mu * d
    if abs(e) < 1.0e-15:
        fact2 = 1.0
    else:
        fact2 = math.sinh(e) / e
    ff = 2.0 / math.pi * fact * (gam1 * math.cosh(e) + gam2 * fact2 * d)
    ee = math.exp(e)
    p = ee / (gampl * math.pi)
    q = 1.0 / (ee * math.pi * gammi)
    pimu2 = 0.5 * pimu
    if abs(pimu2) < 1.0e-15:
        fact3 = 1.0
    else:
        fact3 = math.sin(pimu2) / pimu2
    r = math.pi * pimu2 * fact3 * fact3
    c = 1.0
    d2 = -0.25 * x * x
    summ = ff + r * q
    sum1 = p
    for i in range(1, _MAXIT):
        ff = (i * ff + p + q) / (i * i - mu * mu)
        c *= d2 / i
        p /= (i - mu)
        q /= (i + mu)
        dl = c * (ff + r * q)
        summ += dl
        dl1 = c * p - i * dl
        sum1 += dl1
        if abs(dl) < (1.0 + abs(summ)) * _EPS:
            break
    ymu = -summ
    y1 = -sum1 * (2.0 / x)
    return ymu, y1


@jitted
def _engine_cf(nu, x):
    """Steed/Temme engine. Returns (j, ej, y, ey, jp, yp, status) where the
    true values are j*2^ej, y*2^ey, jp*2^ej, yp*2^ey."""
    if x >= _XMIN_CF2:
        nl = int(nu - x + 1.5)
        if nl < 0:
            nl = 0
    else:
        nl = int(nu + 0.5)
    mu = nu - nl
    w = 2.0 / (math.pi * x)
    f, isign, ok1 = _cf1(nu, x)
    if not ok1:
        return 0.0, 0, 0.0, 0, 0.0, 0.0, _STATUS_NOCONV

    # downward ratio recurrence nu -> mu, rescaling by 2^-600 as needed
    rjl = float(isign)
    rjpl = f * rjl
    scale = 0
    fact = nu / x
    for _ in range(nl):
        rjtemp = fact * rjl + rjpl
        fact -= 1.0 / x
        rjpl = fact * rjtemp - rjl
        rjl = rjtemp
        if abs(rjl) > 1.0e250:
            rjl = math.ldexp(rjl, -600)
            rjpl = math.ldexp(rjpl, -600)
            scale += 600
    if rjl == 0.0:
        rjl = _EPS
    fmu = rjpl / rjl

    if x >= _XMIN_CF2:
        p, q, ok2 = _cf2(mu, x)
        if not ok2:
            return 0.0, 0, 0.0, 0, 0.0, 0.0, _STATUS_NOCONV
        gam = (p - fmu) / q
        t = w / ((p - fmu) * gam + q)
        if t < 0.0:
            t = -t
        jmu = math.sqrt(t)
        if rjl < 0.0:
            jmu = -jmu
        ymu = gam * jmu
        ymup = ymu * (p + q / gam)
        y1 = mu / x * ymu - ymup
    else:
        ymu, y1 = _temme_y(mu, x)
        ymup = mu / x * ymu - y1
        jmu = w / (ymup - fmu * ymu)

    # normalization: J_nu = jmu * (seed at nu) / (rjl * 2^scale)
    jm = jmu * float(isign) / rjl
    ej = -scale
    jpm = f * jm

    # upward recurrence for Y: mu -> nu
    ey = 0
    ylast = ymu
    ycur = y1
    xi2 = 2.0 / x
    order = mu + 1.0
    for _ in range(nl):
        ynext = order * xi2 * ycur - ylast
        ylast = ycur
        ycur = ynext
        order += 1.0
        if abs(ycur) > 1.0e250:
            ycur = math.ldexp(ycur, -600)
            ylast = math.ldexp(ylast, -600)
            ey += 600
    # after nl steps: ylast = Y_nu, ycur = Y_{nu+1}
    if nl > 0:
        ym = ylast
        ypm = (nu / x) * ylast - ycur
    else:
        ym = ymu
        ypm = ymup
    return jm, ej, ym, ey, jpm, ypm, _STATUS_OK


@jitted
def _regime_code(nu, x):
    if nu >= NU_OLVER:
        if abs(x - nu) <= nu ** (1.0 / 3.0 + 0.1):
            return REGIME_AIRY_TRANSITION
        return REGIME_OLVER
    if x < _XMIN_CF2:
        return REGIME_SERIES
    return REGIME_HANKEL


@jitted
def quad_engine(nu, x):
    """(j, y, jp, yp, regime, status) with plain double values.

    status: 0 ok; 1 Y overflowed (use the log-scaled variant); 2 internal
    non-convergence.  Tiny J underflows flush to signed zero.
    """
    regime = _regime_code(nu, x)
    if nu >= NU_OLVER:
        js, ys, jps, yps, xi = olver_quad_scaled(nu, x)
        if xi == 0.0:
            return js, ys, jps, yps, regime, _STATUS_OK
        if xi > 700.0:
            return 0.0, 0.0, 0.0, 0.0, regime, _STATUS_Y_OVERFLOW
        em = math.exp(-xi)
        ep = math.exp(xi)
        return js * em, ys * ep, jps * em, yps * ep, regime, _STATUS_OK
    jm, ej, ym, ey, jpm, ypm, status = _engine_cf(nu, x)
    if status != _STATUS_OK:
        return 0.0, 0.0, 0.0, 0.0, regime, status
    if ey > 0 and (math.log(abs(ym) + _FPMIN) + ey * 0.6931471805599453) > 707.0:
        return 0.0, 0.0, 0.0, 0.0, regime, _STATUS_Y_OVERFLOW
    j = math.ldexp(jm, ej)
    jp = math.ldexp(jpm, ej)
    y = math.ldexp(ym, ey)
    yp = math.ldexp(ypm, ey)
    return j, y, jp, yp, regime, _STATUS_OK


_LN2 = 0.6931471805599453


@jitted
def quad_log_engine(nu, x):
    """Log-magnitude/sign representation of the quad.

    Returns (lj, sj, ly, sy, ljp, sjp, lyp, syp, regime).  Signs are +-1.0
    (0.0 for an exact zero of the mantissa).
    """
    regime = _regime_code(nu, x)
    if nu >= NU_OLVER:
        js, ys, jps, yps, xi = olver_quad_scaled(nu, x)
        lj = math.log(abs(js) + 1.0e-320) - xi
        ly = math.log(abs(ys) + 1.0e-320) + xi
        ljp = math.log(abs(jps) + 1.0e-320) - xi
        lyp = math.log(abs(yps) + 1.0e-320) + xi
        return (lj, _sgn(js), ly, _sgn(ys), ljp, _sgn(jps), lyp, _sgn(yps), regime)
    jm, ej, ym, ey, jpm, ypm, status = _engine_cf(nu, x)
    if status != _STATUS_OK:
        return 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, regime
    lj = math.log(abs(jm) + 1.0e-320) + ej * _LN2
    ljp = math.log(abs(jpm) + 1.0e-320) + ej * _LN2
    ly = math.log(abs(ym) + 1.0e-320) + ey * _LN2
    lyp = math.log(abs(ypm) + 1.0e-320) + ey * _LN2
    return (lj, _sgn(jm), ly, _sgn(ym), ljp, _sgn(jpm), lyp, _sgn(ypm), regime)


@jitted
def _sgn(v):
    if v > 0.0:
        return 1.0
    if v < 0.0:
        return -1.0
    return 0.0


# ---------------------------------------------------------------------------
# Python-level API

class BesselQuad:
    """J, Y, J', Y' at one (nu, x) with the regime tag that produced them."""

    __slots__ = ("j", "y", "jp", "yp", "regime")

    def __init__(self, j, y, jp, yp, regime):
        self.j = j
        self.y = y
        self.jp = jp
        self.yp = yp
        self.regime = regime

    def wronskian_residual(self, x):
        return self.j * self.yp - self.jp * self.y - 2.0 / (math.pi * x)

    def __repr__(self):
        return (f"BesselQuad(j={self.j!r}, y={self.y!r}, jp={self.jp!r}, "
                f"yp={self.yp!r}, regime={self.regime!r})")


def bessel_quad(nu, x, method=None):
    """Evaluate (J_nu, Y_nu, J'_nu, Y'_nu) at x > 0.

    method: None for automatic dispatch, "cf" to force the continued-fraction
    engine, "olver" to force the uniform asymptotic branch (tests use these to
    probe regime-overlap agreement).
    """
    nu = float(nu)
    x = float(x)
    if not (nu >= 0.0):
        raise DomainError("order nu must be >= 0")
    if not (x > 0.0):
        raise DomainError("argument x must be > 0 (Y_nu diverges at 0)")
    if method == "cf":
        jm, ej, ym, ey, jpm, ypm, status = _engine_cf(nu, x)
        if status == _STATUS_NOCONV:
            raise OverflowEvaluationError("continued fraction failed to converge")
        y = math.ldexp(ym, ey)
        yp = math.ldexp(ypm, ey)
        if not (math.isfinite(y) and math.isfinite(yp)):
            raise OverflowEvaluationError(
                "Y_nu exceeds double range; use bessel_log_scaled")
        return BesselQuad(math.ldexp(jm, ej), y, math.ldexp(jpm, ej),
                          yp, REGIME_NAMES[_regime_code(nu, x)])
    if method == "olver":
        from .olver import olver_quad

        j, y, jp, yp, ok = olver_quad(nu, x)
        if not ok:
            raise OverflowEvaluationError(
                "Y_nu exceeds double range; use bessel_log_scaled")
        return BesselQuad(j, y, jp, yp, REGIME_NAMES[_regime_code(nu, x)])
    if method is not None:
        raise ValueError(f"unknown method {method!r}")
    j, y, jp, yp, regime, status = quad_engine(nu, x)
    if status == _STATUS_Y_OVERFLOW:
        raise OverflowEvaluationError(
            "Y_nu exceeds double range; use bessel_log_scaled")
    if status == _STATUS_NOCONV:
        raise OverflowEvaluationError("continued fraction failed to converge")
    return BesselQuad(j, y, jp, yp, REGIME_NAMES[regime])


def bessel_log_scaled(nu, x):
    """Log-magnitudes and signs of (J, Y, J', Y').

    Returns ((lj, sj), (ly, sy), (ljp, sjp), (lyp, syp)).  exp(l)*s reproduces
    bessel_quad wherever both are finite.
    """
    nu = float(nu)
    x = float(x)
    if not (nu >= 0.0):
        raise DomainError("order nu must be >= 0")
    if not (x > 0.0):
        raise DomainError("argument x must be > 0")
    lj, sj, ly, sy, ljp, sjp, lyp, syp, _ = quad_log_engine(nu, x)
    return (lj, sj), (ly, sy), (ljp, sjp), (lyp, syp)


def ultraspherical(nu, delta, x):
    """(j_{nu,delta}, y_{nu,delta}, j'_{nu,delta}, y'_{nu,delta}) at x > 0,
    where j_{nu,delta}(x) = x^{-delta} J_nu(x)."""
    nu = float(nu)
    delta = float(delta)
    x = float(x)
    if not (x > 0.0):
        raise DomainError("argument x must be > 0")
    q = bessel_quad(nu, x)
    s = x ** (-delta)
    return (
        s * q.j,
        s * q.y,
        s * (q.jp - delta / x * q.j),
        s * (q.yp - delta / x * q.y),
    )
