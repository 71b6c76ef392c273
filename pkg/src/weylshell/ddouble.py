"""Double-double (compensated) arithmetic for cancellation-heavy series.

A value is carried as an unevaluated sum hi + lo with |lo| <= ulp(hi)/2,
giving ~31 significant digits.  Only the operations the series kernels need
are provided; everything is a free function on (hi, lo) pairs so numba can
inline it.  Dekker splitting is used instead of FMA for portability.
"""

from .accel import jitted

_SPLITTER = 134217729.0  # 2**27 + 1


@jitted
def two_sum(a, b):
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


@jitted
def quick_two_sum(a, b):
    # requires |a| >= |b|
    s = a + b
    err = b - (s - a)
    return s, err


@jitted
def two_prod(a, b):
    p = a * b
    ca = _SPLITTER * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLITTER * b
    bhi = cb - (cb - b)
    blo = b - bhi
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


@jitted
def dd_add(ahi, alo, bhi, blo):
    s, e = two_sum(ahi, bhi)
    e += alo + blo
    return quick_two_sum(s, e)


@jitted
def dd_add_d(ahi, alo, b):
    s, e = two_sum(ahi, b)
    e += alo
    return quick_two_sum(s, e)


@jitted
def dd_mul(ahi, alo, bhi, blo):
    p, e = two_prod(ahi, bhi)
    e += ahi * blo + alo * bhi
    return quick_two_sum(p, e)


@jitted
def dd_mul_d(ahi, alo, b):
    p, e = two_prod(ahi, b)
    e += alo * b
    return quick_two_sum(p, e)


@jitted
def dd_div_d(ahi, alo, b):
    q1 = ahi / b
    p, e = two_prod(q1, b)
    q2 = ((ahi - p) - e + alo) / b
    return quick_two_sum(q1, q2)


@jitted
def dd_neg(ahi, alo):
    return -ahi, -alo
