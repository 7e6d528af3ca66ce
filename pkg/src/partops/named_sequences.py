"""Named coefficient families and their cross-checks.

* cosecant numbers  c_k:  s/sin(s)  = sum c_k s^(2k)
* secant numbers    d_k:  1/cos(s)  = sum d_k s^(2k)
* reciprocal-log    A_k:  z/ln(1+z) = sum A_k z^k
* their one-parameter generalisations (the base series raised to a power rho)
* reciprocal-Bessel coefficients h_k(nu), rational functions of the order,
  and the leading-zero estimate 2 sqrt(h_k / h_(k+1)).

Each family is produced by the expansion engine and cross-checked in the test
suite against an independent recurrence and a numeric series identity.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import List, Tuple

from .operator_engine import apply_weight
from .rings import (PoleError, Polynomial, RationalFunction, pochhammer)
from .series_expansion import CoefficientTable, SeriesSpec, expand, expand_power

__all__ = [
    "cosecant",
    "cosecant_table",
    "secant",
    "secant_table",
    "reciprocal_log",
    "reciprocal_log_table",
    "generalized",
    "bessel_h",
    "bessel_denominator",
    "bessel_zero_estimate",
    "slow_series_partial",
    "NU",
    "RHO_VAR",
]

NU = "v"
RHO_VAR = "rho"

_FAMILIES = ("cosecant", "secant", "reciprocal-log")


def _inner(family: str, kmax: int) -> List[Fraction]:
    if family == "cosecant":
        return [Fraction((-1) ** (i + 1), factorial(2 * i + 1))
                for i in range(1, kmax + 1)]
    if family == "secant":
        return [Fraction((-1) ** (i + 1), factorial(2 * i))
                for i in range(1, kmax + 1)]
    if family == "reciprocal-log":
        return [Fraction((-1) ** i, i + 1) for i in range(1, kmax + 1)]
    raise ValueError(f"unknown family {family!r}; expected one of {_FAMILIES}")


def _outer_q(family: str, kmax: int) -> List[Fraction]:
    if family == "reciprocal-log":
        return [Fraction((-1) ** n) for n in range(kmax + 1)]
    return [Fraction(1)] * (kmax + 1)


@lru_cache(maxsize=None)
def _family_table(family: str, kmax: int) -> CoefficientTable:
    spec = SeriesSpec(_inner(family, kmax), outer_q=_outer_q(family, kmax), a=1)
    return expand(spec)


def cosecant_table(kmax: int) -> CoefficientTable:
    return _family_table("cosecant", kmax)


def cosecant(k: int) -> Fraction:
    return cosecant_table(k)[k]


def secant_table(kmax: int) -> CoefficientTable:
    return _family_table("secant", kmax)


def secant(k: int) -> Fraction:
    return secant_table(k)[k]


def reciprocal_log_table(kmax: int) -> CoefficientTable:
    return _family_table("reciprocal-log", kmax)


def reciprocal_log(k: int) -> Fraction:
    return reciprocal_log_table(k)[k]


def generalized(family: str, k: int, route: str = "power") -> Polynomial:
    """Coefficient k of the family's base series raised to the power rho,
    as a polynomial in rho.

    Routes: ``power`` deforms the base-number table with a total rising
    factorial; ``inner`` applies the rising factorial directly over the inner
    coefficients.  The two must agree; at rho = 1 both reduce to the plain
    family, and for the reciprocal-log family rho = -1 recovers the
    logarithm's own Maclaurin coefficients.
    """
    rho = Polynomial.variable(RHO_VAR)
    if route == "power":
        base = _family_table(family, k)
        table = CoefficientTable([Polynomial.constant(RHO_VAR, base[i])
                                  for i in range(k + 1)])
        # constant term is exactly 1 for every family
        lifted = CoefficientTable([Polynomial.constant(RHO_VAR, 1)]
                                  + [table[i] for i in range(1, k + 1)])
        return expand_power(lifted, rho)[k]
    if route == "inner":
        if k == 0:
            return Polynomial.constant(RHO_VAR, 1)
        mags = [abs(c) for c in _inner(family, k)]

        def weight(view):
            n = view.num_parts
            acc = pochhammer(rho, n)
            den = 1 if n % 2 == 0 else -1
            for e, f in view.items():
                num, d = mags[e - 1].numerator, mags[e - 1].denominator
                den *= factorial(f) * d ** f
                if num != 1:
                    acc = acc * num ** f
            return acc * Fraction(1, den)

        val = apply_weight(k, weight)
        return val * Fraction((-1) ** k)
    raise ValueError(f"unknown route {route!r}")


# -- reciprocal Bessel coefficients -------------------------------------------

@lru_cache(maxsize=None)
def _bessel_numerator(k: int) -> Polynomial:
    """Numerator of h_k over the closed-form denominator k! prod (v+t)^[k/t].

    Follows from clearing denominators in the ratio recurrence

        h_k = sum_{j<k} (-1)^(k-j+1) h_j / ((k-j)! (v+1)_(k-j)),

    whose terms all divide the closed-form denominator exactly.
    """
    if k == 0:
        return Polynomial.constant(NU, 1)
    nu = Polynomial.variable(NU)
    acc = Polynomial.constant(NU, 0)
    for j in range(k):
        fac = Polynomial.constant(NU, comb(k, j))
        for t in range(1, k + 1):
            e = k // t - j // t - (1 if t <= k - j else 0)
            if e > 0:
                fac = fac * (nu + t) ** e
        term = fac * _bessel_numerator(j)
        acc = acc + (term if (k - j + 1) % 2 == 0 else -term)
    return acc


def bessel_denominator(k: int) -> Polynomial:
    """Monic denominator of h_k: prod_{t=1..k} (v + t)^[k/t]."""
    nu = Polynomial.variable(NU)
    out = Polynomial.constant(NU, 1)
    for t in range(1, k + 1):
        out = out * (nu + t) ** (k // t)
    return out


@lru_cache(maxsize=None)
def bessel_h(k: int) -> RationalFunction:
    """Reciprocal-Bessel coefficient h_k as a rational function of the order.

    h_0 = 1, h_1 = 1/(v+1), h_2 = (v+3)/(2 (v+1)^2 (v+2)), ...
    The numerator and the closed-form denominator are coprime (checked by a
    linear-root test, which avoids a large gcd).
    """
    num = _bessel_numerator(k) * Fraction(1, factorial(k))
    den = bessel_denominator(k)
    for t in range(1, k + 1):
        root = Fraction(-t)
        while not num.is_zero() and num(root) == 0 and den(root) == 0:
            num = num // Polynomial(NU, (t, 1))
            den = den // Polynomial(NU, (t, 1))
    return RationalFunction(num, den, _reduced=True)


def bessel_h_series_route(kmax: int) -> CoefficientTable:
    """h_0..h_kmax via the expansion engine over rational functions.

    Inner coefficients (-1)^i / ((v+1)_i i!), outer (-1)^N; exists to
    cross-check the recurrence route.
    """
    nu = Polynomial.variable(NU)
    inner = []
    for i in range(1, kmax + 1):
        den = Polynomial.constant(NU, factorial(i))
        for t in range(1, i + 1):
            den = den * (nu + t)
        inner.append(RationalFunction(
            Polynomial.constant(NU, (-1) ** i), den))
    outer = [Fraction((-1) ** n) for n in range(kmax + 1)]
    spec = SeriesSpec(inner, outer_q=outer, a=1)
    table = expand(spec)
    one = RationalFunction.from_scalar(NU, 1)
    return CoefficientTable([one] + [table[i] for i in range(1, kmax + 1)])


def _exact_complex(value: complex) -> Tuple[Fraction, Fraction]:
    return Fraction(value.real), Fraction(value.imag)


def _poly_eval_gaussian(p: Polynomial, re: Fraction, im: Fraction):
    ar, ai = Fraction(0), Fraction(0)
    for c in reversed(p.coeffs):
        ar, ai = ar * re - ai * im + c, ar * im + ai * re
    return ar, ai


def bessel_zero_estimate(nu: complex, k: int = 17) -> Tuple[complex, complex]:
    """Both square roots of 4 h_k(nu) / h_(k+1)(nu).

    The ratio estimates the squared leading zero of the Bessel function of
    order nu; it converges in k.  Evaluation is exact (the float input is
    taken as the exact rational it encodes) with one final square root.
    """
    hk = bessel_h(k)
    hk1 = bessel_h(k + 1)
    re, im = _exact_complex(complex(nu))
    num = hk.num * hk1.den
    den = hk.den * hk1.num
    nr, ni = _poly_eval_gaussian(num, re, im)
    dr, di = _poly_eval_gaussian(den, re, im)
    mag = dr * dr + di * di
    if mag == 0:
        raise PoleError(f"h_{k + 1} vanishes at order {nu}")
    rr = (nr * dr + ni * di) / mag
    ri = (ni * dr - nr * di) / mag
    root = cmath.sqrt(complex(float(4 * rr), float(4 * ri)))
    return root, -root


def slow_series_partial(name: str, n: int) -> float:
    """Partial sums of the slowly-convergent reciprocal-log series.

    ``euler-gamma``: sum_{k=1..n} (-1)^(k+1) A_k / k, increasing towards
    Euler's constant.  ``ln2``: sum_{k=0..n} (-1)^k A_k / (k+1), approaching
    log 2 from above.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    A = reciprocal_log_table(n)
    if name == "euler-gamma":
        total = sum(Fraction((-1) ** (k + 1)) * A[k] / k for k in range(1, n + 1))
    elif name == "ln2":
        total = sum(Fraction((-1) ** k) * A[k] / (k + 1) for k in range(0, n + 1))
    else:
        raise ValueError(f"unknown series {name!r}")
    return float(total)
