"""Partition-theory generating functions over exact rings.

Infinite products with unit constant term are handled through their series
coefficients:

* ``q_number(k)``  -- coefficients of prod (1 - z^k): +-1 at generalized
  pentagonal orders, 0 elsewhere.
* ``partition_number(k)`` -- p(k), with selectable routes (recurrence,
  enumeration, pentagonal-element operator sum, divisor-sum weights).
* ``q_poly`` / ``p_poly`` -- the one-parameter deformations whose omega-power
  records the number of parts.
* ``product_coefficients`` -- series coefficients of prod (1 + C_k z^k)^(r_k).
* ``qp_poly`` / ``hp_poly`` -- the quotient-product and two-fold (Heine)
  families in three symbols.

Every quantity exposes at least two independent routes so they can be
cross-checked; route ``"default"`` is the cheapest.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List, Optional, Sequence

from .classes import ALL, DISTINCT, PENTAGONAL_ELEMENTS, PartitionClass
from .counting import count_partitions, pentagonal_index
from .enumeration import enumerate_partitions
from .operator_engine import ElementAssign, apply_weight
from .rings import MultiPoly, Polynomial, pochhammer
from .series_expansion import CoefficientTable

__all__ = [
    "DivisorData",
    "divisor_data",
    "gamma_sum",
    "gamma_poly",
    "q_number",
    "partition_number",
    "p_from_q",
    "p_from_gamma",
    "q_poly",
    "p_poly",
    "parts_count_table",
    "distinct_parts_count_table",
    "ProductSpec",
    "product_coefficients",
    "exp_product_coefficients",
    "q_omega_rho",
    "p_omega_rho",
    "qp_poly",
    "hp_poly",
    "distinct_count_recurrence",
]

OMEGA = "w"
RHO = "rho"
QP_VARS = ("w", "b", "a")
HP_VARS = ("w", "x", "y")


# -- divisor data -------------------------------------------------------------

class DivisorData:
    """Divisors of j, their scaled sum, and the divisor polynomial.

    ``gamma`` is sum_{d|j} d/j; ``gamma_poly`` is sum_{d|j} (d/j) w^(j/d),
    which recovers ``gamma`` at w = 1 and runs from w^1 up to w^j.
    """

    __slots__ = ("j", "divisors", "gamma", "gamma_poly")

    def __init__(self, j: int):
        if j < 1:
            raise ValueError("j must be >= 1")
        divs = [d for d in range(1, j + 1) if j % d == 0]
        coeffs = [Fraction(0)] * (j + 1)
        for d in divs:
            coeffs[j // d] += Fraction(d, j)
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "divisors", tuple(divs))
        object.__setattr__(self, "gamma", sum(Fraction(d, j) for d in divs))
        object.__setattr__(self, "gamma_poly", Polynomial(OMEGA, coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("DivisorData is immutable")


@lru_cache(maxsize=None)
def divisor_data(j: int) -> DivisorData:
    return DivisorData(j)


def gamma_sum(j: int) -> Fraction:
    return divisor_data(j).gamma


def gamma_poly(j: int) -> Polynomial:
    return divisor_data(j).gamma_poly


# -- pentagonal coefficients ---------------------------------------------------

def q_number(k: int, route: str = "default") -> int:
    """Series coefficient of prod (1 - z^k); integer -1, 0, or 1.

    Routes: ``default`` (closed form from the pentagonal index), ``from-p``
    (phase-weighted sum over p(i) assignments), ``from-gamma`` (phase-weighted
    divisor sums).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if route in ("default", "closed"):
        if k == 0:
            return 1
        j = pentagonal_index(k)
        return 0 if j == 0 else (-1) ** j
    if route == "from-p":
        if k == 0:
            return 1
        val = apply_weight(k, _phase_multinomial_assign(
            [Fraction(count_partitions(i)) for i in range(1, k + 1)]))
        return _expect_integer(val)
    if route == "from-gamma":
        if k == 0:
            return 1
        val = apply_weight(k, _phase_assign_gamma(k))
        return _expect_integer(val)
    raise ValueError(f"unknown route {route!r}")


def _expect_integer(val) -> int:
    val = Fraction(val)
    if val.denominator != 1:
        raise ArithmeticError(f"internal consistency failure: non-integer {val}")
    return int(val)


def _phase_multinomial_assign(values):
    def weight(view):
        n = view.num_parts
        den = 1
        acc = Fraction(1)
        for e, f in view.items():
            den *= factorial(f)
            acc *= values[e - 1] ** f
        return Fraction((-1) ** n * factorial(n), den) * acc

    return weight


def _phase_assign_gamma(k):
    gams = [gamma_sum(i) for i in range(1, k + 1)]

    def weight(view):
        n = view.num_parts
        den = 1
        acc = Fraction(1)
        for e, f in view.items():
            den *= factorial(f)
            acc *= gams[e - 1] ** f
        return Fraction((-1) ** n, den) * acc

    return weight


def partition_number(k: int, route: str = "default") -> int:
    """p(k) by the requested route.

    ``default``/``recurrence`` uses the pentagonal recurrence; ``enumerate``
    counts tree visits; ``from-q`` sums over pentagonal-element partitions;
    ``from-gamma`` sums divisor weights over all partitions.
    """
    if route in ("default", "recurrence"):
        return count_partitions(k)
    if route == "enumerate":
        return enumerate_partitions(k)
    if route == "from-q":
        return p_from_q(k)
    if route == "from-gamma":
        return p_from_gamma(k)
    raise ValueError(f"unknown route {route!r}")


def p_from_q(k: int) -> int:
    """p(k) as a sum over partitions whose elements are pentagonal.

    Elements i carry the coefficient q(i); only pentagonal elements
    contribute, so the enumeration prunes to them.
    """
    if k == 0:
        return 1

    def weight(view):
        n = view.num_parts
        num = factorial(n)
        den = 1
        sign = -1 if n % 2 else 1
        for e, f in view.items():
            den *= factorial(f)
            if (pentagonal_index(e) * f) % 2:
                sign = -sign
        return Fraction(sign * num, den)

    val = apply_weight(k, weight, PENTAGONAL_ELEMENTS)
    return _expect_integer(val)


def p_from_gamma(k: int) -> int:
    """p(k) as the divisor-sum weighted partition sum; must come out integer."""
    if k == 0:
        return 1
    gams = [gamma_sum(i) for i in range(1, k + 1)]
    val = apply_weight(k, ElementAssign(gams))
    return _expect_integer(val)


# -- omega polynomials ---------------------------------------------------------

def parts_count_table(k: int) -> List[int]:
    """[c_0, c_1, ..., c_k] where c_i = number of partitions of k with i
    parts (the two-variable recurrence, not enumeration)."""
    from .counting import count_with_parts

    out = [0] * (k + 1)
    if k == 0:
        out[0] = 1
        return out
    for i in range(1, k + 1):
        out[i] = count_with_parts(k, i)
    return out


def distinct_parts_count_table(k: int, *, backend=None) -> List[int]:
    """Same, over partitions with distinct elements (by enumeration)."""
    counts = [0] * (k + 1)
    if k == 0:
        counts[0] = 1
        return counts

    def vis(view):
        counts[view.num_parts] += 1

    from .classes import enumerate_class
    enumerate_class(k, DISTINCT, vis, backend=backend)
    return counts


def q_poly(k: int, route: str = "default") -> Polynomial:
    """Distinct-partition polynomial: sum over distinct partitions of w^N.

    Routes: ``default`` (enumeration counts by part number), ``divisor``
    (phase-weighted divisor polynomials, then w -> -w).
    """
    if route in ("default", "counts"):
        return Polynomial(OMEGA, distinct_parts_count_table(k))
    if route == "divisor":
        qm = _q_poly_neg_omega(k)
        # substitute w -> -w
        return Polynomial(OMEGA, [c if i % 2 == 0 else -c
                                  for i, c in enumerate(qm.coeffs)])
    raise ValueError(f"unknown route {route!r}")


def _q_poly_neg_omega(k: int) -> Polynomial:
    """Coefficient of z^k in prod (1 - w z^i): a polynomial in w."""
    if k == 0:
        return Polynomial.constant(OMEGA, 1)
    gp = [gamma_poly(i) for i in range(1, k + 1)]

    def weight(view):
        n = view.num_parts
        acc = Polynomial.constant(OMEGA, 1)
        den = 1
        for e, f in view.items():
            acc = acc * gp[e - 1] ** f
            den *= factorial(f)
        return acc * Fraction((-1) ** n, den)

    return apply_weight(k, weight)


def p_poly(k: int, route: str = "default") -> Polynomial:
    """Partition polynomial: sum over all partitions of w^N.

    The w^i coefficient is the number of partitions of k with i parts.
    Routes: ``default`` (two-variable recurrence), ``operator`` (enumeration),
    ``divisor`` (divisor polynomials), ``from-q`` (inversion of the
    distinct-partition series).
    """
    if route in ("default", "counts"):
        return Polynomial(OMEGA, parts_count_table(k))
    if route == "operator":
        counts = [0] * (k + 1)

        def vis(view):
            counts[view.num_parts] += 1

        enumerate_partitions(k, vis)
        return Polynomial(OMEGA, counts)
    if route == "divisor":
        if k == 0:
            return Polynomial.constant(OMEGA, 1)
        gp = [gamma_poly(i) for i in range(1, k + 1)]

        def weight(view):
            acc = Polynomial.constant(OMEGA, 1)
            den = 1
            for e, f in view.items():
                acc = acc * gp[e - 1] ** f
                den *= factorial(f)
            return acc * Fraction(1, den)

        return apply_weight(k, weight)
    if route == "from-q":
        if k == 0:
            return Polynomial.constant(OMEGA, 1)
        qs = [_q_poly_neg_omega(i) for i in range(0, k + 1)]

        def weight(view):
            n = view.num_parts
            acc = Polynomial.constant(OMEGA, 1)
            den = 1
            for e, f in view.items():
                acc = acc * qs[e] ** f
                den *= factorial(f)
            return acc * Fraction((-1) ** n * factorial(n), den)

        return apply_weight(k, weight)
    raise ValueError(f"unknown route {route!r}")


# -- general products -----------------------------------------------------------

class ProductSpec:
    """Per-index coefficients C_i and exponents r_i of
    prod (1 + C_i z^i)^(r_i), supplied for i = 1..kmax."""

    __slots__ = ("coeffs", "exponents", "kmax")

    def __init__(self, coeffs: Sequence, exponents: Sequence, kmax: Optional[int] = None):
        coeffs = tuple(coeffs)
        exponents = tuple(exponents)
        if kmax is None:
            kmax = min(len(coeffs), len(exponents))
        if len(coeffs) < kmax or len(exponents) < kmax:
            raise ValueError(f"need C_i and r_i for i = 1..{kmax}")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "exponents", exponents)
        object.__setattr__(self, "kmax", kmax)

    def __setattr__(self, name, value):
        raise AttributeError("ProductSpec is immutable")


def product_coefficients(spec: ProductSpec, kmax: Optional[int] = None,
                         *, klass: PartitionClass = ALL) -> CoefficientTable:
    """Series coefficients B_k of prod (1 + C_i z^i)^(r_i).

    Per partition the weight is (-1)^N prod (-r_i)_(n_i) C_i^(n_i) / n_i!.
    With all exponents 1 this collapses to sums of products of C_i over
    distinct partitions; the all-exponents -1 and C_i = -w case gives
    ``p_poly``, and exponents 1 with C_i = w gives ``q_poly``.
    """
    if kmax is None:
        kmax = spec.kmax
    if kmax > spec.kmax:
        raise ValueError("requested order exceeds the spec tables")
    cs = spec.coeffs
    rs = spec.exponents

    def weight(view):
        n = view.num_parts
        acc = None
        den = 1
        for e, f in view.items():
            v = pochhammer(-rs[e - 1], f) * (cs[e - 1] ** f if f > 1 else cs[e - 1])
            acc = v if acc is None else acc * v
            den *= factorial(f)
        acc = Fraction(1) if acc is None else acc
        return acc * Fraction((-1) ** n, den)

    one = Fraction(1)
    out = [one]
    for k in range(1, kmax + 1):
        out.append(apply_weight(k, weight, klass))
    return CoefficientTable(out)


def exp_product_coefficients(kmax: int) -> List[Fraction]:
    """C_1..C_kmax of the product form of the exponential series.

    Solved from sum_{d|i} (-1)^(d+1) C_(i/d)^d / d = 0 (the d = 1 term is
    linear in C_i); C_1 = 1 and C_p = -1/p for odd primes p.
    """
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    cs: List[Fraction] = [Fraction(1)]
    for i in range(2, kmax + 1):
        rest = Fraction(0)
        for d in range(2, i + 1):
            if i % d == 0:
                rest += Fraction((-1) ** (d + 1), d) * cs[i // d - 1] ** d
        cs.append(-rest)
    return cs


def q_omega_rho(k: int, route: str = "default") -> MultiPoly:
    """Coefficient of z^k in prod (1 + w z^i)^rho, a polynomial in (w, rho).

    Routes: ``default`` (per-element rising factorials), ``from-q``
    (total rising factorial over the distinct-partition polynomials).
    """
    w = MultiPoly.variable((OMEGA, RHO), OMEGA)
    r = MultiPoly.variable((OMEGA, RHO), RHO)
    if k == 0:
        return MultiPoly.constant((OMEGA, RHO), 1)
    if route in ("default", "per-element"):
        def weight(view):
            n = view.num_parts
            acc = MultiPoly.constant((OMEGA, RHO), 1)
            den = 1
            for _, f in view.items():
                acc = acc * pochhammer(-r, f)
                den *= factorial(f)
            return acc * ((-w) ** n) * Fraction(1, den)

        return apply_weight(k, weight)
    if route == "from-q":
        # lift q(i, w) into (w, rho) and use the total rising factorial
        qj = []
        for i in range(1, k + 1):
            pol = q_poly(i)
            qj.append(MultiPoly((OMEGA, RHO),
                                {(d, 0): c for d, c in enumerate(pol.coeffs)}))

        def weight(view):
            n = view.num_parts
            acc = pochhammer(-r, n) * ((-1) ** n)
            den = 1
            for e, f in view.items():
                acc = acc * (qj[e - 1] ** f)
                den *= factorial(f)
            return acc * Fraction(1, den)

        return apply_weight(k, weight)
    raise ValueError(f"unknown route {route!r}")


def p_omega_rho(k: int) -> MultiPoly:
    """Coefficient of z^k in prod 1/(1 - w z^i)^rho, in (w, rho).

    Total rising factorial over the partition polynomials p(i, w).
    """
    if k == 0:
        return MultiPoly.constant((OMEGA, RHO), 1)
    r = MultiPoly.variable((OMEGA, RHO), RHO)
    pj = []
    for i in range(1, k + 1):
        pol = p_poly(i)
        pj.append(MultiPoly((OMEGA, RHO),
                            {(d, 0): c for d, c in enumerate(pol.coeffs)}))

    def weight(view):
        n = view.num_parts
        acc = pochhammer(-r, n) * ((-1) ** n)
        den = 1
        for e, f in view.items():
            acc = acc * (pj[e - 1] ** f)
            den *= factorial(f)
        return acc * Fraction(1, den)

    return apply_weight(k, weight)


def _poly_sub_monomial(pol: Polynomial, vars: Sequence[str], coeff, exps) -> MultiPoly:
    """Substitute the polynomial's variable by coeff * prod vars^exps."""
    base = MultiPoly.monomial(vars, coeff, exps)
    acc = MultiPoly.constant(vars, 0)
    power = MultiPoly.constant(vars, 1)
    for i, c in enumerate(pol.coeffs):
        if i > 0:
            power = power * base
        if c != 0:
            acc = acc + power * c
    return acc


def qp_poly(k: int) -> MultiPoly:
    """Convolution of the two omega families in (w, b, a):

        QP_k = sum_j q(j, -b w) p(k-j, a w)

    Vanishes identically at a = b for k >= 1; at (w, b, a) = (1, 1, -1) it
    collapses to the square-indicator series.
    """
    out = MultiPoly.constant(QP_VARS, 0)
    for j in range(k + 1):
        qj = _poly_sub_monomial(q_poly(j), QP_VARS, Fraction(-1), (1, 1, 0))
        pj = _poly_sub_monomial(p_poly(k - j), QP_VARS, Fraction(1), (1, 0, 1))
        out = out + qj * pj
    return out


def hp_poly(k: int) -> MultiPoly:
    """Two-fold quotient product in (w, x, y):

        HP_k = sum_j QP_j(w, x, 1) QP_{k-j}(w, y, x y)

    computed directly from the omega families with monomial substitutions.
    """
    # QP_j(w, x, 1) = sum_i q(i, -x w) p(j - i, w)
    def qp_x1(j):
        out = MultiPoly.constant(HP_VARS, 0)
        for i in range(j + 1):
            qi = _poly_sub_monomial(q_poly(i), HP_VARS, Fraction(-1), (1, 1, 0))
            pi = _poly_sub_monomial(p_poly(j - i), HP_VARS, Fraction(1), (1, 0, 0))
            out = out + qi * pi
        return out

    # QP_j(w, y, x y) = sum_i q(i, -y w) p(j - i, x y w)
    def qp_yxy(j):
        out = MultiPoly.constant(HP_VARS, 0)
        for i in range(j + 1):
            qi = _poly_sub_monomial(q_poly(i), HP_VARS, Fraction(-1), (1, 0, 1))
            pi = _poly_sub_monomial(p_poly(j - i), HP_VARS, Fraction(1), (1, 1, 1))
            out = out + qi * pi
        return out

    out = MultiPoly.constant(HP_VARS, 0)
    for j in range(k + 1):
        out = out + qp_x1(j) * qp_yxy(k - j)
    return out


# -- counting recurrences --------------------------------------------------------

_distinct_lock = threading.Lock()
_distinct_counts = [1]  # q(0, 1)


def distinct_count_recurrence(k: int) -> int:
    """Number of distinct partitions q(k, 1) from the convolution recurrences

        sum_{j=0..2k}   q(j) q(2k - j, 1)   = q(k)
        sum_{j=0..2k+1} q(j) q(2k + 1 - j, 1) = 0

    solved for the leading term; the pentagonal q(j) keep the sums short.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k < len(_distinct_counts):
        return _distinct_counts[k]
    with _distinct_lock:
        while len(_distinct_counts) <= k:
            n = len(_distinct_counts)
            if n % 2 == 0:
                m = n // 2
                acc = q_number(m) * (1 - _distinct_counts[m])
                for j in range(1, m):
                    acc -= (q_number(j) * _distinct_counts[n - j]
                            + q_number(n - j) * _distinct_counts[j])
                acc -= q_number(n)
            else:
                m = (n - 1) // 2
                acc = 0
                for j in range(1, m + 1):
                    acc -= (q_number(j) * _distinct_counts[n - j]
                            + q_number(n - j) * _distinct_counts[j])
                acc -= q_number(n)
            _distinct_counts.append(acc)
    return _distinct_counts[k]
