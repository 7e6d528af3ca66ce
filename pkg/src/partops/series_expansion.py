"""Coefficient extraction for composites of power series.

Given an inner series with coefficients p_1..p_kmax (no constant term) fed
into an outer series with coefficients q_0..q_kmax and a scalar ``a``, the
k-th coefficient of the result is a sum over the partitions of k:

    D_k = sum over partitions of k of  q_N a^N N! prod p_i^(n_i) / n_i!

where N is the number of parts.  A nonzero inner constant term is handled by
supplying the outer function's derivative values F^(0)..F^(kmax) at a*p_0
instead of the q table; then the outer factor per partition is a^N F^(N).

``invert`` produces the reciprocal series' coefficients E_k (normalised to
E_0 = 1, the true reciprocal being (1/D_0) * sum E_k y^k), and
``expand_power`` the coefficients of the series raised to an arbitrary
exponent, where the multinomial deforms into a rising factorial of the
exponent.  Everything is ring-exact and works over any coefficient ring.
"""

from __future__ import annotations

from fractions import Fraction

from .operator_engine import (ElementAssign, OuterFactor, PochhammerTotal,
                              apply_weight)
from .rings import RingTag, ring_of

__all__ = ["SeriesSpec", "CoefficientTable", "expand", "invert",
           "expand_power", "check_cauchy_inverse", "derivatives_at_zero",
           "convolve"]


class CoefficientTable:
    """Immutable 0..kmax coefficient vector with strict indexing."""

    __slots__ = ("values",)

    def __init__(self, values):
        values = tuple(values)
        if not values:
            raise ValueError("a coefficient table needs at least the order-0 entry")
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("CoefficientTable is immutable")

    @property
    def kmax(self) -> int:
        return len(self.values) - 1

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        if isinstance(i, slice):
            raise TypeError("coefficient tables do not slice; index explicitly")
        if not 0 <= i <= self.kmax:
            raise IndexError(
                f"coefficient index {i} outside 0..{self.kmax}; "
                "tables never extend implicitly")
        return self.values[i]

    def __eq__(self, other):
        if isinstance(other, CoefficientTable):
            return self.values == other.values
        if isinstance(other, (tuple, list)):
            return list(self.values) == list(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"CoefficientTable({list(self.values)!r})"


class SeriesSpec:
    """Inputs of the expansion: inner coefficients, outer data, scalar a.

    ``inner``  -- sequence of p_1..p_kmax (element i gets inner[i-1]).
    ``outer_q``-- q_0..q_kmax, used when the inner constant term vanishes.
    ``outer_f``-- F^(0)..F^(kmax) at a*p_0, for a nonzero inner constant term.
    Exactly one of outer_q/outer_f must be given, with length kmax + 1.
    """

    __slots__ = ("inner", "outer_q", "outer_f", "a", "kmax")

    def __init__(self, inner, *, outer_q=None, outer_f=None, a=1, kmax=None):
        inner = tuple(inner)
        if kmax is None:
            kmax = len(inner)
        if len(inner) < kmax:
            raise ValueError(f"inner coefficients cover 1..{len(inner)}, "
                             f"need 1..{kmax}")
        if (outer_q is None) == (outer_f is None):
            raise ValueError("give exactly one of outer_q or outer_f")
        outer = tuple(outer_q if outer_f is None else outer_f)
        if len(outer) != kmax + 1:
            raise ValueError(f"outer table must have {kmax + 1} entries, "
                             f"got {len(outer)}")
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "outer_q", outer if outer_f is None else None)
        object.__setattr__(self, "outer_f", outer if outer_q is None else None)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "kmax", kmax)

    def __setattr__(self, name, value):
        raise AttributeError("SeriesSpec is immutable")


def _factorials(n):
    from math import factorial
    return [factorial(i) for i in range(n + 1)]


def expand(spec: SeriesSpec, *, threads: int = 1, backend=None) -> CoefficientTable:
    """Coefficients D_0..D_kmax of the composed series."""
    a = spec.a
    fact = _factorials(spec.kmax)
    apow = [1]
    for _ in range(spec.kmax):
        apow.append(apow[-1] * a)

    if spec.outer_q is not None:
        q = spec.outer_q
        d0 = q[0]
        outer = [q[n] * apow[n] * fact[n] for n in range(spec.kmax + 1)]
    else:
        f = spec.outer_f
        d0 = f[0]
        outer = [f[n] * apow[n] for n in range(spec.kmax + 1)]

    weight = OuterFactor(outer) * ElementAssign(spec.inner)
    out = [d0]
    for k in range(1, spec.kmax + 1):
        out.append(apply_weight(k, weight, threads=threads, backend=backend))
    return CoefficientTable(out)


def _is_one(value) -> bool:
    try:
        return value == 1
    except TypeError:
        return False


def invert(table: CoefficientTable) -> CoefficientTable:
    """Reciprocal-series coefficients E_k with E_0 = 1.

    The reciprocal of sum D_k y^k is (1/D_0) sum E_k y^k.  D_0 must be an
    invertible rational, or the ring's unit element.
    """
    d0 = table[0]
    tag = ring_of(d0)
    if tag == RingTag.RATIONAL:
        if d0 == 0:
            raise ZeroDivisionError("cannot invert a series with zero constant term")
        inv_d0 = Fraction(1) / Fraction(d0)
    elif _is_one(d0):
        inv_d0 = 1
    else:
        raise ValueError(
            "inversion needs the constant term to be a nonzero rational or "
            "the ring unit")

    fact = _factorials(table.kmax)
    # outer factor (-1)^N N! D_0^(-N)
    outer = [fact[n] * (inv_d0 ** n) * (-1 if n % 2 else 1)
             for n in range(table.kmax + 1)]
    elems = [table[i] for i in range(1, table.kmax + 1)]
    weight = OuterFactor(outer) * ElementAssign(elems)
    one = d0 * inv_d0 if tag != RingTag.RATIONAL else Fraction(1)
    out = [one]
    for k in range(1, table.kmax + 1):
        out.append(apply_weight(k, weight))
    return CoefficientTable(out)


def expand_power(table: CoefficientTable, rho) -> CoefficientTable:
    """Coefficients of the series raised to the exponent ``rho``.

    Requires a unit constant term (general D_0^rho is the caller's business).
    Per partition the weight is (-rho)_N prod (-D_i)^(n_i) / n_i!; exponent 1
    returns the table itself and exponent -1 matches :func:`invert`.
    """
    if not _is_one(table[0]):
        raise ValueError("expand_power needs constant term 1; rescale first")
    elems = [-table[i] for i in range(1, table.kmax + 1)]
    weight = PochhammerTotal(rho, negate=True) * ElementAssign(elems)
    out = [table[0]]
    for k in range(1, table.kmax + 1):
        out.append(apply_weight(k, weight))
    return CoefficientTable(out)


def convolve(left: CoefficientTable, right: CoefficientTable) -> CoefficientTable:
    """Cauchy product truncated to the shorter table."""
    kmax = min(left.kmax, right.kmax)
    out = []
    for k in range(kmax + 1):
        acc = None
        for j in range(k + 1):
            term = left[j] * right[k - j]
            acc = term if acc is None else acc + term
        out.append(acc)
    return CoefficientTable(out)


def check_cauchy_inverse(d: CoefficientTable, e: CoefficientTable) -> bool:
    """True when sum_{j=0..k} D_j E_{k-j} = 0 for every 1 <= k <= kmax.

    Holds for e = invert(d) (where E_0 = 1) since the product of the two
    series telescopes to the constant D_0.
    """
    kmax = min(d.kmax, e.kmax)
    for k in range(1, kmax + 1):
        acc = None
        for j in range(k + 1):
            term = d[j] * e[k - j]
            acc = term if acc is None else acc + term
        if acc != acc * 0:
            return False
    return True


def derivatives_at_zero(table: CoefficientTable) -> list:
    """k-th derivative at the origin: k! * D_k."""
    fact = _factorials(table.kmax)
    return [fact[k] * table[k] for k in range(table.kmax + 1)]
