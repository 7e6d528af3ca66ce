"""Weighted sums over partition classes.

``apply_weight(k, weight, klass)`` returns the exact sum of ``weight`` over
every partition of ``k`` in the class.  Weights are either plain callables
(view -> ring value) or composable canned weights mirroring the factor shapes
that occur in coefficient formulas:

* ``UNIT``                     -- 1
* ``MULTINOMIAL``              -- N! * prod 1/n_i!
* ``PHASE``                    -- (-1)^N
* ``ElementAssign(v)``         -- prod v_i^(n_i) / n_i!
* ``ElementProduct(v)``        -- prod v_i^(n_i)
* ``OuterFactor(g)``           -- g[N]   (must be defined for all N = 1..k)
* ``PochhammerTotal(rho)``     -- (-rho)_N   (or (rho)_N with negate=False)
* ``PerElementPochhammer(r)``  -- prod (-r_i)_(n_i) / n_i!
* ``Product([...])``           -- pointwise product of the factors

Integer factors (factorials, multinomials) are computed in exact integer
arithmetic and only then multiplied into the target ring, so polynomial rings
never see spurious divisions.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Sequence, Union

from .classes import ALL, PartitionClass, enumerate_class
from .enumeration import Order
from .rings import RingMismatchError, pochhammer
from . import backends

__all__ = [
    "Weight",
    "UNIT",
    "MULTINOMIAL",
    "PHASE",
    "ElementAssign",
    "ElementProduct",
    "OuterFactor",
    "PochhammerTotal",
    "PerElementPochhammer",
    "Product",
    "apply_weight",
    "stirling_first",
]


def _values_getter(values):
    """Normalise a value table: a callable i -> value, or a sequence indexed
    so that element i maps to values[i-1]."""
    if callable(values):
        return values
    seq = list(values)

    def get(i):
        if i - 1 >= len(seq):
            raise ValueError(f"no assigned value for element {i}")
        return seq[i - 1]

    return get


class Weight:
    """Base class for composable partition weights."""

    def __call__(self, view):
        raise NotImplementedError

    def __mul__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        left = self.factors if isinstance(self, Product) else [self]
        right = other.factors if isinstance(other, Product) else [other]
        return Product(left + right)


class _Unit(Weight):
    def __call__(self, view):
        return Fraction(1)


class _Multinomial(Weight):
    def __call__(self, view):
        den = 1
        for _, f in view.items():
            if f > 1:
                den *= factorial(f)
        return Fraction(factorial(view.num_parts), den)


class _Phase(Weight):
    def __call__(self, view):
        return Fraction(-1 if view.num_parts % 2 else 1)


UNIT = _Unit()
MULTINOMIAL = _Multinomial()
PHASE = _Phase()


class ElementAssign(Weight):
    """prod v_i^(n_i) / n_i! over the elements present."""

    def __init__(self, values):
        self._get = _values_getter(values)

    def __call__(self, view):
        acc = None
        den = 1
        for e, f in view.items():
            v = self._get(e) ** f if f > 1 else self._get(e)
            acc = v if acc is None else acc * v
            if f > 1:
                den *= factorial(f)
        if acc is None:
            return Fraction(1)
        if den > 1:
            acc = acc * Fraction(1, den)
        return acc


class ElementProduct(Weight):
    """prod v_i^(n_i), without the 1/n_i! factor."""

    def __init__(self, values):
        self._get = _values_getter(values)

    def __call__(self, view):
        acc = None
        for e, f in view.items():
            v = self._get(e) ** f if f > 1 else self._get(e)
            acc = v if acc is None else acc * v
        return Fraction(1) if acc is None else acc


class OuterFactor(Weight):
    """g[N] where N is the partition's number of parts.

    The table must cover N = 1..k (index 0 is the N = 0 / empty-partition
    entry); a missing entry is an error, never an implicit zero.
    """

    def __init__(self, table: Union[Sequence, Callable[[int], object]]):
        if callable(table):
            self._get = table
        else:
            seq = list(table)

            def get(n):
                if n >= len(seq):
                    raise ValueError(f"outer factor table has no entry for N={n}")
                return seq[n]

            self._get = get

    def __call__(self, view):
        return self._get(view.num_parts)


class PochhammerTotal(Weight):
    """(-rho)_N, or (rho)_N with ``negate=False``."""

    def __init__(self, rho, negate: bool = True):
        self._rho = -rho if negate else rho

    def __call__(self, view):
        return pochhammer(self._rho, view.num_parts)


class PerElementPochhammer(Weight):
    """prod (-rho_i)_(n_i) / n_i! over the elements present."""

    def __init__(self, rhos):
        self._get = _values_getter(rhos)

    def __call__(self, view):
        acc = None
        den = 1
        for e, f in view.items():
            v = pochhammer(-self._get(e), f)
            acc = v if acc is None else acc * v
            if f > 1:
                den *= factorial(f)
        if acc is None:
            return Fraction(1)
        if den > 1:
            acc = acc * Fraction(1, den)
        return acc


class Product(Weight):
    """Pointwise product; reports which factor broke on a ring mismatch."""

    def __init__(self, factors):
        self.factors = list(factors)

    def __call__(self, view):
        acc = None
        for idx, w in enumerate(self.factors):
            v = w(view)
            try:
                acc = v if acc is None else acc * v
            except RingMismatchError as exc:
                raise RingMismatchError(
                    f"weight factor {idx} ({type(w).__name__}): {exc}") from exc
            if acc is NotImplemented:
                raise RingMismatchError(
                    f"weight factor {idx} ({type(w).__name__}) produced a value "
                    f"outside the accumulating ring")
        return Fraction(1) if acc is None else acc


def apply_weight(k: int, weight, klass: PartitionClass = ALL, *,
                 threads: int = 1, backend=None, order: Order = Order.BRCP):
    """Exact sum of the weight over the class's partitions of k.

    An empty class yields integer 0.  With ``threads > 1`` the first-level
    subtrees are summed independently and then added in subtree order; ring
    addition is associative and commutative, so the result is bit-identical
    to the sequential sum.
    """
    if threads > 1:
        kern = backends.get_backend(backend)
        branches = kern.brcp_first_branches(k, klass.min_element)
        from concurrent.futures import ThreadPoolExecutor

        def run(b):
            return _sum_branch(k, weight, klass, backend, b)

        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(run, branches))
        total = None
        for p in partials:
            if p is None:
                continue
            total = p if total is None else total + p
        return 0 if total is None else total

    total = _sum_branch(k, weight, klass, backend, -1)
    return 0 if total is None else total


def _sum_branch(k, fn, klass, backend, branch):
    box = [None]

    def step(view):
        v = fn(view)
        box[0] = v if box[0] is None else box[0] + v

    enumerate_class(k, klass, step, backend=backend, branch=branch)
    return box[0]


def stirling_first(k: int, j: int) -> int:
    """Signed Stirling numbers of the first kind.

    Recurrence S(k+1, j) = S(k, j-1) - k S(k, j) with S(0, 0) = 1.
    """
    if not 0 <= j <= k:
        raise ValueError("need 0 <= j <= k")
    row = [1]  # S(0, 0)
    for n in range(k):
        nxt = [0] * (n + 2)
        for jj in range(n + 2):
            prev = row[jj - 1] if 1 <= jj <= n + 1 else 0
            cur = row[jj] if jj <= n else 0
            nxt[jj] = prev - n * cur
        row = nxt
    return row[j]
