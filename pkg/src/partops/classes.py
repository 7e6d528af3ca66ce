"""Restricted partition enumeration and Ferrers-diagram conjugation.

A :class:`PartitionClass` describes which partitions an enumeration (or an
operator sum) ranges over: element bounds, multiplicity bounds, part-count
bounds, an allowed-element filter, and required elements.  Structural
constraints are enforced by pruning the enumeration tree (a branch that would
introduce an out-of-range element is never entered); element filters are
compiled into an allowed mask, which prunes equally well and keeps sparse
classes (pentagonal elements, powers of two) cheap.  Required-element
constraints are checked on each finished partition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Callable, Collection, FrozenSet, Iterator, Optional, Union

from . import backends
from .counting import is_pentagonal
from .enumeration import Order
from .partition import Partition

__all__ = [
    "PartitionClass",
    "ALL",
    "DISTINCT",
    "ODD_ELEMENTS",
    "EVEN_ELEMENTS",
    "PENTAGONAL_ELEMENTS",
    "enumerate_class",
    "iter_class",
    "count_class",
    "max_distinct_parts",
    "transpose",
    "is_self_conjugate",
    "count_gaussian",
]

ElementFilter = Union[Callable[[int], bool], Collection[int], None]


@dataclass(frozen=True)
class PartitionClass:
    """Declarative subset of the partitions of k."""

    min_element: int = 1
    max_element: Optional[int] = None
    max_multiplicity: Optional[int] = None
    distinct: bool = False
    exact_parts: Optional[int] = None
    max_parts: Optional[int] = None
    allowed_elements: ElementFilter = None
    required_elements: FrozenSet[int] = field(default_factory=frozenset)
    required_any: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.min_element < 1:
            raise ValueError("min_element must be >= 1")
        if self.max_element is not None and self.max_element < self.min_element:
            raise ValueError("max_element < min_element")
        if self.distinct and self.max_multiplicity not in (None, 1):
            raise ValueError("distinct classes cannot allow multiplicity > 1")
        if self.max_multiplicity is not None and self.max_multiplicity < 1:
            raise ValueError("max_multiplicity must be >= 1")
        if self.exact_parts is not None and self.exact_parts < 0:
            raise ValueError("exact_parts must be >= 0")
        if self.max_parts is not None and self.max_parts < 1:
            raise ValueError("max_parts must be >= 1")
        object.__setattr__(self, "required_elements",
                           frozenset(self.required_elements))
        object.__setattr__(self, "required_any", frozenset(self.required_any))

    # -- kernel plumbing -------------------------------------------------

    def _mask(self, k: int) -> Optional[bytearray]:
        af = self.allowed_elements
        if af is None:
            return None
        mask = bytearray(k + 1)
        if callable(af):
            for i in range(1, k + 1):
                mask[i] = 1 if af(i) else 0
        else:
            for i in af:
                if 1 <= i <= k:
                    mask[i] = 1
        return mask

    def kernel_args(self, k: int) -> dict:
        mult_cap = 1 if self.distinct else (self.max_multiplicity or 0)
        return {
            "min_element": self.min_element,
            "max_element": self.max_element or 0,
            "max_multiplicity": mult_cap,
            "exact_parts": -1 if self.exact_parts is None else self.exact_parts,
            "max_parts": self.max_parts or 0,
            "allowed": self._mask(k),
        }

    def needs_terminal_filter(self) -> bool:
        return bool(self.required_elements or self.required_any)

    def admits(self, view) -> bool:
        """Terminal filter for the non-prunable constraints."""
        if self.required_elements:
            for e in self.required_elements:
                if view.multiplicity(e) == 0:
                    return False
        if self.required_any:
            if not any(view.multiplicity(e) for e in self.required_any):
                return False
        return True

    def matches(self, view) -> bool:
        """Full membership test (used by filter-based cross-checks)."""
        n_parts = view.num_parts
        if self.exact_parts is not None and n_parts != self.exact_parts:
            return False
        if self.max_parts is not None and n_parts > self.max_parts:
            return False
        mask = self._mask(view.total) if self.allowed_elements is not None else None
        cap = 1 if self.distinct else self.max_multiplicity
        for e, f in view.items():
            if e < self.min_element:
                return False
            if self.max_element is not None and e > self.max_element:
                return False
            if cap is not None and f > cap:
                return False
            if mask is not None and not mask[e]:
                return False
        return self.admits(view)


ALL = PartitionClass()
DISTINCT = PartitionClass(distinct=True)
ODD_ELEMENTS = PartitionClass(allowed_elements=lambda i: i % 2 == 1)
EVEN_ELEMENTS = PartitionClass(allowed_elements=lambda i: i % 2 == 0)
PENTAGONAL_ELEMENTS = PartitionClass(allowed_elements=is_pentagonal)


def enumerate_class(k: int, klass: PartitionClass = ALL, visitor=None, *,
                    order: Order = Order.BRCP, backend=None,
                    branch: int = -1) -> int:
    """Visit the partitions of k in the class; return how many there are."""
    if k < 0:
        raise ValueError("k must be >= 0")
    kern = backends.get_backend(backend)
    if not isinstance(order, Order):
        order = Order(order)

    if order is not Order.BRCP:
        # reference generators only filter; they exist for cross-validation
        if branch != -1:
            raise ValueError("subtree runs require the tree order")
        count = 0

        def filtering(view):
            nonlocal count
            if klass.matches(view):
                count += 1
                if visitor is not None:
                    visitor(view)

        if order is Order.REVERSE_LEX:
            kern.revlex_visit(k, filtering)
        else:
            kern.ascending_visit(k, filtering)
        return count

    args = klass.kernel_args(k)
    if not klass.needs_terminal_filter():
        if visitor is None:
            return kern.brcp_count(k, branch=branch, **args)
        return kern.brcp_visit(k, visitor, branch=branch, **args)

    count = 0

    def admitting(view):
        nonlocal count
        if klass.admits(view):
            count += 1
            if visitor is not None:
                visitor(view)

    kern.brcp_visit(k, admitting, branch=branch, **args)
    return count


def count_class(k: int, klass: PartitionClass = ALL, *, backend=None) -> int:
    return enumerate_class(k, klass, backend=backend)


def iter_class(k: int, klass: PartitionClass = ALL, *,
               order: Order = Order.BRCP, backend=None) -> Iterator[Partition]:
    acc = []
    enumerate_class(k, klass, lambda v: acc.append(v.freeze()),
                    order=order, backend=backend)
    return iter(acc)


def max_distinct_parts(k: int) -> int:
    """Largest i with 1 + 2 + ... + i <= k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return (isqrt(8 * k + 1) - 1) // 2


def transpose(p: Partition) -> Partition:
    """Conjugate partition (Ferrers rows and columns swapped).

    With ascending elements e_1 < ... < e_r carrying multiplicities f_i, the
    columns of the Ferrers diagram come in runs: columns (e_{i-1}, e_i] all
    have height f_i + f_{i+1} + ... + f_r.
    """
    pairs = list(p.items())
    out = []
    prev = 0
    tail = sum(f for _, f in pairs)
    for e, f in pairs:
        out.append((tail, e - prev))
        prev = e
        tail -= f
    return Partition(p.total, out)


def is_self_conjugate(p: Partition) -> bool:
    return transpose(p) == p


def count_gaussian(n_max: int, m_max: int, k: int, *, backend=None) -> int:
    """Partitions of k with at most m_max parts, each at most n_max."""
    return count_class(k, PartitionClass(max_element=n_max, max_parts=m_max),
                       backend=backend)
