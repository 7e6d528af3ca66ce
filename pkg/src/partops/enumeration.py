"""Partition enumeration: one tree generator plus two reference generators.

``enumerate_partitions`` drives a visitor over every partition of ``k`` in a
chosen order.  The tree order starts at {k} and ends at the central partition
({k/2, k/2} for even k, {[k/2]+1, [k/2]} for odd k); the reference orders are
reverse lexicographic and ascending.  All three agree as multisets and exist
for cross-validation and benchmarking.

Visitors receive a reused read view; call ``freeze()`` on partitions you keep.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterator, List, Optional

from . import backends
from .partition import Partition

__all__ = ["Order", "enumerate_partitions", "iter_partitions", "Reducer",
           "reduce_partitions"]


class Order(enum.Enum):
    """Enumeration orders."""

    BRCP = "brcp"
    REVERSE_LEX = "revlex"
    ASCENDING = "ascending"


def enumerate_partitions(k: int, visitor: Optional[Callable] = None, *,
                         order: Order = Order.BRCP,
                         backend=None) -> int:
    """Visit every partition of k exactly once; return the visit count.

    With ``visitor=None`` only counts (the kernels then skip view upkeep).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    kern = backends.get_backend(backend)
    if not isinstance(order, Order):
        order = Order(order)
    if visitor is None:
        if order is Order.BRCP:
            return kern.brcp_count(k)
        if order is Order.REVERSE_LEX:
            return kern.revlex_count(k)
        return kern.ascending_count(k)
    if order is Order.BRCP:
        return kern.brcp_visit(k, visitor)
    if order is Order.REVERSE_LEX:
        return kern.revlex_visit(k, visitor)
    return kern.ascending_visit(k, visitor)


def iter_partitions(k: int, *, order: Order = Order.BRCP,
                    backend=None) -> Iterator[Partition]:
    """Materialised partitions in order (convenience; copies every one)."""
    acc: List[Partition] = []
    enumerate_partitions(k, lambda v: acc.append(v.freeze()),
                         order=order, backend=backend)
    return iter(acc)


class Reducer:
    """Associative-commutative fold over partitions, used for parallel runs.

    ``unit()`` is the identity accumulator, ``step(acc, view)`` folds one
    partition, ``merge(a, b)`` combines subtree results.  ``merge`` must be
    associative and commutative so that a subtree split reproduces the
    sequential result exactly.
    """

    def unit(self):
        raise NotImplementedError

    def step(self, acc, view):
        raise NotImplementedError

    def merge(self, left, right):
        raise NotImplementedError


def reduce_partitions(k: int, reducer: Reducer, *, threads: int = 1,
                      backend=None, constraints=None):
    """Fold a reducer over all partitions of k.

    With ``threads > 1`` the first-level subtrees of the tree order are folded
    independently and merged in subtree order, which yields a result identical
    to the sequential fold for any associative-commutative reducer.
    """
    kern = backends.get_backend(backend)
    cons = dict(constraints or {})

    if threads <= 1:
        acc_box = [reducer.unit()]

        def step(view):
            acc_box[0] = reducer.step(acc_box[0], view)

        kern.brcp_visit(k, step, **cons)
        return acc_box[0]

    branches = kern.brcp_first_branches(k, cons.get("min_element", 1))

    def run_branch(b):
        acc = [reducer.unit()]

        def step(view):
            acc[0] = reducer.step(acc[0], view)

        kern.brcp_visit(k, step, branch=b, **cons)
        return acc[0]

    with ThreadPoolExecutor(max_workers=threads) as pool:
        partials = list(pool.map(run_branch, branches))
    out = reducer.unit()
    for p in partials:
        out = reducer.merge(out, p)
    return out
