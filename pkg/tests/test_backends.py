"""The compiled kernel must be an exact behavioural twin of the pure-Python
kernel: same partitions, same order, same counts, for every constraint
combination."""

import random

import pytest

from partops import PartitionClass, backends
from partops.classes import iter_class
from partops.enumeration import Order, iter_partitions

needs_compiled = pytest.mark.skipif(
    "compiled" not in backends.available_backends(),
    reason="compiled kernel not built")


@needs_compiled
def test_plain_enumeration_identical():
    for k in range(0, 22):
        for order in Order:
            py = [p.pairs for p in iter_partitions(k, order=order,
                                                   backend="python")]
            cy = [p.pairs for p in iter_partitions(k, order=order,
                                                   backend="compiled")]
            assert py == cy, (k, order)


@needs_compiled
def test_constrained_enumeration_identical():
    rng = random.Random(9)
    for trial in range(150):
        k = rng.randint(0, 20)
        kw = {}
        if rng.random() < 0.5:
            kw["min_element"] = rng.randint(1, 3)
        if rng.random() < 0.5:
            lo = kw.get("min_element", 1)
            kw["max_element"] = lo + rng.randint(0, max(k, 4))
        if rng.random() < 0.4:
            kw["max_multiplicity"] = rng.randint(1, 3)
        if rng.random() < 0.3:
            kw["exact_parts"] = rng.randint(1, 5)
        elif rng.random() < 0.3:
            kw["max_parts"] = rng.randint(1, 5)
        if rng.random() < 0.3:
            kw["allowed_elements"] = frozenset(
                rng.sample(range(1, max(k, 2)), k=min(4, max(k - 1, 1))))
        klass = PartitionClass(**kw)
        py = [p.pairs for p in iter_class(k, klass, backend="python")]
        cy = [p.pairs for p in iter_class(k, klass, backend="compiled")]
        assert py == cy, (trial, k, kw)


@needs_compiled
def test_branch_split_identical():
    for k in (0, 1, 7, 13):
        for name in ("python", "compiled"):
            kern = backends.get_backend(name)
            total = sum(kern.brcp_count(k, branch=b)
                        for b in kern.brcp_first_branches(k))
            assert total == kern.brcp_count(k), (k, name)


@needs_compiled
def test_count_fast_paths_match_visits():
    for name in ("python", "compiled"):
        kern = backends.get_backend(name)
        for k in range(0, 26):
            seen = [0]

            def bump(_v, seen=seen):
                seen[0] += 1

            assert kern.brcp_count(k) == kern.brcp_visit(k, bump) == seen[0]
            assert kern.revlex_count(k) == kern.revlex_visit(k, lambda v: None)
            assert kern.ascending_count(k) == \
                kern.ascending_visit(k, lambda v: None)
