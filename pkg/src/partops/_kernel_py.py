"""Pure-Python enumeration kernels.

Three generators over the partitions of ``total``:

* ``brcp_*``   -- recursive tree descent emitting multiplicity views directly;
  first visits {total}, then subtrees by smallest element, ending at the
  central partition.  Supports constraint pruning and per-subtree runs.
* ``revlex_*`` -- succession rule over the standard representation in reverse
  lexicographic order.
* ``ascending_*`` -- successor rule producing parts in ascending order.

The compiled kernel (:mod:`partops._kernel_cy`) mirrors this module exactly;
keep the two in lockstep.

Constraint conventions (all optional): ``min_element >= 1``; ``max_element``,
``max_multiplicity`` and ``max_parts`` use 0 for "unbounded"; ``exact_parts``
uses -1 for "unset" (0 is meaningful for total = 0); ``allowed`` is an
indexable of truthy flags of length ``total + 1`` or None.  ``branch`` selects
one first-level subtree: -1 whole tree, 0 the single-part partition {total},
j >= 1 the subtree whose smallest element is j.

Visitors receive a reused view; they must ``freeze()`` partitions they retain.
"""

from __future__ import annotations

import sys

from .partition import Partition

BACKEND_NAME = "python"


class _View:
    """Read view over the enumerator's reused buffers."""

    __slots__ = ("total", "_mult", "_support", "_parts")

    def __init__(self, total, mult, support, parts):
        self.total = total
        self._mult = mult
        self._support = support
        self._parts = parts

    def items(self):
        mult = self._mult
        return [(e, mult[e]) for e in self._support]

    def elements(self):
        return list(self._support)

    def multiplicity(self, element):
        if 0 < element < len(self._mult):
            return self._mult[element]
        return 0

    @property
    def num_parts(self):
        return self._parts[0]

    def parts(self):
        out = []
        mult = self._mult
        for e in self._support:
            out.extend([e] * mult[e])
        return out

    def largest(self):
        return self._support[-1] if self._support else 0

    def freeze(self):
        return Partition(self.total, self.items())


class _SeqView:
    """View over one sorted standard-representation partition."""

    __slots__ = ("total", "_pairs", "_n")

    def __init__(self, total, pairs, n):
        self.total = total
        self._pairs = pairs
        self._n = n

    def items(self):
        return list(self._pairs)

    def elements(self):
        return [e for e, _ in self._pairs]

    def multiplicity(self, element):
        for e, f in self._pairs:
            if e == element:
                return f
        return 0

    @property
    def num_parts(self):
        return self._n

    def parts(self):
        out = []
        for e, f in self._pairs:
            out.extend([e] * f)
        return out

    def largest(self):
        return self._pairs[-1][0] if self._pairs else 0

    def freeze(self):
        return Partition(self.total, self._pairs)


def _need_depth(total):
    # recursion depth tracks the number of parts, at most `total`
    limit = sys.getrecursionlimit()
    if total + 100 > limit:
        sys.setrecursionlimit(total + 200)


def brcp_visit(total, visitor, min_element=1, max_element=0, max_multiplicity=0,
               exact_parts=-1, max_parts=0, allowed=None, branch=-1):
    """Visit partitions in tree order under the given constraints.

    Returns the number of partitions visited.
    """
    if total == 0:
        if branch > 0:
            return 0
        if exact_parts > 0:
            return 0
        visitor(_View(0, [0], [], [0]))
        return 1
    if exact_parts == 0:
        return 0
    _need_depth(total)

    mult = [0] * (total + 1)
    support = []
    parts = [0]
    view = _View(total, mult, support, parts)
    count = 0

    part_cap = _part_cap(exact_parts, max_parts)

    def terminal_ok(p):
        if p < min_element:
            return False
        if max_element and p > max_element:
            return False
        if allowed is not None and not allowed[p]:
            return False
        if max_multiplicity and mult[p] + 1 > max_multiplicity:
            return False
        if part_cap and parts[0] + 1 > part_cap:
            return False
        if exact_parts >= 0 and parts[0] + 1 != exact_parts:
            return False
        return True

    def add(e):
        if mult[e] == 0:
            support.append(e)
        mult[e] += 1
        parts[0] += 1

    def remove(e):
        mult[e] -= 1
        if mult[e] == 0:
            support.pop()
        parts[0] -= 1

    def descend(p, q):
        nonlocal count
        if terminal_ok(p):
            add(p)
            visitor(view)
            count += 1
            remove(p)
        hi = p // 2
        if max_element and max_element < hi:
            hi = max_element
        for j in range(q, hi + 1):
            if allowed is not None and not allowed[j]:
                continue
            if max_multiplicity and mult[j] + 1 > max_multiplicity:
                continue
            if part_cap:
                if parts[0] + 2 > part_cap:
                    break
                if exact_parts >= 0 and p - j < j * (exact_parts - parts[0] - 1):
                    continue
            add(j)
            descend(p - j, j)
            remove(j)

    q0 = min_element
    if branch < 0:
        descend(total, q0)
    elif branch == 0:
        if terminal_ok(total):
            add(total)
            visitor(view)
            count += 1
            remove(total)
    else:
        j = branch
        if (q0 <= j <= total // 2
                and not (max_element and j > max_element)
                and not (allowed is not None and not allowed[j])
                and not (part_cap and 2 > part_cap)):
            add(j)
            descend(total - j, j)
            remove(j)
    return count


def _part_cap(exact_parts, max_parts):
    if exact_parts > 0 and max_parts:
        return min(exact_parts, max_parts)
    if exact_parts > 0:
        return exact_parts
    return max_parts


def brcp_count(total, min_element=1, max_element=0, max_multiplicity=0,
               exact_parts=-1, max_parts=0, allowed=None, branch=-1):
    """Count without constructing views (same traversal as brcp_visit)."""
    if total == 0:
        return 0 if (branch > 0 or exact_parts > 0) else 1
    if exact_parts == 0:
        return 0
    _need_depth(total)

    part_cap = _part_cap(exact_parts, max_parts)
    mult = [0] * (total + 1)
    parts = 0

    # unconstrained fast path: every node of the tree is one partition
    plain = (min_element == 1 and not max_element and not max_multiplicity
             and exact_parts < 0 and not max_parts and allowed is None)

    def descend_plain(p, q):
        n = 1
        for j in range(q, p // 2 + 1):
            n += descend_plain(p - j, j)
        return n

    if plain:
        if branch < 0:
            return descend_plain(total, 1)
        if branch == 0:
            return 1
        if 1 <= branch <= total // 2:
            return descend_plain(total - branch, branch)
        return 0

    def descend(p, q):
        nonlocal parts
        n = 0
        if (p >= min_element
                and not (max_element and p > max_element)
                and (allowed is None or allowed[p])
                and not (max_multiplicity and mult[p] + 1 > max_multiplicity)
                and not (part_cap and parts + 1 > part_cap)
                and not (exact_parts >= 0 and parts + 1 != exact_parts)):
            n = 1
        hi = p // 2
        if max_element and max_element < hi:
            hi = max_element
        for j in range(q, hi + 1):
            if allowed is not None and not allowed[j]:
                continue
            if max_multiplicity and mult[j] + 1 > max_multiplicity:
                continue
            if part_cap:
                if parts + 2 > part_cap:
                    break
                if exact_parts >= 0 and p - j < j * (exact_parts - parts - 1):
                    continue
            mult[j] += 1
            parts += 1
            n += descend(p - j, j)
            mult[j] -= 1
            parts -= 1
        return n

    if branch < 0:
        return descend(total, min_element)
    if branch == 0:
        return _terminal_count(total, min_element, max_element, exact_parts,
                               part_cap, allowed)
    j = branch
    if (min_element <= j <= total // 2
            and not (max_element and j > max_element)
            and (allowed is None or allowed[j])
            and not (part_cap and 2 > part_cap)):
        mult[j] += 1
        parts += 1
        return descend(total - j, j)
    return 0


def _terminal_count(total, min_element, max_element, exact_parts, part_cap,
                    allowed):
    if total < min_element:
        return 0
    if max_element and total > max_element:
        return 0
    if allowed is not None and not allowed[total]:
        return 0
    if part_cap and 1 > part_cap:
        return 0
    if exact_parts >= 0 and exact_parts != 1:
        return 0
    return 1


def brcp_first_branches(total, min_element=1):
    """First-level subtree labels in visit order: 0, then each smallest
    element j."""
    return [0] + list(range(min_element, total // 2 + 1))


# -- reverse lexicographic (largest part first) ------------------------------

def revlex_visit(total, visitor):
    """Visit in reverse lexicographic order of the standard representation."""
    if total == 0:
        visitor(_SeqView(0, [], 0))
        return 1
    count = 0
    n = total
    a = [0] * (total + 1)
    m = 1
    while True:
        a[m] = n
        q = m - (1 if n == 1 else 0)
        while True:
            pairs = _group_desc(a, m)
            visitor(_SeqView(total, pairs, m))
            count += 1
            if a[q] != 2:
                break
            a[q] = 1
            q -= 1
            m += 1
            a[m] = 1
        if q == 0:
            return count
        x = a[q] - 1
        a[q] = x
        n = m - q + 1
        m = q + 1
        while n > x:
            a[m] = x
            m += 1
            n -= x


def revlex_count(total):
    if total == 0:
        return 1
    count = 0
    n = total
    a = [0] * (total + 1)
    m = 1
    while True:
        a[m] = n
        q = m - (1 if n == 1 else 0)
        while True:
            count += 1
            if a[q] != 2:
                break
            a[q] = 1
            q -= 1
            m += 1
            a[m] = 1
        if q == 0:
            return count
        x = a[q] - 1
        a[q] = x
        n = m - q + 1
        m = q + 1
        while n > x:
            a[m] = x
            m += 1
            n -= x


def _group_desc(a, m):
    # a[1..m] is non-increasing; produce ascending (element, freq) pairs
    pairs = []
    i = m
    while i >= 1:
        e = a[i]
        j = i
        while j >= 1 and a[j] == e:
            j -= 1
        pairs.append((e, i - j))
        i = j
    return pairs


# -- ascending parts ---------------------------------------------------------

def ascending_visit(total, visitor):
    """Visit with parts in ascending order, all-ones partition first."""
    if total == 0:
        visitor(_SeqView(0, [], 0))
        return 1
    count = 0
    a = [0] * (total + 2)
    a[1] = total
    c = 1
    while c != 0:
        x = a[c - 1] + 1
        y = a[c] - 1
        c -= 1
        while x <= y:
            a[c] = x
            y -= x
            c += 1
        a[c] = x + y
        pairs = _group_asc(a, c)
        visitor(_SeqView(total, pairs, c + 1))
        count += 1
    return count


def ascending_count(total):
    if total == 0:
        return 1
    count = 0
    a = [0] * (total + 2)
    a[1] = total
    c = 1
    while c != 0:
        x = a[c - 1] + 1
        y = a[c] - 1
        c -= 1
        while x <= y:
            a[c] = x
            y -= x
            c += 1
        a[c] = x + y
        count += 1
    return count


def _group_asc(a, c):
    # a[0..c] is non-decreasing
    pairs = []
    i = 0
    while i <= c:
        e = a[i]
        j = i
        while j <= c and a[j] == e:
            j += 1
        pairs.append((e, j - i))
        i = j
    return pairs
