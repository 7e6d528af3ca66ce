# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; behavioural twin of partops._kernel_py.

Same functions, same constraint conventions, same visit orders.  The hot
state (multiplicity buffer, support stack, part counter) lives in C arrays;
visitors receive a single reused view object over them.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

from .partition import Partition

BACKEND_NAME = "compiled"


cdef class _CView:
    """Read view over the enumerator's reused C buffers."""

    cdef int *mult
    cdef int *support
    cdef int n_support
    cdef int n_parts
    cdef readonly int total

    def items(self):
        cdef int i
        return [(self.support[i], self.mult[self.support[i]])
                for i in range(self.n_support)]

    def elements(self):
        cdef int i
        return [self.support[i] for i in range(self.n_support)]

    def multiplicity(self, int element):
        if 0 < element <= self.total:
            return self.mult[element]
        return 0

    @property
    def num_parts(self):
        return self.n_parts

    def parts(self):
        cdef int i, e
        out = []
        for i in range(self.n_support):
            e = self.support[i]
            out.extend([e] * self.mult[e])
        return out

    def largest(self):
        if self.n_support == 0:
            return 0
        return self.support[self.n_support - 1]

    def freeze(self):
        return Partition(self.total, self.items())


cdef class _Walker:
    """Owns the buffers and the recursion for one enumeration run."""

    cdef int total
    cdef int min_element
    cdef int max_element
    cdef int max_mult
    cdef int exact_parts
    cdef int part_cap
    cdef int *mult
    cdef int *support
    cdef int n_support
    cdef int n_parts
    cdef const unsigned char[:] allowed
    cdef bint has_mask
    cdef object visitor
    cdef _CView view
    cdef long long count

    def __cinit__(self, int total):
        self.mult = <int *> PyMem_Malloc((total + 1) * sizeof(int))
        self.support = <int *> PyMem_Malloc((total + 1) * sizeof(int))
        if self.mult == NULL or self.support == NULL:
            raise MemoryError()
        cdef int i
        for i in range(total + 1):
            self.mult[i] = 0
        self.total = total
        self.n_support = 0
        self.n_parts = 0
        self.count = 0

    def __dealloc__(self):
        if self.mult != NULL:
            PyMem_Free(self.mult)
        if self.support != NULL:
            PyMem_Free(self.support)

    cdef void _setup(self, int min_element, int max_element, int max_mult,
                     int exact_parts, int max_parts, allowed, visitor):
        self.min_element = min_element
        self.max_element = max_element
        self.max_mult = max_mult
        self.exact_parts = exact_parts
        if exact_parts > 0 and max_parts:
            self.part_cap = min(exact_parts, max_parts)
        elif exact_parts > 0:
            self.part_cap = exact_parts
        else:
            self.part_cap = max_parts
        if allowed is None:
            self.has_mask = False
            self.allowed = None
        else:
            self.has_mask = True
            self.allowed = bytes(allowed)
        self.visitor = visitor
        if visitor is not None:
            self.view = _CView.__new__(_CView)
            self.view.mult = self.mult
            self.view.support = self.support
            self.view.total = self.total

    cdef inline bint _terminal_ok(self, int p):
        if p < self.min_element:
            return False
        if self.max_element and p > self.max_element:
            return False
        if self.has_mask and not self.allowed[p]:
            return False
        if self.max_mult and self.mult[p] + 1 > self.max_mult:
            return False
        if self.part_cap and self.n_parts + 1 > self.part_cap:
            return False
        if self.exact_parts >= 0 and self.n_parts + 1 != self.exact_parts:
            return False
        return True

    cdef inline void _add(self, int e):
        if self.mult[e] == 0:
            self.support[self.n_support] = e
            self.n_support += 1
        self.mult[e] += 1
        self.n_parts += 1

    cdef inline void _remove(self, int e):
        self.mult[e] -= 1
        if self.mult[e] == 0:
            self.n_support -= 1
        self.n_parts -= 1

    cdef void _emit(self):
        self.count += 1
        if self.visitor is not None:
            self.view.n_support = self.n_support
            self.view.n_parts = self.n_parts
            self.visitor(self.view)

    cdef void _descend(self, int p, int q):
        cdef int j, hi
        if self._terminal_ok(p):
            self._add(p)
            self._emit()
            self._remove(p)
        hi = p >> 1
        if self.max_element and self.max_element < hi:
            hi = self.max_element
        for j in range(q, hi + 1):
            if self.has_mask and not self.allowed[j]:
                continue
            if self.max_mult and self.mult[j] + 1 > self.max_mult:
                continue
            if self.part_cap:
                if self.n_parts + 2 > self.part_cap:
                    break
                if (self.exact_parts >= 0
                        and p - j < j * (self.exact_parts - self.n_parts - 1)):
                    continue
            self._add(j)
            self._descend(p - j, j)
            self._remove(j)

    cdef long long run(self, int branch):
        cdef int j
        if branch < 0:
            self._descend(self.total, self.min_element)
        elif branch == 0:
            if self._terminal_ok(self.total):
                self._add(self.total)
                self._emit()
                self._remove(self.total)
        else:
            j = branch
            if (self.min_element <= j <= self.total >> 1
                    and not (self.max_element and j > self.max_element)
                    and not (self.has_mask and not self.allowed[j])
                    and not (self.part_cap and 2 > self.part_cap)):
                self._add(j)
                self._descend(self.total - j, j)
                self._remove(j)
        return self.count


cdef long long _plain_count(int p, int q) noexcept nogil:
    cdef long long n = 1
    cdef int j
    for j in range(q, (p >> 1) + 1):
        n += _plain_count(p - j, j)
    return n


def brcp_visit(int total, visitor, int min_element=1, int max_element=0,
               int max_multiplicity=0, int exact_parts=-1, int max_parts=0,
               allowed=None, int branch=-1):
    """Visit partitions in tree order under the given constraints."""
    if total == 0:
        if branch > 0 or exact_parts > 0:
            return 0
        from ._kernel_py import _View
        visitor(_View(0, [0], [], [0]))
        return 1
    if exact_parts == 0:
        return 0
    cdef _Walker w = _Walker(total)
    w._setup(min_element, max_element, max_multiplicity, exact_parts,
             max_parts, allowed, visitor)
    return w.run(branch)


def brcp_count(int total, int min_element=1, int max_element=0,
               int max_multiplicity=0, int exact_parts=-1, int max_parts=0,
               allowed=None, int branch=-1):
    """Count without visiting (same traversal as brcp_visit)."""
    if total == 0:
        return 0 if (branch > 0 or exact_parts > 0) else 1
    if exact_parts == 0:
        return 0
    if (min_element == 1 and max_element == 0 and max_multiplicity == 0
            and exact_parts < 0 and max_parts == 0 and allowed is None):
        if branch < 0:
            return _plain_count(total, 1)
        if branch == 0:
            return 1
        if 1 <= branch <= total // 2:
            return _plain_count(total - branch, branch)
        return 0
    cdef _Walker w = _Walker(total)
    w._setup(min_element, max_element, max_multiplicity, exact_parts,
             max_parts, allowed, None)
    return w.run(branch)


def brcp_first_branches(int total, int min_element=1):
    return [0] + list(range(min_element, total // 2 + 1))


# -- reverse lexicographic ----------------------------------------------------

from ._kernel_py import _SeqView, _group_asc, _group_desc


def revlex_visit(int total, visitor):
    if total == 0:
        visitor(_SeqView(0, [], 0))
        return 1
    cdef long long count = 0
    cdef int n = total, m = 1, q, x
    cdef int *a = <int *> PyMem_Malloc((total + 1) * sizeof(int))
    if a == NULL:
        raise MemoryError()
    cdef list buf
    try:
        while True:
            a[m] = n
            q = m - (1 if n == 1 else 0)
            while True:
                buf = [a[i] for i in range(1, m + 1)]
                visitor(_SeqView(total, _group_desc([0] + buf, m), m))
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
    finally:
        PyMem_Free(a)


def revlex_count(int total):
    if total == 0:
        return 1
    cdef long long count = 0
    cdef int n = total, m = 1, q, x
    cdef int *a = <int *> PyMem_Malloc((total + 1) * sizeof(int))
    if a == NULL:
        raise MemoryError()
    try:
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
    finally:
        PyMem_Free(a)


# -- ascending ----------------------------------------------------------------

def ascending_visit(int total, visitor):
    if total == 0:
        visitor(_SeqView(0, [], 0))
        return 1
    cdef long long count = 0
    cdef int c = 1, x, y
    cdef int *a = <int *> PyMem_Malloc((total + 2) * sizeof(int))
    if a == NULL:
        raise MemoryError()
    cdef int i
    for i in range(total + 2):
        a[i] = 0
    a[1] = total
    cdef list buf
    try:
        while c != 0:
            x = a[c - 1] + 1
            y = a[c] - 1
            c -= 1
            while x <= y:
                a[c] = x
                y -= x
                c += 1
            a[c] = x + y
            buf = [a[i] for i in range(c + 1)]
            visitor(_SeqView(total, _group_asc(buf, c), c + 1))
            count += 1
        return count
    finally:
        PyMem_Free(a)


def ascending_count(int total):
    if total == 0:
        return 1
    cdef long long count = 0
    cdef int c = 1, x, y
    cdef int *a = <int *> PyMem_Malloc((total + 2) * sizeof(int))
    if a == NULL:
        raise MemoryError()
    cdef int i
    for i in range(total + 2):
        a[i] = 0
    a[1] = total
    try:
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
    finally:
        PyMem_Free(a)
