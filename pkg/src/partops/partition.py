"""The multiplicity representation of one integer partition.

A partition of ``total`` is stored as ascending ``(element, multiplicity)``
pairs; absent elements have multiplicity zero.  ``Partition`` objects are
immutable and hashable.  Enumeration visitors receive lightweight *views* over
a reused buffer instead (see the kernel modules); a view supports the same
read API plus ``freeze()``, which returns a real :class:`Partition`.
"""

from __future__ import annotations

import json
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple

__all__ = ["Partition", "format_partition", "partition_json_line"]


class Partition:
    """Immutable partition in multiplicity representation."""

    __slots__ = ("total", "pairs")

    def __init__(self, total: int, pairs: Iterable[Tuple[int, int]]):
        pairs = tuple(sorted((int(e), int(f)) for e, f in pairs))
        s = 0
        last = 0
        for e, f in pairs:
            if e <= last:
                raise ValueError(f"duplicate or non-positive element {e}")
            if f < 1:
                raise ValueError(f"multiplicity of {e} must be >= 1, got {f}")
            last = e
            s += e * f
        if s != total:
            raise ValueError(f"parts sum to {s}, expected {total}")
        object.__setattr__(self, "total", total)
        object.__setattr__(self, "pairs", pairs)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        mult: Dict[int, int] = {}
        for p in parts:
            mult[p] = mult.get(p, 0) + 1
        return cls(sum(e * f for e, f in mult.items()), mult.items())

    @classmethod
    def from_multiplicities(cls, mult: Mapping[int, int]) -> "Partition":
        items = [(e, f) for e, f in mult.items() if f]
        return cls(sum(e * f for e, f in items), items)

    # -- view-compatible read API --------------------------------------

    def items(self) -> Tuple[Tuple[int, int], ...]:
        """Ascending (element, multiplicity) pairs."""
        return self.pairs

    def elements(self) -> List[int]:
        return [e for e, _ in self.pairs]

    def multiplicity(self, element: int) -> int:
        for e, f in self.pairs:
            if e == element:
                return f
        return 0

    @property
    def num_parts(self) -> int:
        return sum(f for _, f in self.pairs)

    def parts(self) -> List[int]:
        """Expanded ascending list of parts."""
        out: List[int] = []
        for e, f in self.pairs:
            out.extend([e] * f)
        return out

    def largest(self) -> int:
        return self.pairs[-1][0] if self.pairs else 0

    def freeze(self) -> "Partition":
        return self

    def to_dict(self) -> Dict[int, int]:
        return dict(self.pairs)

    # -- protocol ------------------------------------------------------

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.total == other.total and self.pairs == other.pairs

    def __hash__(self):
        return hash((self.total, self.pairs))

    def __repr__(self):
        return f"Partition({self.total}, {list(self.pairs)!r})"


def format_partition(p, *, descending: bool = False) -> str:
    """Render ``f(e)`` pairs separated (and terminated) by single spaces.

    Ascending elements by default, e.g. ``"3(1) 1(2) "`` for {1,1,1,2}; the
    ``descending`` form lists the largest element first (used for conjugate
    partitions).
    """
    pairs = list(p.items())
    if descending:
        pairs.reverse()
    return "".join(f"{f}({e}) " for e, f in pairs)


def partition_json_line(p) -> str:
    """One-line JSON object with fields total, parts, num_parts."""
    return json.dumps(
        {
            "total": p.total,
            "parts": {str(e): f for e, f in p.items()},
            "num_parts": p.num_parts,
        },
        separators=(",", ":"),
    )
