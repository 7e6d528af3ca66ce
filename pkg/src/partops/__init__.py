"""partops: exact integer-partition enumeration, weighted partition sums,
and power-series coefficient extraction over exact rings."""

from .partition import Partition, format_partition, partition_json_line
from .rings import (MultiPoly, PoleError, Polynomial, Rational,
                    RationalFunction, RingMismatchError, RingTag, pochhammer,
                    poly_eval, ring_add, ring_mul, ring_neg, ring_of)
from .counting import (count_at_most_parts, count_partitions,
                       count_with_parts, is_pentagonal, pentagonal_index)
from .enumeration import Order, enumerate_partitions, iter_partitions
from .classes import (ALL, DISTINCT, EVEN_ELEMENTS, ODD_ELEMENTS,
                      PENTAGONAL_ELEMENTS, PartitionClass, count_class,
                      enumerate_class, is_self_conjugate, iter_class,
                      max_distinct_parts, transpose)
from .operator_engine import (MULTINOMIAL, PHASE, UNIT, ElementAssign,
                              ElementProduct, OuterFactor,
                              PerElementPochhammer, PochhammerTotal, Product,
                              Weight, apply_weight, stirling_first)
from .series_expansion import (CoefficientTable, SeriesSpec,
                               check_cauchy_inverse, convolve,
                               derivatives_at_zero, expand, expand_power,
                               invert)

__version__ = "0.1.0"
