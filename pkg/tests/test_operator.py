import math
import random
from fractions import Fraction as F

import pytest

from partops import (MULTINOMIAL, PHASE, UNIT, ElementAssign,
                     ElementProduct, MultiPoly, OuterFactor, PartitionClass,
                     PerElementPochhammer, PochhammerTotal, Polynomial,
                     Product, RingMismatchError, apply_weight,
                     count_partitions, pochhammer, stirling_first)


def harmonic(k):
    return sum(F(1, j) for j in range(1, k))


def test_unit_counts_partitions():
    for k in (0, 1, 6, 12):
        assert apply_weight(k, UNIT) == count_partitions(k)


def test_multinomial_powers_of_two():
    for k in range(1, 13):
        assert apply_weight(k, MULTINOMIAL) == 2 ** (k - 1)


def test_phase_multinomial_cancels():
    for k in range(2, 13):
        assert apply_weight(k, PHASE * MULTINOMIAL) == 0


def test_reciprocal_element_assignment_is_one():
    w = ElementAssign(lambda i: F(1, i))
    for k in range(1, 13):
        assert apply_weight(k, w) == 1


def test_two_part_harmonic_sum():
    # sum over two-part partitions of prod 1/(i n_i!) equals H(k-1)/k
    w = ElementAssign(lambda i: F(1, i))
    for k in range(2, 13):
        got = apply_weight(k, w, PartitionClass(exact_parts=2))
        assert got == harmonic(k) / k


def test_geometric_product_identity():
    # phase * (N-1)! / prod n_i!; the closed form follows from the
    # divisor-sum expansion of the logarithm and direct enumeration agrees
    def w(view):
        n = view.num_parts
        den = 1
        for _, f in view.items():
            den *= math.factorial(f)
        return F((-1) ** n * math.factorial(n - 1), den)

    for j in range(0, 5):
        assert apply_weight(2 ** j, w) == -F(1, 2 ** j)


def test_stirling_values():
    assert stirling_first(4, 3) == -6
    assert stirling_first(4, 2) == 11  # 3! (1 + 1/2 + 1/3) by hand
    for k in range(1, 12):
        assert stirling_first(k, k) == 1
        assert stirling_first(k, k - 1) == -math.comb(k, 2)
    for k in range(2, 12):
        assert stirling_first(k, 2) == (-1) ** k * math.factorial(k - 1) * \
            harmonic(k)


def test_fixed_parts_stirling_identity():
    w = ElementAssign(lambda i: F(1, i))
    for k in range(1, 13):
        for j in range(1, k + 1):
            got = apply_weight(k, w, PartitionClass(exact_parts=j))
            want = F((-1) ** (j + k) * stirling_first(k, j),
                     math.factorial(k))
            assert got == want, (k, j)


def test_pochhammer_polynomial_identity():
    alpha = Polynomial.variable("alpha")
    for k in range(0, 11):
        w = ElementAssign(lambda i: alpha * F(1, i))
        got = math.factorial(k) * apply_weight(k, w)
        assert got == pochhammer(alpha, k), k


def test_binomial_truncation():
    for ell in range(0, 9):
        w = ElementAssign(lambda i: F(-ell, i))
        for k in range(1, 13):
            got = apply_weight(k, w)
            if k > ell:
                assert got == 0, (ell, k)
            else:
                assert got == (-1) ** k * math.comb(ell, k), (ell, k)


def test_fixed_parts_decomposition():
    rng = random.Random(42)
    for k in range(1, 16):
        vals = [F(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(k)]
        w = Product([MULTINOMIAL, ElementProduct(vals)])
        full = apply_weight(k, w)
        split = sum(apply_weight(k, w, PartitionClass(exact_parts=j))
                    for j in range(1, k + 1))
        assert full == split, k


def test_first_level_split_reproduces_full_sum():
    # the smallest-element decomposition of the composite-series weight
    rng = random.Random(7)
    for trial in range(50):
        k = rng.randint(1, 12)
        p = [F(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(k)]
        q = [F(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(k + 1)]
        a = F(rng.randint(1, 3))
        outer = [q[n] * a ** n * math.factorial(n) for n in range(k + 1)]
        w = OuterFactor(outer) * ElementAssign(p)
        full = apply_weight(k, w)
        threaded = apply_weight(k, w, threads=3)
        assert full == threaded, (trial, k)


def test_threaded_sum_over_constrained_class():
    w = MULTINOMIAL * ElementAssign(lambda i: F(1, i + 2))
    for klass in (PartitionClass(min_element=2),
                  PartitionClass(distinct=True),
                  PartitionClass(max_element=5, max_parts=4)):
        for k in (0, 5, 12):
            assert apply_weight(k, w, klass) == \
                apply_weight(k, w, klass, threads=3), (klass, k)


def test_pochhammer_total_and_per_element():
    rho = Polynomial.variable("rho")
    view_weights = PochhammerTotal(rho)
    got = apply_weight(3, view_weights)
    # partitions of 3 have N = 1, 2, 3: (-rho)_1 + (-rho)_2 + (-rho)_3
    want = pochhammer(-rho, 1) + pochhammer(-rho, 2) + pochhammer(-rho, 3)
    assert got == want
    assert apply_weight(2, PochhammerTotal(F(2), negate=False)) == \
        pochhammer(F(2), 1) + pochhammer(F(2), 2)
    per = PerElementPochhammer(lambda i: F(1))
    # {1,1}: (-1)_2/2! = 0 ; {2}: (-1)_1 = -1
    assert apply_weight(2, per) == -1


def test_outer_factor_requires_total_table():
    w = OuterFactor([F(1), F(1)]) * ElementAssign(lambda i: F(1))
    with pytest.raises(ValueError):
        apply_weight(3, w)


def test_product_reports_mismatching_factor():
    w = Product([ElementAssign(lambda i: Polynomial.variable("x")),
                 ElementAssign(lambda i: Polynomial.variable("y"))])
    with pytest.raises(RingMismatchError) as err:
        apply_weight(2, w)
    assert "factor 1" in str(err.value)


def test_integer_factors_lift_into_polynomial_ring():
    # N! and 1/n_i! must not force division inside the polynomial ring
    x = Polynomial.variable("x")
    w = Product([MULTINOMIAL, ElementProduct(lambda i: x)])
    got = apply_weight(4, w)
    # sum over partitions of 4 of (N!/prod n_i!) x^N
    want = x + 2 * x ** 2 + x ** 2 + 3 * x ** 3 + x ** 4
    assert got == want


def test_apply_over_multipoly_ring():
    m = MultiPoly.variable(("u", "t"), "u")
    got = apply_weight(2, ElementProduct(lambda i: m))
    assert got == m + m ** 2
