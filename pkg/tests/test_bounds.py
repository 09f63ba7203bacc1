"""Closed forms, entropy, the root scan, and the exact rational sweeps."""

import math
import random
from fractions import Fraction

import pytest

from rainbow_lattice.bounds import (binary_entropy, c0_equation_gap, delta_l,
                                    delta_sequence, eq_inequality_check, eq_sweep,
                                    formula_A2, g_of_l, known_value, m_of_l,
                                    solve_c0, squared_ratio_product)


def test_m_of_l():
    assert m_of_l(1) == 0
    assert m_of_l(2) == 2
    assert m_of_l(3) == 3
    assert m_of_l(6) == 4
    assert m_of_l(7) == 5
    with pytest.raises(ValueError):
        m_of_l(0)


def test_formula_A2_spots():
    assert formula_A2(4, 2).value == 3
    assert formula_A2(6, 3).value == 3
    assert formula_A2(5, 2).value == 5
    fv = formula_A2(4, 3)
    assert not fv.applicable and fv.value is None


def test_formula_A2_matches_two_color_closed_forms():
    for n in range(4, 31, 2):
        assert formula_A2(n, 2).value == 2 ** (n // 2) - 1
    for n in range(5, 31, 2):
        assert formula_A2(n, 2).value == 2 ** (n // 2) + 1


def test_formula_A2_small_n_caveat():
    assert formula_A2(2, 2).caveat
    assert formula_A2(3, 2).caveat
    assert not formula_A2(4, 2).caveat


def test_binary_entropy():
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(0.0) == 0.0 == binary_entropy(1.0)
    assert abs(binary_entropy(1 / 3) - (math.log2(3) - 2 / 3)) < 1e-12
    rng = random.Random(0)
    for _ in range(10_000):
        x = rng.random()
        h = binary_entropy(x)
        assert abs(h - binary_entropy(1 - x)) < 1e-12
        assert 0.0 <= h <= 1.0
    with pytest.raises(ValueError):
        binary_entropy(1.5)
    with pytest.raises(ValueError):
        binary_entropy(-0.1)


def test_c0_gap_behavior():
    # positive at 1/3 (the inner argument is exactly 1/2 there) ...
    g_third = c0_equation_gap(1 / 3)
    assert abs(g_third - (binary_entropy(1 / 3) - 2 / 3)) < 1e-12
    assert g_third > 0
    # ... and vanishing toward the left endpoint
    assert abs(c0_equation_gap(1e-6)) < 1e-9


def test_solve_c0_scan():
    out = solve_c0(tol=1e-10)
    assert all(r["residual"] < 1e-10 for r in out["roots"])
    assert isinstance(out["in_stated_interval"], bool)
    # the scan finds no sign change in (0, 1/2): the gap is strictly positive
    assert out["roots"] == [] and out["note"]
    assert not out["in_stated_interval"]
    with pytest.raises(ValueError):
        solve_c0(tol=0)


def test_c0_gap_positive_on_grid():
    x = 1e-3
    while x < 0.5:
        assert c0_equation_gap(x) > 0
        x += 1e-3


def test_eq_inequality_examples():
    out = eq_inequality_check(2, 1)
    assert out["lhs"] == Fraction(3, 4) and out["rhs"] == Fraction(5, 6)
    assert out["holds"]
    for l in (3, 10, 57):
        out = eq_inequality_check(l, l - 1)
        assert out["lhs"] == Fraction(l - 1, l) + Fraction(1, l * l)
    with pytest.raises(ValueError):
        eq_inequality_check(2, 2)
    with pytest.raises(ValueError):
        eq_inequality_check(1, 1)


def test_eq_sweep_l200():
    assert eq_sweep(200) == []
    # the incremental sweep agrees with the point evaluation
    for l, i in ((2, 1), (7, 3), (50, 49)):
        assert eq_inequality_check(l, i)["holds"]


def test_telescoping_l500():
    for l in range(2, 501):
        assert g_of_l(l) == Fraction(1, l * l)


def test_delta_strictly_decreasing_l200():
    for l in range(3, 201):
        vals = delta_sequence(l)
        assert all(a > b for a, b in zip(vals, vals[1:])), l
        assert vals[0] == delta_l(l, 1) and vals[-1] == delta_l(l, l - 1)


def test_delta_consistent_with_eq_differences():
    # f(l,i+1) - f(l,i) = 1/l - delta(i+1), exactly
    for l in (3, 5, 12):
        for i in range(1, l - 1):
            f_i = Fraction(i, l) + squared_ratio_product(l, i)
            f_next = Fraction(i + 1, l) + squared_ratio_product(l, i + 1)
            assert f_next - f_i == Fraction(1, l) - delta_l(l, i + 1)


def test_known_value_table():
    assert known_value(5, 2, "A2").value == 5
    assert known_value(4, 4, "P4").value == 4
    assert not known_value(7, 3, "V2").applicable
    assert known_value(4, 2, "P2").value == 4
    assert known_value(4, 2, "P2", "total").value == 0
    assert known_value(5, 3, "P3", "total").value == 8
    assert not known_value(5, 3, "P3", "partial").applicable
    assert known_value(3, 3, "W2,P3,V2").value == 2      # order-insensitive key
    assert known_value(6, 4, "D2").value == known_value(6, 4, "D2", "total").value == 16
    assert known_value(2, 2, "A2").caveat
    assert known_value(10, 5, "P5").value == 1024 // 5
    with pytest.raises(ValueError):
        known_value(3, 2, "A2", "half")
