import random
from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rational_ratios, ratios
from goldenrect.errors import DomainError, MalformedMeasure
from goldenrect.exactnum import ONE, PHI, ZERO, GoldenNumber, SpiralMeasure, gn_phi_pow
from goldenrect.measures import (
    closed_form_A,
    closed_form_B,
    closed_form_L,
    closed_forms,
    cumulative,
    derive_C,
    derive_D,
    direct_sums,
    golden_totals,
    measure_report,
    per_step,
    pi_phi_check,
    step_measures,
)
from goldenrect.subdivision import layout, square_capacity


def brute_totals(m, n, b=1):
    """Independent summation straight from the per-step definitions."""
    m, b = GoldenNumber(m) if not isinstance(m, GoldenNumber) else m, GoldenNumber(b)
    xs = [m * b, b]
    while len(xs) < n + 2:
        xs.append(xs[-2] - xs[-1])
    xs = xs[1:]
    L = sum((x for x in xs[:n]), ZERO) / 2
    A = sum((x * x for x in xs[:n]), ZERO) / 4
    B = sum((xs[k - 1] * xs[k] for k in range(1, n + 1)), ZERO)
    return L, A, B


# -- examples ---------------------------------------------------------------


@pytest.mark.parametrize("b", [ONE, GoldenNumber(3), PHI])
def test_golden_first_step(b):
    sm = step_measures(b, b / PHI, 1)
    assert sm.L == SpiralMeasure(v=b / 2)
    assert sm.D == SpiralMeasure(w=b)
    assert sm.B == SpiralMeasure(u=b * b / PHI)


def test_step_measures_domain():
    with pytest.raises(DomainError):
        step_measures(0, 1, 1)
    assert step_measures(Fraction(1, 2), 0, 3).B == SpiralMeasure()


def test_step_component_shape():
    sm = step_measures(Fraction(3, 7), Fraction(1, 7), 2)
    x = GoldenNumber(Fraction(3, 7))
    assert sm.A == SpiralMeasure(v=x * x / 4)
    assert sm.C == SpiralMeasure(u=x * x, v=-x * x / 4)
    assert sm.C.u == 4 * sm.A.v and sm.C.v == -sm.A.v


def test_cumulative_examples():
    t = layout(Fraction(3, 2), 1, 3)
    assert cumulative(t, 3).B == SpiralMeasure(u=GoldenNumber(Fraction(3, 4)))
    assert cumulative(t, 1) == step_measures(t.xs[0], t.xs[1], 1)
    with pytest.raises(DomainError):
        cumulative(t, 4)
    with pytest.raises(DomainError):
        cumulative(t, 0)


def test_golden_totals_examples():
    one = golden_totals(1)
    assert one.B == SpiralMeasure(u=ONE)
    assert one.A == SpiralMeasure(v=PHI / 4)
    assert one.L == SpiralMeasure(v=PHI * PHI / 2)
    assert one.C == SpiralMeasure(u=PHI, v=-PHI / 4)
    assert one.D == SpiralMeasure(w=PHI * PHI)
    two = golden_totals(2)
    for name in ("L", "D"):
        assert getattr(two, name) == 2 * getattr(one, name)
    for name in ("A", "B", "C"):
        assert getattr(two, name) == 4 * getattr(one, name)
    with pytest.raises(DomainError):
        golden_totals(0)


def test_closed_form_examples():
    m = GoldenNumber(Fraction(3, 2))
    assert closed_form_L(m, 3) == SpiralMeasure(v=GoldenNumber(1))
    assert closed_form_A(m, 3) == SpiralMeasure(v=GoldenNumber(Fraction(3, 8)))
    assert closed_form_B(m, 3) == SpiralMeasure(u=GoldenNumber(Fraction(3, 4)))


@given(ratios)
def test_two_step_closed_forms(m):
    assert closed_form_L(m, 2) == SpiralMeasure(v=m / 2)
    assert closed_form_B(m, 2) == SpiralMeasure(u=(m - 1) + (m - 1) * (2 - m))


@pytest.mark.parametrize("n", range(1, 9))
def test_fibonacci_family_identities(n):
    from goldenrect.fibonacci import fib

    m = Fraction(fib(2 * n), fib(2 * n - 1))
    assert closed_form_A(m, 2 * n) == SpiralMeasure(v=GoldenNumber(m) / 4)
    m = Fraction(fib(2 * n + 1), fib(2 * n))
    assert closed_form_B(m, 2 * n) == SpiralMeasure(u=ONE)


def test_fibonacci_family_A_tends_to_golden():
    from goldenrect.fibonacci import fib

    n = 30
    A = closed_form_A(Fraction(fib(2 * n), fib(2 * n - 1)), 2 * n)
    assert abs(float(A.v) - float(PHI) / 4) < 1e-12


def test_closed_form_L_bracket_tends_to_phi_squared():
    bracket = closed_form_L(PHI, 60).v * 2
    assert abs(float(bracket) - float(PHI * PHI)) < 1e-9


def test_derive_examples():
    assert derive_C(SpiralMeasure(v=GoldenNumber(Fraction(1, 4)))) == SpiralMeasure(
        u=ONE, v=GoldenNumber(Fraction(-1, 4))
    )
    assert derive_C(SpiralMeasure()) == SpiralMeasure()
    assert derive_D(SpiralMeasure()) == SpiralMeasure()
    assert derive_D(SpiralMeasure(v=PHI * PHI / 2)) == SpiralMeasure(w=PHI * PHI)


@pytest.mark.parametrize("bad", [SpiralMeasure(u=ONE), SpiralMeasure(v=ONE, w=ONE)])
def test_derive_rejects_malformed(bad):
    with pytest.raises(MalformedMeasure):
        derive_C(bad)
    with pytest.raises(MalformedMeasure):
        derive_D(bad)


def test_closed_forms_need_two_steps():
    with pytest.raises(DomainError):
        closed_form_L(Fraction(3, 2), 1)


def test_pi_phi_check():
    rep = pi_phi_check()
    assert rep.ratio_text.startswith("1.19998")
    assert abs(Decimal(rep.gap_text)) <= Decimal("3e-5")
    assert rep.agreeing_decimals == 4
    assert rep.phi_text.startswith("1.6180")
    assert rep.sqrt_5pi_over_6.startswith("1.6180")
    assert not rep.phi_text.startswith(rep.sqrt_5pi_over_6[:7])


# -- properties --------------------------------------------------------------


def test_oracle_equivalence_random_rationals():
    rng = random.Random(12)
    for _ in range(20):
        q = rng.randint(2, 10**6)
        m = Fraction(rng.randint(q + 1, 2 * q - 1), q)
        for n in range(2, 13):
            L, A, B = brute_totals(m, n)
            closed = closed_forms(m, n)
            assert closed.L == SpiralMeasure(v=L)
            assert closed.A == SpiralMeasure(v=A)
            assert closed.B == SpiralMeasure(u=B)
            assert closed == direct_sums(m, n)


@given(ratios, st.integers(min_value=2, max_value=20))
def test_closed_forms_match_direct_sums(m, n):
    assert (closed_forms(m, n) - direct_sums(m, n)).is_zero()


@given(rational_ratios)
@settings(max_examples=50)
def test_report_deviation_is_zero(m):
    t = layout(m, 1, square_capacity(m))
    rep = measure_report(t)
    assert rep.deviation.is_zero()
    summed = per_step(t)[0]
    for sm in per_step(t)[1:]:
        summed = summed + sm
    assert (summed - rep.cumulative).is_zero()


@pytest.mark.parametrize("n", range(1, 16))
def test_golden_geometric_series(n):
    t = layout(PHI, 1, n)
    total = cumulative(t, n)
    ratio = 1 - gn_phi_pow(-n)
    assert total.L == SpiralMeasure(v=ratio / (1 - gn_phi_pow(-1)) / 2)
    assert total.A == SpiralMeasure(v=(1 - gn_phi_pow(-2 * n)) / (1 - gn_phi_pow(-2)) / 4)
    steps = per_step(t)
    for a, b in zip(steps, steps[1:]):
        assert b.L.v == a.L.v * gn_phi_pow(-1)
        assert b.A.v == a.A.v * gn_phi_pow(-2)
        assert b.C.u == a.C.u * gn_phi_pow(-2)
        assert b.B.u == a.B.u * gn_phi_pow(-2)


def test_golden_B_total_is_first_term_times_phi():
    assert golden_totals(1).B.u == step_measures(1, PHI - 1, 1).B.u * PHI


@given(ratios, st.fractions(min_value=Fraction(1, 50), max_value=50, max_denominator=50), st.integers(2, 12))
def test_homogeneity(m, b, n):
    one, scaled = direct_sums(m, n, 1), direct_sums(m, n, b)
    for name in ("L", "D"):
        assert getattr(scaled, name) == b * getattr(one, name)
    for name in ("A", "B", "C"):
        assert getattr(scaled, name) == b * b * getattr(one, name)
    assert closed_forms(m, n, b) == scaled


@given(ratios, st.integers(1, 15))
def test_C_and_D_follow_A_and_L(m, n):
    tot = direct_sums(m, n)
    assert tot.C == derive_C(tot.A)
    assert tot.D == derive_D(tot.L)


def test_partial_sums_converge():
    t = layout(PHI, 1, 50)
    tot = cumulative(t, 50)
    lim = golden_totals(1)
    assert abs(float(tot.L) - float(lim.L)) <= 1e-9
    assert abs(float(tot.B) - float(lim.B)) <= 1e-9
    assert abs(float(tot.A) - float(lim.A)) <= 1e-9
